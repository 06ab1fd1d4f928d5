#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <z3orb/verify.hpp>

using namespace z3orb;

namespace {

void require_clean(const VerificationReport& r)
{
    CAPTURE(r.suite);
    CAPTURE(r.level.value());
    if (!r.failures.empty()) CAPTURE(r.failures.front().description);
    REQUIRE(r.passed());
    REQUIRE(r.failures.empty());
    REQUIRE(r.checks_run > 0);
}

} // namespace

TEST_CASE("suite names")
{
    for (Suite s : kAllSuites) CHECK(suite_from_name(suite_name(s)) == s);
    CHECK(suite_name(Suite::Associativity) == "assoc");
    CHECK_FALSE(suite_from_name("all").has_value());
    CHECK_FALSE(suite_from_name("Unit").has_value());
}

TEST_CASE("unit suite")
{
    CHECK(verify_unit(Level(1)).checks_run == 18);
    CHECK(verify_unit(Level(2)).checks_run == 27);
    CHECK(verify_unit(Level(6)).checks_run == 63);
    for (int k = 1; k <= 12; ++k) require_clean(verify_unit(Level(k)));
}

TEST_CASE("commutativity and associativity sweeps")
{
    const auto c1 = verify_commutativity(Level(1));
    CHECK(c1.checks_run == 18 * 18);
    require_clean(c1);
    require_clean(verify_commutativity(Level(4)));
    require_clean(verify_commutativity(Level(8)));

    const auto a1 = verify_associativity(Level(1));
    CHECK(a1.checks_run == 5832);
    CHECK_FALSE(a1.sampled);
    require_clean(a1);
    const auto a2 = verify_associativity(Level(2));
    CHECK(a2.checks_run == 27 * 27 * 27);
    require_clean(a2);
}

TEST_CASE("duality and qdim suites")
{
    for (int k : {1, 3, 5}) {
        require_clean(verify_duality(Level(k)));
        require_clean(verify_qdim_homomorphism(Level(k)));
    }
}

TEST_CASE("lattice oracle")
{
    const auto r = verify_k1_lattice_oracle();
    require_clean(r);
    CHECK(r.checks_run == 324 + 18 + 18 + 18);

    const Level k1(1);
    CHECK(lattice_charge(vacuum(k1)) == 0);
    CHECK(lattice_charge(parse_label("t1:0:0", k1)) == 1);
    CHECK(lattice_charge(parse_label("t2:0:0", k1)) == 2);
    CHECK(lattice_charge(parse_label("t1:1:1", k1)) == 4);
    CHECK(lattice_charge(parse_label("t2:1:2", k1)) == 5);
    CHECK(lattice_charge(parse_label("t1:0:2", k1)) == 13);
    CHECK(lattice_charge(parse_label("t2:1:0", k1)) == 17);
    CHECK_THROWS_AS(lattice_charge(vacuum(Level(2))), Error);
}

TEST_CASE("catalog suite")
{
    for (int k : {1, 2, 12}) require_clean(verify_catalog(Level(k)));
}

TEST_CASE("cap and sampling")
{
    VerifyOptions strict;
    strict.samples = 0;
    CHECK_THROWS_AS(verify_associativity(Level(9), strict), Error);
    CHECK_THROWS_AS(verify_commutativity(Level(13), strict), Error);
    CHECK_NOTHROW(verify_associativity(Level(8), VerifyOptions{.samples = 0}));

    VerifyOptions opts;
    opts.samples = 3000;
    opts.threads = 1;
    const auto one = verify_associativity(Level(10), opts);
    CHECK(one.sampled);
    CHECK(one.checks_run == 3000);
    require_clean(one);

    opts.threads = 3;
    const auto three = verify_associativity(Level(10), opts);
    CHECK(three.checks_run == one.checks_run);
    CHECK(three.failure_count == one.failure_count);

    opts.seed = 1;
    require_clean(verify_duality(Level(11), opts));
    require_clean(verify_qdim_homomorphism(Level(14), opts));

    VerifyOptions low;
    low.cubic_cap = 2;
    low.samples = 500;
    const auto r = verify_associativity(Level(3), low);
    CHECK(r.sampled);
    CHECK(r.checks_run == 500);
}

TEST_CASE("run_suite dispatches")
{
    for (Suite s : kAllSuites) {
        const auto r = run_suite(s, Level(1));
        CHECK(r.suite == suite_name(s));
        require_clean(r);
    }
}
