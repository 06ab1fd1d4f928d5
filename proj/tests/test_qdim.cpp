#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <z3orb/qdim.hpp>

#include <cmath>
#include <numbers>

using namespace z3orb;

namespace {

double sine_qdim(int k, int i)
{
    const double t = std::numbers::pi / (k + 2);
    return std::sin((i + 1) * t) / std::sin(t);
}

double at(const ChebPoly& p, double x)
{
    return static_cast<double>(p.evaluate(Real(x)));
}

} // namespace

TEST_CASE("chebyshev polynomials")
{
    CHECK(cheb_u(0) == ChebPoly::constant(1));
    CHECK(cheb_u(1) == ChebPoly::x());
    CHECK(cheb_u(2) == ChebPoly({-1, 0, 1}));
    CHECK(cheb_u(2).to_string() == "x^2 - 1");

    const double t = std::numbers::pi / 5;
    CHECK(at(cheb_u(2), 2 * std::cos(t)) == doctest::Approx(std::sin(3 * t) / std::sin(t)).epsilon(1e-12));

    for (int n = 0; n <= 20; ++n) {
        CHECK(cheb_u(n).degree() == n);
        CHECK(cheb_u(n).leading() == 1);
        const double th = 0.37;
        CHECK(at(cheb_u(n), 2 * std::cos(th)) ==
              doctest::Approx(std::sin((n + 1) * th) / std::sin(th)).epsilon(1e-9));
    }
}

TEST_CASE("modulus divides the fusion relations and has the right roots")
{
    CHECK(qdim_modulus(Level(1)) == ChebPoly({-1, 1}));
    CHECK(qdim_modulus(Level(2)) == ChebPoly({-2, 0, 1}));
    for (int k = 1; k <= 24; ++k) {
        CAPTURE(k);
        const ChebPoly m = qdim_modulus(Level(k));
        CHECK(m.leading() == 1);
        CHECK(m.degree() == (k + 2) / 2);
        CHECK(cheb_u(k + 1).remainder(m).is_zero());
        CHECK((cheb_u(k) - ChebPoly::constant(1)).remainder(m).is_zero());
        for (int j = 1; j <= k + 1; ++j) {
            const double v = at(m, 2 * std::cos(std::numbers::pi * j / (k + 2)));
            if (j % 2 == 1)
                CHECK(std::abs(v) < 1e-8);
            else
                CHECK(std::abs(v) > 1e-6);
        }
    }
}

TEST_CASE("remainder rejects non-monic divisors")
{
    CHECK_THROWS_AS(cheb_u(3).remainder(ChebPoly({1, 2})), Error);
    CHECK_THROWS_AS(cheb_u(3).remainder(ChebPoly{}), Error);
    CHECK(cheb_u(3).remainder(ChebPoly({0, -1})).is_zero());
}

TEST_CASE("overflow is reported")
{
    ChebPoly p({1, 1});
    bool threw = false;
    try {
        for (int n = 0; n < 100; ++n) p = p * p;
    } catch (const Error& e) {
        threw = e.code() == ErrorCode::Overflow;
    }
    CHECK(threw);
}

TEST_CASE("exact quantum dimensions")
{
    for (int k = 1; k <= 12; ++k) {
        const Level level(k);
        CHECK(qdim_exact(vacuum(level)).is_one());
        CHECK(qdim_exact(make_label(Sector::T1, k, 2, level)).is_one());
        CHECK(std::abs(std::sin(std::numbers::pi * (k + 1) / (k + 2)) - std::sin(std::numbers::pi / (k + 2))) < 1e-12);
    }
    const Level k2(2);
    const auto d = qdim_exact(parse_label("u:1:0", k2));
    CHECK(d.residue() == ChebPoly::x());
    CHECK(static_cast<double>(d.numeric()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    // S_1^2 = S_0 + S_2
    CHECK(d * d == qdim_exact(vacuum(k2)) + qdim_exact(parse_label("u:2:0", k2)));
}

TEST_CASE("numeric quantum dimensions")
{
    CHECK(format_fixed(qdim_numeric(parse_label("u:1:0", Level(1)), 10), 10) == "1.0000000000");
    CHECK(format_fixed(qdim_numeric(parse_label("u:1:0", Level(2)), 10), 10) == "1.4142135624");
    CHECK(format_fixed(qdim_numeric(parse_label("u:2:0", Level(2)), 10), 10) == "1.0000000000");

    // sqrt(2) rounded to 60 places
    const std::string root2 = "1.414213562373095048801688724209698078569671875376948073176680";
    CHECK(format_fixed(qdim_numeric(parse_label("u:1:0", Level(2)), 60), 60) == root2);
    // golden ratio at k = 3
    CHECK(format_fixed(qdim_numeric(parse_label("t1:1:1", Level(3)), 30), 30) == "1.618033988749894848204586834366");

    CHECK_THROWS_AS(qdim_numeric(vacuum(Level(1)), 0), Error);
    CHECK_THROWS_AS(qdim_numeric(vacuum(Level(1)), kMaxDigits + 1), Error);
}

TEST_CASE("exact and numeric agree")
{
    for (int k = 1; k <= 12; ++k) {
        const Level level(k);
        for (const auto& l : enumerate_irreducibles(level)) {
            CAPTURE(l.key());
            const double sine = sine_qdim(k, l.index());
            REQUIRE(static_cast<double>(qdim_exact(l).numeric()) == doctest::Approx(sine).epsilon(1e-12));
            REQUIRE(static_cast<double>(qdim_numeric(l)) == doctest::Approx(sine).epsilon(1e-12));
            REQUIRE(sine > 1 - 1e-12);
            REQUIRE(qdim_exact(l) == qdim_exact(make_label(l.sector(), k - l.index(), l.charge(), level)));
        }
    }
}

TEST_CASE("simple currents")
{
    for (const auto& l : enumerate_irreducibles(Level(1))) CHECK(has_unit_qdim(l));
    CHECK_FALSE(has_unit_qdim(parse_label("u:1:0", Level(2))));
    for (int k = 1; k <= 12; ++k) {
        const Level level(k);
        CHECK(has_unit_qdim(make_label(Sector::T2, k, 1, level)));
        for (const auto& l : enumerate_irreducibles(level))
            REQUIRE(has_unit_qdim(l) == (l.index() == 0 || l.index() == k));
    }
}

TEST_CASE("global dimension")
{
    const auto g1 = global_dimension(Level(1));
    CHECK(g1.exact.residue() == ChebPoly::constant(18));
    CHECK(std::abs(static_cast<double>(g1.numeric) - 18.0) < 1e-12);

    const auto g2 = global_dimension(Level(2));
    CHECK(g2.exact.residue() == ChebPoly::constant(36));
    CHECK(std::abs(static_cast<double>(g2.numeric) - 36.0) < 1e-12);

    for (int k = 1; k <= 12; ++k) {
        const Level level(k);
        double direct = 0;
        for (const auto& l : enumerate_irreducibles(level)) direct += std::pow(sine_qdim(k, l.index()), 2);
        const auto g = global_dimension(level);
        CHECK(std::abs(static_cast<double>(g.numeric) - direct) < 1e-9);
        CHECK(std::abs(static_cast<double>(g.exact.numeric()) - direct) < 1e-9);
    }
}

TEST_CASE("ring operations stay reduced")
{
    const Level k5(5);
    const auto m = qdim_modulus(k5);
    QDimElement acc = qdim_zero(k5);
    for (const auto& l : enumerate_irreducibles(k5)) {
        acc += qdim_exact(l) * qdim_exact(l);
        REQUIRE(acc.residue().degree() < m.degree());
    }
    CHECK(acc == global_dimension(k5).exact);
    CHECK(3 * qdim_exact(vacuum(k5)) == QDimElement(k5, ChebPoly::constant(3)));
    CHECK_THROWS_AS(qdim_exact(vacuum(k5)) + qdim_exact(vacuum(Level(4))), Error);
}
