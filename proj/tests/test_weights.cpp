#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <z3orb/weights.hpp>

using namespace z3orb;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1)
{
    return Rational(n, d);
}

// Weight rows in closed form, written out per sector (k > 1).
Rational table_two(Sector s, int k, int i, int j)
{
    const Rational base = R(i * (i + 2), 4 * (k + 2));
    switch (s) {
    case Sector::U:
        if (i == 0) return j == 0 ? R(0) : R(1);
        if (i == 1) return j == 2 ? R(4 * k + 11, 4 * (k + 2)) : R(3, 4 * (k + 2));
        return base;
    case Sector::T1:
        if (i == 0) return std::array{R(k, 36), R(k + 48, 36), R(k + 24, 36)}[j];
        return base + std::array{R(k - 6 * i, 36), R(k - 6 * i + 12, 36), R(k - 6 * i + 24, 36)}[j];
    case Sector::T2:
        if (i == k) return std::array{R(k, 36), R(k + 48, 36), R(k + 24, 36)}[j];
        return base + std::array{R(k - 3 * i, 9), R(k - 3 * i + 3, 9), R(k - 3 * i + 6, 9)}[j];
    }
    return R(0);
}

} // namespace

TEST_CASE("base_twist_weight")
{
    CHECK(base_twist_weight(Level(1), 1, 1) == R(1, 9));
    CHECK(base_twist_weight(Level(1), 0, 2) == R(1, 9));
    for (int k = 1; k <= 10; ++k)
        for (int i = 0; i <= k; ++i)
            CHECK(base_twist_weight(Level(k), i, 0) == R(i * (i + 2), 4 * (k + 2)));
    CHECK_THROWS_AS(base_twist_weight(Level(2), 3, 1), Error);
    CHECK_THROWS_AS(base_twist_weight(Level(2), 1, 3), Error);
}

TEST_CASE("k = 1 table")
{
    const Level k1(1);
    const std::array<Rational, 18> expected{
        R(0),     R(1),      R(1),      R(1, 4),  R(1, 4),  R(9, 4),
        R(1, 36), R(49, 36), R(25, 36), R(1, 9),  R(4, 9),  R(16, 9),
        R(1, 9),  R(4, 9),   R(16, 9),  R(1, 36), R(49, 36), R(25, 36),
    };
    const auto labels = enumerate_irreducibles(k1);
    for (std::size_t n = 0; n < labels.size(); ++n) {
        CAPTURE(labels[n].key());
        CHECK(conformal_weight(labels[n]) == expected[n]);
    }
    CHECK(conformal_weight(parse_label("t1:0:1", k1)) == R(49, 36));
    CHECK(conformal_weight(parse_label("t2:1:2", k1)) == R(25, 36));
}

TEST_CASE("k > 1 rows match the printed formulas")
{
    for (int k = 2; k <= 16; ++k) {
        const Level level(k);
        for (const auto& l : enumerate_irreducibles(level)) {
            CAPTURE(l.key());
            CAPTURE(k);
            REQUIRE(conformal_weight(l) == table_two(l.sector(), k, l.index(), l.charge()));
        }
    }
    // T1 generic charge 2: i(i+2)/(4(k+2)) + (k-6i+24)/36
    const Level k4(4);
    CHECK(conformal_weight(parse_label("t1:3:2", k4)) == R(15, 24) + R(4 - 18 + 24, 36));
    // T1 rows at i = 1, k > 1.
    for (int k = 2; k <= 8; ++k) {
        const Level level(k);
        const Rational b = R(3, 4 * (k + 2));
        CHECK(conformal_weight(make_label(Sector::T1, 1, 0, level)) == b + R(k - 6, 36));
        CHECK(conformal_weight(make_label(Sector::T1, 1, 1, level)) == b + R(k + 6, 36));
        CHECK(conformal_weight(make_label(Sector::T1, 1, 2, level)) == b + R(k + 18, 36));
        CHECK(conformal_weight(make_label(Sector::T2, 1, 1, level)) == b + R(k, 9));
    }
}

TEST_CASE("vacuum and positivity")
{
    for (int k = 1; k <= 20; ++k) {
        const Level level(k);
        CHECK(conformal_weight(vacuum(level)) == R(0));
        for (const auto& l : enumerate_irreducibles(level)) {
            if (l.is_vacuum()) continue;
            CAPTURE(l.key());
            REQUIRE(conformal_weight(l) > R(0));
        }
    }
}

TEST_CASE("twisted pairing and base weight")
{
    for (int k = 1; k <= 20; ++k) {
        const Level level(k);
        for (int i = 0; i <= k; ++i) {
            for (int j = 0; j < 3; ++j)
                REQUIRE(conformal_weight(make_label(Sector::T1, i, j, level)) ==
                        conformal_weight(make_label(Sector::T2, k - i, j, level)));
            REQUIRE(conformal_weight(make_label(Sector::T1, i, 0, level)) == base_twist_weight(level, i, 1));
            REQUIRE(base_twist_weight(level, i, 1) == base_twist_weight(level, k - i, 2));
        }
    }
}

TEST_CASE("generator descriptions")
{
    const Level k1(1), k3(3);
    CHECK(generator_description(parse_label("t1:1:2", k1)) == "f(-2)v^{1,1}");
    CHECK(generator_description(parse_label("u:0:1", k3)) == "e(-1)vac");
    CHECK(generator_description(parse_label("u:1:2", k3)) == "f(-1)v^{1,1}");
    CHECK(generator_description(parse_label("u:3:2", k3)) == "v^{3,1}");
    CHECK(generator_description(parse_label("t2:3:1", k3)) == "f(-2)v^{3,3}");
    CHECK(generator_description(parse_label("t2:0:2", k3)) == "f(-1)^2vac");
    CHECK(generator_description(parse_label("t2:0:2", k1)) == "e(-1)vac");

    const auto cat = weighted_catalog(k3);
    CHECK(cat.size() == 36);
    for (const auto& w : cat) {
        CHECK_FALSE(w.generator_desc.empty());
        CHECK(w.weight == conformal_weight(w.label));
    }
}
