#include <z3orb/weights.hpp>

#include <array>

namespace z3orb {

namespace {

using Row = std::array<Rational, 3>;

// k = 1, indexed by [sector][i].
const std::array<std::array<Row, 2>, 3>& level_one_table()
{
    static const std::array<std::array<Row, 2>, 3> table{{
        {{Row{Rational(0), Rational(1), Rational(1)},
          Row{Rational(1, 4), Rational(1, 4), Rational(9, 4)}}},
        {{Row{Rational(1, 36), Rational(49, 36), Rational(25, 36)},
          Row{Rational(1, 9), Rational(4, 9), Rational(16, 9)}}},
        {{Row{Rational(1, 9), Rational(4, 9), Rational(16, 9)},
          Row{Rational(1, 36), Rational(49, 36), Rational(25, 36)}}},
    }};
    return table;
}

Rational untwisted_base(int k, int i)
{
    return Rational(static_cast<std::int64_t>(i) * (i + 2), 4 * (static_cast<std::int64_t>(k) + 2));
}

// Charge offsets above the twisted lowest weight, in units of 1/36.
constexpr std::array<int, 3> kGenericOffsets{0, 12, 24};
constexpr std::array<int, 3> kEdgeOffsets{0, 48, 24};

} // namespace

Rational base_twist_weight(Level level, int index, int twist)
{
    const int k = level.value();
    if (index < 0 || index > k)
        throw Error(ErrorCode::IndexOutOfRange,
                    "i out of range: i = " + std::to_string(index) + " for level k = " +
                        std::to_string(k));
    if (twist < 0 || twist > 2)
        throw Error(ErrorCode::InvalidArgument, "twist must be 0, 1 or 2");
    const std::int64_t r = twist;
    return untwisted_base(k, index) + Rational(r * r * k - 6 * r * index, 36);
}

Rational conformal_weight(const IrrLabel& label)
{
    const int k = label.level().value();
    const int i = label.index();
    const int j = label.charge();

    if (k == 1)
        return level_one_table()[grade(label.sector())][i][j];

    switch (label.sector()) {
    case Sector::U:
        if (i == 0) return j == 0 ? Rational(0) : Rational(1);
        if (i == 1) {
            const auto den = 4 * (static_cast<std::int64_t>(k) + 2);
            return j == 2 ? Rational(4 * static_cast<std::int64_t>(k) + 11, den) : Rational(3, den);
        }
        return untwisted_base(k, i);
    case Sector::T1: {
        const auto& off = i == 0 ? kEdgeOffsets : kGenericOffsets;
        return base_twist_weight(label.level(), i, 1) + Rational(off[j], 36);
    }
    case Sector::T2: {
        const auto& off = i == k ? kEdgeOffsets : kGenericOffsets;
        return base_twist_weight(label.level(), i, 2) + Rational(off[j], 36);
    }
    }
    return Rational(0);
}

std::string generator_description(const IrrLabel& label)
{
    const int k = label.level().value();
    const int i = label.index();
    const int j = label.charge();
    auto v = [](int a, int b) {
        if (a == 0 && b == 0) return std::string("vac");
        return "v^{" + std::to_string(a) + "," + std::to_string(b) + "}";
    };

    switch (label.sector()) {
    case Sector::U:
        if (i == 0) return j == 0 ? "vac" : (j == 1 ? "e(-1)vac" : "f(-1)vac");
        if (i == 1) {
            if (j == 0) return v(1, 1);
            if (j == 1) return v(1, 0);
            return k == 1 ? "f(-2)" + v(1, 1) : "f(-1)" + v(1, 1);
        }
        return v(i, i - j);
    case Sector::T1:
        if (j == 0) return v(i, i);
        if (i == 0) return j == 1 ? "e(-1)vac" : "f(-1)vac";
        if (j == 1) return v(i, i - 1);
        if (i == 1) return (k == 1 ? "f(-2)" : "f(-1)") + v(1, 1);
        return v(i, i - 2);
    case Sector::T2:
        if (j == 0) return v(i, i);
        if (j == 1) return (i < k ? "f(-1)" : "f(-2)") + v(i, i);
        if (i == 0) return k == 1 ? "e(-1)vac" : "f(-1)^2vac";
        return v(i, i - 1);
    }
    return {};
}

WeightedLabel weighted(const IrrLabel& label)
{
    return WeightedLabel{label, conformal_weight(label), generator_description(label)};
}

std::vector<WeightedLabel> weighted_catalog(Level level)
{
    std::vector<WeightedLabel> out;
    out.reserve(level.label_count());
    for (const auto& l : enumerate_irreducibles(level))
        out.push_back(weighted(l));
    return out;
}

} // namespace z3orb
