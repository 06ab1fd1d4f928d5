#include <z3orb/fusion.hpp>

#include <algorithm>
#include <cstdlib>

namespace z3orb {

namespace {

void require_level(Level expected, const IrrLabel& label)
{
    if (label.level() != expected)
        throw Error(ErrorCode::LevelMismatch,
                    "label " + label.key() + " is at level " +
                        std::to_string(label.level().value()) + ", expected level " +
                        std::to_string(expected.value()));
}

} // namespace

FusionVector::FusionVector(const IrrLabel& label, std::uint64_t multiplicity)
    : level_(label.level())
{
    add(label, multiplicity);
}

std::uint64_t FusionVector::multiplicity(const IrrLabel& label) const
{
    auto it = entries_.find(label);
    return it == entries_.end() ? 0 : it->second;
}

void FusionVector::add(const IrrLabel& label, std::uint64_t multiplicity)
{
    require_level(level_, label);
    if (multiplicity == 0) return;
    entries_[label] += multiplicity;
}

void FusionVector::add(const FusionVector& other, std::uint64_t scale)
{
    if (other.level_ != level_)
        throw Error(ErrorCode::LevelMismatch, "fusion vectors belong to different levels");
    if (scale == 0) return;
    for (const auto& [label, m] : other.entries_)
        entries_[label] += m * scale;
}

std::string FusionVector::to_string() const
{
    std::string out = "{";
    bool first = true;
    for (const auto& [label, m] : entries_) {
        if (!first) out += ", ";
        out += label.key() + ": " + std::to_string(m);
        first = false;
    }
    return out + "}";
}

std::vector<int> sl2_fusion_range(Level level, int i1, int i2)
{
    const int k = level.value();
    if (i1 < 0 || i1 > k || i2 < 0 || i2 > k)
        throw Error(ErrorCode::IndexOutOfRange, "sl2 fusion indices must lie in [0, k]");
    std::vector<int> out;
    const int hi = std::min(i1 + i2, 2 * k - i1 - i2);
    for (int i3 = std::abs(i1 - i2); i3 <= hi; i3 += 2)
        out.push_back(i3);
    return out;
}

long long sign_value(int i1, int i2, int i3, long long j1, long long j2)
{
    const long long diff = static_cast<long long>(i1) + i2 - i3;
    if (diff % 2 != 0)
        throw Error(ErrorCode::Parity, "sign requires i1 + i2 + i3 even, got (" +
                                           std::to_string(i1) + ", " + std::to_string(i2) +
                                           ", " + std::to_string(i3) + ")");
    return j1 + j2 - residue3(diff / 2);
}

FusionVector fuse_irreducible(const IrrLabel& a, const IrrLabel& b)
{
    require_level(a.level(), b);
    // Only the six orderings U<=T1<=T2 are tabulated; the rest follow by symmetry.
    if (a.sector() > b.sector())
        return fuse_irreducible(b, a);

    const Level level = a.level();
    const int k = level.value();
    const int i1 = a.index();
    const int i2 = b.index();
    const long long j1 = a.charge();
    const long long j2 = b.charge();

    FusionVector out(level);
    for (int i3 : sl2_fusion_range(level, i1, i2)) {
        switch (grade(a.sector()) * 3 + grade(b.sector())) {
        case 0: // U x U
            out.add(IrrLabel(Sector::U, i3, sign_value(i1, i2, i3, j1, j2), level));
            break;
        case 1: // U x T1
            out.add(IrrLabel(Sector::T1, i3, sign_value(i1, i2, i3, j1, j2), level));
            break;
        case 2: // U x T2
            out.add(IrrLabel(Sector::T2, i3, -sign_value(i1, i2, i3, j1, -j2), level));
            break;
        case 4: // T1 x T1
            out.add(IrrLabel(Sector::T2, i3, -sign_value(i1, i2, i3, j1, j2), level));
            break;
        case 5: // T1 x T2
            out.add(IrrLabel(Sector::U, k - i3, sign_value(i1, i2, i3, j1, -j2) + k - i3, level));
            break;
        case 8: // T2 x T2
            out.add(IrrLabel(Sector::T1, k - i3, sign_value(i1, i2, i3, -j1, -j2) + k - i3, level));
            break;
        default:
            break;
        }
    }
    return out;
}

FusionVector fuse(const FusionVector& lhs, const FusionVector& rhs)
{
    if (lhs.level() != rhs.level())
        throw Error(ErrorCode::LevelMismatch, "fusion vectors belong to different levels (" +
                                                  std::to_string(lhs.level().value()) + " vs " +
                                                  std::to_string(rhs.level().value()) + ")");
    FusionVector out(lhs.level());
    for (const auto& [a, m] : lhs)
        for (const auto& [b, n] : rhs)
            out.add(fuse_irreducible(a, b), m * n);
    return out;
}

IrrLabel contragredient(const IrrLabel& label)
{
    const Level level = label.level();
    const int i = label.index();
    const int j = label.charge();
    switch (label.sector()) {
    case Sector::U:
        return IrrLabel(Sector::U, i, residue3(i) - j, level);
    case Sector::T1:
        return IrrLabel(Sector::T2, level.value() - i, j, level);
    case Sector::T2:
        return IrrLabel(Sector::T1, level.value() - i, j, level);
    }
    return label;
}

std::uint64_t fusion_coefficient(const IrrLabel& a, const IrrLabel& b, const IrrLabel& c)
{
    require_level(a.level(), c);
    return fuse_irreducible(a, b).multiplicity(c);
}

FusionTriple fusion_triple(const IrrLabel& a, const IrrLabel& b, const IrrLabel& c)
{
    return FusionTriple{a, b, c, fusion_coefficient(a, b, c)};
}

} // namespace z3orb
