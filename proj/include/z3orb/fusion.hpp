#pragma once

#include <z3orb/labels.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace z3orb {

/// Finitely supported map label -> multiplicity, all labels at one level.
/// Zero multiplicities are never stored; iteration follows canonical order.
class FusionVector {
public:
    using Map = std::map<IrrLabel, std::uint64_t>;

    explicit FusionVector(Level level) : level_(level) {}
    FusionVector(const IrrLabel& label, std::uint64_t multiplicity = 1);

    Level level() const noexcept { return level_; }
    const Map& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }

    std::uint64_t multiplicity(const IrrLabel& label) const;
    void add(const IrrLabel& label, std::uint64_t multiplicity = 1);
    void add(const FusionVector& other, std::uint64_t scale = 1);

    /// "{u:0:0: 1, u:2:1: 1}".
    std::string to_string() const;

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const FusionVector&, const FusionVector&) = default;

private:
    Level level_;
    Map entries_;
};

struct FusionTriple {
    IrrLabel a;
    IrrLabel b;
    IrrLabel c;
    std::uint64_t multiplicity;
};

/// The i3 allowed in L(k,i1) x L(k,i2) for affine sl2 at level k:
/// |i1-i2| <= i3 <= min(i1+i2, 2k-i1-i2), i1+i2+i3 even, ascending.
std::vector<int> sl2_fusion_range(Level level, int i1, int i2);

/// j1 + j2 - ((i1+i2-i3)/2 mod 3). Unreduced; requires i1+i2+i3 even.
long long sign_value(int i1, int i2, int i3, long long j1, long long j2);

FusionVector fuse_irreducible(const IrrLabel& a, const IrrLabel& b);
FusionVector fuse(const FusionVector& lhs, const FusionVector& rhs);

IrrLabel contragredient(const IrrLabel& label);

std::uint64_t fusion_coefficient(const IrrLabel& a, const IrrLabel& b, const IrrLabel& c);
FusionTriple fusion_triple(const IrrLabel& a, const IrrLabel& b, const IrrLabel& c);

} // namespace z3orb
