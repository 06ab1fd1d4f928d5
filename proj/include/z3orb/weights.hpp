#pragma once

#include <z3orb/labels.hpp>
#include <z3orb/rational.hpp>

#include <string>
#include <vector>

namespace z3orb {

struct WeightedLabel {
    IrrLabel label;
    Rational weight;
    /// Lowest-weight vector generating the module, e.g. "f(-2)v^{1,1}". Display only.
    std::string generator_desc;
};

/// Lowest conformal weight of the sigma^r-twisted module L(k,i)^{T_r}:
/// i(i+2)/(4(k+2)) + (r^2 k - 6 i r)/36.
Rational base_twist_weight(Level level, int index, int twist);

/// Conformal weight of an irreducible orbifold module, read off the k = 1
/// table or the k > 1 case split.
Rational conformal_weight(const IrrLabel& label);

std::string generator_description(const IrrLabel& label);

WeightedLabel weighted(const IrrLabel& label);
std::vector<WeightedLabel> weighted_catalog(Level level);

} // namespace z3orb
