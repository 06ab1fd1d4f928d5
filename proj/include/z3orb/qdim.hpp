#pragma once

#include <z3orb/labels.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace z3orb {

using Real = boost::multiprecision::cpp_bin_float_100;

/// Largest number of decimal digits the numeric routines will promise.
inline constexpr int kMaxDigits = 80;

/// Integer polynomial in x, coefficients stored lowest degree first with no
/// trailing zeros. Arithmetic is exact; leaving the 64-bit range throws
/// Error(ErrorCode::Overflow).
class ChebPoly {
public:
    ChebPoly() = default;
    explicit ChebPoly(std::vector<std::int64_t> coeffs);

    static ChebPoly constant(std::int64_t c) { return ChebPoly({c}); }
    static ChebPoly x() { return ChebPoly({0, 1}); }

    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

    friend ChebPoly operator+(const ChebPoly& a, const ChebPoly& b);
    friend ChebPoly operator-(const ChebPoly& a, const ChebPoly& b);
    friend ChebPoly operator*(const ChebPoly& a, const ChebPoly& b);
    friend ChebPoly operator*(std::int64_t c, const ChebPoly& a);
    ChebPoly& operator+=(const ChebPoly& o) { return *this = *this + o; }

    /// Euclidean remainder by a divisor whose leading coefficient is +1 or -1.
    ChebPoly remainder(const ChebPoly& divisor) const;

    Real evaluate(const Real& at) const;

    /// e.g. "x^2 - x - 1".
    std::string to_string() const;

    friend bool operator==(const ChebPoly&, const ChebPoly&) = default;

private:
    void trim();

    std::vector<std::int64_t> coeffs_;
};

/// S_n with S_n(2 cos t) = sin((n+1)t) / sin t: S_0 = 1, S_1 = x,
/// S_{n+1} = x S_n - S_{n-1}.
ChebPoly cheb_u(int n);

/// Monic modulus M_k = gcd(S_{k+1}, S_k - 1). Its roots are 2cos(pi j/(k+2))
/// for odd j, so quotienting by it sends S_i and S_{k-i} to the same class
/// while keeping x = 2cos(pi/(k+2)) as a root.
ChebPoly qdim_modulus(Level level);

/// Element of Z[x]/(M_k); x stands for 2cos(pi/(k+2)).
class QDimElement {
public:
    QDimElement(Level level, const ChebPoly& poly);

    Level level() const noexcept { return level_; }
    const ChebPoly& residue() const noexcept { return residue_; }

    bool is_one() const { return residue_ == ChebPoly::constant(1); }
    Real numeric() const;

    friend QDimElement operator+(const QDimElement& a, const QDimElement& b);
    friend QDimElement operator*(const QDimElement& a, const QDimElement& b);
    friend QDimElement operator*(std::int64_t c, const QDimElement& a);
    QDimElement& operator+=(const QDimElement& o) { return *this = *this + o; }

    friend bool operator==(const QDimElement&, const QDimElement&) = default;

private:
    Level level_;
    ChebPoly residue_;
};

QDimElement qdim_exact(const IrrLabel& label);
QDimElement qdim_zero(Level level);

/// sin(pi(i+1)/(k+2)) / sin(pi/(k+2)) evaluated directly; error below 10^-digits.
Real qdim_numeric(const IrrLabel& label, int digits = 30);

/// Fixed-point rendering with exactly `digits` digits after the point.
std::string format_fixed(const Real& value, int digits);

bool has_unit_qdim(const IrrLabel& label);

struct GlobalDimension {
    QDimElement exact;
    Real numeric;
};

/// 9 * sum_{i=0..k} d_i^2, both as a residue and via the sine formula.
GlobalDimension global_dimension(Level level);

} // namespace z3orb
