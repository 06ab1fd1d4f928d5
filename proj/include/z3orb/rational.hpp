#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace z3orb {

/// Exact fraction in lowest terms with a positive denominator. Operations that
/// would leave the 64-bit range throw Error(ErrorCode::Overflow).
class Rational {
public:
    constexpr Rational() noexcept = default;
    Rational(std::int64_t numerator, std::int64_t denominator = 1);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }

    /// Representative of *this modulo 1, in [0, 1).
    Rational fractional_part() const;

    /// "49/36", or "1" when the denominator is 1.
    std::string to_string() const;
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace z3orb
