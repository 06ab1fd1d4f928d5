#include <z3orb/rational.hpp>
#include <z3orb/error.hpp>

#include <limits>

namespace z3orb {

namespace {

__int128 gcd128(__int128 a, __int128 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(__int128 v)
{
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

} // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
{
    *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(__int128 num, __int128 den)
{
    if (den == 0)
        throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (!fits64(num) || !fits64(den))
        throw Error(ErrorCode::Overflow, "rational value exceeds 64-bit range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational operator+(const Rational& a, const Rational& b)
{
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ +
                                   static_cast<__int128>(b.num_) * a.den_,
                               static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b)
{
    return a + (-b);
}

Rational operator*(const Rational& a, const Rational& b)
{
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_,
                               static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.num_ == 0)
        throw Error(ErrorCode::InvalidArgument, "rational division by zero");
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_,
                               static_cast<__int128>(a.den_) * b.num_);
}

Rational Rational::operator-() const
{
    return from_wide(-static_cast<__int128>(num_), den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

Rational Rational::fractional_part() const
{
    std::int64_t r = num_ % den_;
    if (r < 0) r += den_;
    return Rational(r, den_);
}

std::string Rational::to_string() const
{
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

} // namespace z3orb
