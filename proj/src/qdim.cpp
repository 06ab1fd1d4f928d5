#include <z3orb/qdim.hpp>
#include <z3orb/error.hpp>

#include <boost/math/constants/constants.hpp>

#include <sstream>

namespace z3orb {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "polynomial coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "polynomial coefficient overflow");
    return r;
}

void check_digits(int digits)
{
    if (digits < 1 || digits > kMaxDigits)
        throw Error(ErrorCode::InvalidArgument,
                    "precision must be between 1 and " + std::to_string(kMaxDigits) + " digits");
}

Real pi()
{
    return boost::math::constants::pi<Real>();
}

} // namespace

ChebPoly::ChebPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

void ChebPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

ChebPoly operator+(const ChebPoly& a, const ChebPoly& b)
{
    std::vector<std::int64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t n = 0; n < out.size(); ++n) {
        const std::int64_t x = n < a.coeffs_.size() ? a.coeffs_[n] : 0;
        const std::int64_t y = n < b.coeffs_.size() ? b.coeffs_[n] : 0;
        out[n] = checked_add(x, y);
    }
    return ChebPoly(std::move(out));
}

ChebPoly operator-(const ChebPoly& a, const ChebPoly& b)
{
    return a + (-1) * b;
}

ChebPoly operator*(std::int64_t c, const ChebPoly& a)
{
    std::vector<std::int64_t> out(a.coeffs_.size());
    for (std::size_t n = 0; n < out.size(); ++n)
        out[n] = checked_mul(c, a.coeffs_[n]);
    return ChebPoly(std::move(out));
}

ChebPoly operator*(const ChebPoly& a, const ChebPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t p = 0; p < a.coeffs_.size(); ++p)
        for (std::size_t q = 0; q < b.coeffs_.size(); ++q)
            out[p + q] = checked_add(out[p + q], checked_mul(a.coeffs_[p], b.coeffs_[q]));
    return ChebPoly(std::move(out));
}

ChebPoly ChebPoly::remainder(const ChebPoly& divisor) const
{
    const std::int64_t lead = divisor.leading();
    if (lead != 1 && lead != -1)
        throw Error(ErrorCode::InvalidArgument, "remainder requires a divisor with leading coefficient +-1");
    std::vector<std::int64_t> rem = coeffs_;
    const auto& d = divisor.coeffs_;
    const std::size_t dd = d.size() - 1;
    for (std::size_t top = rem.size(); top-- > dd;) {
        const std::int64_t q = checked_mul(rem[top], lead);
        if (q == 0) continue;
        const std::size_t shift = top - dd;
        for (std::size_t n = 0; n <= dd; ++n)
            rem[shift + n] = checked_add(rem[shift + n], -checked_mul(q, d[n]));
    }
    return ChebPoly(std::move(rem));
}

Real ChebPoly::evaluate(const Real& at) const
{
    Real acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + Real(*it);
    return acc;
}

std::string ChebPoly::to_string() const
{
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t n = coeffs_.size(); n-- > 0;) {
        std::int64_t c = coeffs_[n];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const std::int64_t mag = c < 0 ? -c : c;
        if (mag != 1 || n == 0) os << mag;
        if (n >= 1) os << "x";
        if (n >= 2) os << "^" << n;
        first = false;
    }
    return os.str();
}

ChebPoly cheb_u(int n)
{
    if (n < 0)
        throw Error(ErrorCode::InvalidArgument, "Chebyshev index must be non-negative");
    ChebPoly prev = ChebPoly::constant(1);
    if (n == 0) return prev;
    ChebPoly cur = ChebPoly::x();
    for (int m = 1; m < n; ++m) {
        ChebPoly next = ChebPoly::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

ChebPoly qdim_modulus(Level level)
{
    const int k = level.value();
    if (k % 2 == 1) {
        const int m = (k + 1) / 2;
        return cheb_u(m) - cheb_u(m - 1);
    }
    const int m = (k + 2) / 2;
    return cheb_u(m) - cheb_u(m - 2);
}

namespace {

ChebPoly cached_modulus(Level level)
{
    static const std::vector<ChebPoly> table = [] {
        std::vector<ChebPoly> t;
        for (int k = 1; k <= 64; ++k)
            t.push_back(qdim_modulus(Level(k)));
        return t;
    }();
    if (level.value() <= 64) return table[level.value() - 1];
    return qdim_modulus(level);
}

Real evaluation_point(Level level)
{
    return 2 * cos(pi() / (level.value() + 2));
}

void require_same_level(Level a, Level b)
{
    if (a != b)
        throw Error(ErrorCode::LevelMismatch, "quantum dimensions belong to different levels (" +
                                                  std::to_string(a.value()) + " vs " +
                                                  std::to_string(b.value()) + ")");
}

} // namespace

QDimElement::QDimElement(Level level, const ChebPoly& poly)
    : level_(level), residue_(poly.remainder(cached_modulus(level)))
{
}

Real QDimElement::numeric() const
{
    return residue_.evaluate(evaluation_point(level_));
}

QDimElement operator+(const QDimElement& a, const QDimElement& b)
{
    require_same_level(a.level_, b.level_);
    return QDimElement(a.level_, a.residue_ + b.residue_);
}

QDimElement operator*(const QDimElement& a, const QDimElement& b)
{
    require_same_level(a.level_, b.level_);
    return QDimElement(a.level_, a.residue_ * b.residue_);
}

QDimElement operator*(std::int64_t c, const QDimElement& a)
{
    return QDimElement(a.level_, c * a.residue_);
}

QDimElement qdim_exact(const IrrLabel& label)
{
    return QDimElement(label.level(), cheb_u(label.index()));
}

QDimElement qdim_zero(Level level)
{
    return QDimElement(level, ChebPoly{});
}

Real qdim_numeric(const IrrLabel& label, int digits)
{
    check_digits(digits);
    const Real n = label.level().value() + 2;
    return sin(pi() * (label.index() + 1) / n) / sin(pi() / n);
}

std::string format_fixed(const Real& value, int digits)
{
    check_digits(digits);
    return value.str(digits, std::ios_base::fixed);
}

bool has_unit_qdim(const IrrLabel& label)
{
    return qdim_exact(label).is_one();
}

GlobalDimension global_dimension(Level level)
{
    QDimElement exact = qdim_zero(level);
    Real numeric = 0;
    const Real n = level.value() + 2;
    const Real s1 = sin(pi() / n);
    for (int i = 0; i <= level.value(); ++i) {
        const QDimElement d = qdim_exact(IrrLabel(Sector::U, i, 0, level));
        exact += d * d;
        const Real r = sin(pi() * (i + 1) / n) / s1;
        numeric += r * r;
    }
    return GlobalDimension{9 * exact, 9 * numeric};
}

} // namespace z3orb
