#pragma once

#include <z3orb/error.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace z3orb {

/// Level k of the affine sl2 algebra; always >= 1.
class Level {
public:
    explicit Level(int k);

    int value() const noexcept { return k_; }
    std::size_t label_count() const noexcept { return 9u * static_cast<std::size_t>(k_ + 1); }

    friend bool operator==(Level, Level) = default;
    friend auto operator<=>(Level, Level) = default;

private:
    int k_;
};

/// Origin of an irreducible orbifold module: the untwisted module L(k,i), or a
/// sigma / sigma^2 twisted module. The enumerator value is its Z/3 grade.
enum class Sector : std::uint8_t { U = 0, T1 = 1, T2 = 2 };

inline constexpr std::array<Sector, 3> kAllSectors{Sector::U, Sector::T1, Sector::T2};

inline int grade(Sector s) noexcept { return static_cast<int>(s); }
Sector sector_from_grade(int g) noexcept;
std::string_view sector_tag(Sector s) noexcept;

/// n mod 3 in {0,1,2}, also for negative n.
constexpr int residue3(long long n) noexcept
{
    const long long r = n % 3;
    return static_cast<int>(r < 0 ? r + 3 : r);
}

/// Name of one irreducible L(k,0)^Z3-module: L(k,i)^j or L(k,i)^{T_r,j}.
/// The charge j is stored reduced to {0,1,2}.
class IrrLabel {
public:
    IrrLabel(Sector sector, int index, long long charge, Level level);

    Sector sector() const noexcept { return sector_; }
    int index() const noexcept { return index_; }
    int charge() const noexcept { return charge_; }
    Level level() const noexcept { return Level(k_); }

    bool is_vacuum() const noexcept { return sector_ == Sector::U && index_ == 0 && charge_ == 0; }

    /// Position in the canonical order (sector major, then i, then j).
    std::size_t ordinal() const noexcept;

    /// `u:<i>:<j>`, `t1:<i>:<j>`, `t2:<i>:<j>`.
    std::string key() const;
    /// `L(k,i)^j`, `L(k,i)^{T1,j}`, `L(k,i)^{T2,j}`.
    std::string pretty() const;

    friend bool operator==(const IrrLabel&, const IrrLabel&) = default;
    friend std::strong_ordering operator<=>(const IrrLabel& a, const IrrLabel& b) noexcept
    {
        if (auto c = a.k_ <=> b.k_; c != 0) return c;
        if (auto c = a.sector_ <=> b.sector_; c != 0) return c;
        if (auto c = a.index_ <=> b.index_; c != 0) return c;
        return a.charge_ <=> b.charge_;
    }

private:
    Sector sector_;
    int index_;
    int charge_;
    int k_;
};

IrrLabel make_label(Sector sector, int index, long long charge, Level level);
IrrLabel vacuum(Level level);
IrrLabel label_at(Level level, std::size_t ordinal);

std::vector<IrrLabel> enumerate_irreducibles(Level level);

/// Parses the textual grammar. Syntax errors report the 0-based column.
IrrLabel parse_label(std::string_view text, Level level);

} // namespace z3orb
