#include <z3orb/labels.hpp>

#include <charconv>

namespace z3orb {

Level::Level(int k) : k_(k)
{
    if (k < 1)
        throw Error(ErrorCode::InvalidLevel, "level must be >= 1, got " + std::to_string(k));
}

Sector sector_from_grade(int g) noexcept
{
    return static_cast<Sector>(residue3(g));
}

std::string_view sector_tag(Sector s) noexcept
{
    switch (s) {
    case Sector::U: return "u";
    case Sector::T1: return "t1";
    case Sector::T2: return "t2";
    }
    return "?";
}

IrrLabel::IrrLabel(Sector sector, int index, long long charge, Level level)
    : sector_(sector), index_(index), charge_(residue3(charge)), k_(level.value())
{
    if (index < 0)
        throw Error(ErrorCode::IndexOutOfRange,
                    "i out of range: i = " + std::to_string(index) + " is negative");
    if (index > k_)
        throw Error(ErrorCode::IndexOutOfRange,
                    "i out of range: i = " + std::to_string(index) + " exceeds level k = " +
                        std::to_string(k_));
}

std::size_t IrrLabel::ordinal() const noexcept
{
    const auto per_sector = 3u * static_cast<std::size_t>(k_ + 1);
    return grade(sector_) * per_sector + 3u * static_cast<std::size_t>(index_) +
           static_cast<std::size_t>(charge_);
}

std::string IrrLabel::key() const
{
    std::string out(sector_tag(sector_));
    out += ':';
    out += std::to_string(index_);
    out += ':';
    out += std::to_string(charge_);
    return out;
}

std::string IrrLabel::pretty() const
{
    std::string out = "L(" + std::to_string(k_) + "," + std::to_string(index_) + ")^";
    switch (sector_) {
    case Sector::U: out += std::to_string(charge_); break;
    case Sector::T1: out += "{T1," + std::to_string(charge_) + "}"; break;
    case Sector::T2: out += "{T2," + std::to_string(charge_) + "}"; break;
    }
    return out;
}

IrrLabel make_label(Sector sector, int index, long long charge, Level level)
{
    return IrrLabel(sector, index, charge, level);
}

IrrLabel vacuum(Level level)
{
    return IrrLabel(Sector::U, 0, 0, level);
}

IrrLabel label_at(Level level, std::size_t ordinal)
{
    if (ordinal >= level.label_count())
        throw Error(ErrorCode::InvalidArgument,
                    "label ordinal " + std::to_string(ordinal) + " out of range");
    const auto per_sector = 3u * static_cast<std::size_t>(level.value() + 1);
    const auto sector = static_cast<Sector>(ordinal / per_sector);
    const auto rest = ordinal % per_sector;
    return IrrLabel(sector, static_cast<int>(rest / 3), static_cast<long long>(rest % 3), level);
}

std::vector<IrrLabel> enumerate_irreducibles(Level level)
{
    std::vector<IrrLabel> out;
    out.reserve(level.label_count());
    for (Sector s : kAllSectors)
        for (int i = 0; i <= level.value(); ++i)
            for (int j = 0; j < 3; ++j)
                out.emplace_back(s, i, j, level);
    return out;
}

namespace {

[[noreturn]] void syntax_error(std::string_view text, std::size_t pos, const std::string& why)
{
    throw Error(ErrorCode::Syntax, "syntax error at column " + std::to_string(pos) + " in '" +
                                       std::string(text) + "': " + why);
}

long long read_number(std::string_view text, std::size_t& pos)
{
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
        ++pos;
    if (pos == start)
        syntax_error(text, start, "expected decimal digits");
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc{} || ptr != text.data() + pos)
        syntax_error(text, start, "number too large");
    return value;
}

} // namespace

IrrLabel parse_label(std::string_view text, Level level)
{
    std::size_t pos = 0;
    Sector sector = Sector::U;
    if (text.starts_with("u")) {
        pos = 1;
    } else if (text.starts_with("t1")) {
        sector = Sector::T1;
        pos = 2;
    } else if (text.starts_with("t2")) {
        sector = Sector::T2;
        pos = 2;
    } else {
        syntax_error(text, 0, "expected sector tag 'u', 't1' or 't2'");
    }

    if (pos >= text.size() || text[pos] != ':')
        syntax_error(text, pos, "expected ':'");
    ++pos;
    const long long index = read_number(text, pos);
    if (pos >= text.size() || text[pos] != ':')
        syntax_error(text, pos, "expected ':'");
    ++pos;
    const long long charge = read_number(text, pos);
    if (pos != text.size())
        syntax_error(text, pos, "unexpected trailing characters");

    if (index > level.value())
        throw Error(ErrorCode::IndexOutOfRange,
                    "i out of range: i = " + std::to_string(index) + " exceeds level k = " +
                        std::to_string(level.value()));
    return make_label(sector, static_cast<int>(index), charge, level);
}

} // namespace z3orb
