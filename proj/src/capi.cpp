#include <z3orb/z3orb.h>

#include <z3orb/fusion.hpp>
#include <z3orb/qdim.hpp>
#include <z3orb/verify.hpp>
#include <z3orb/weights.hpp>

#include <cstring>
#include <new>
#include <string>

struct z3orb_level {
    z3orb::Level level;
};

struct z3orb_fusion {
    z3orb::FusionVector vec;
};

struct z3orb_report {
    z3orb::VerificationReport report;
    std::vector<std::string> rendered;
};

namespace {

thread_local std::string g_last_error;

z3orb_status status_of(z3orb::ErrorCode code)
{
    using z3orb::ErrorCode;
    switch (code) {
    case ErrorCode::InvalidLevel: return Z3ORB_ERR_INVALID_LEVEL;
    case ErrorCode::IndexOutOfRange: return Z3ORB_ERR_INDEX_RANGE;
    case ErrorCode::Syntax: return Z3ORB_ERR_SYNTAX;
    case ErrorCode::LevelMismatch: return Z3ORB_ERR_LEVEL_MISMATCH;
    case ErrorCode::Parity: return Z3ORB_ERR_PARITY;
    case ErrorCode::CapExceeded: return Z3ORB_ERR_CAP_EXCEEDED;
    case ErrorCode::Overflow: return Z3ORB_ERR_OVERFLOW;
    case ErrorCode::InvalidArgument: return Z3ORB_ERR_INVALID_ARGUMENT;
    }
    return Z3ORB_ERR_INTERNAL;
}

z3orb_status fail(z3orb_status status, std::string message)
{
    g_last_error = std::move(message);
    return status;
}

template <class Fn>
z3orb_status guarded(Fn&& fn) noexcept
{
    try {
        const z3orb_status s = fn();
        if (s == Z3ORB_OK) g_last_error.clear();
        return s;
    } catch (const z3orb::Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(Z3ORB_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(Z3ORB_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(Z3ORB_ERR_INTERNAL, "unknown exception");
    }
}

#define Z3ORB_REQUIRE(ptr)                                                                         \
    do {                                                                                           \
        if ((ptr) == nullptr) return fail(Z3ORB_ERR_NULL_POINTER, "null pointer: " #ptr);          \
    } while (0)

z3orb::IrrLabel to_label(const z3orb_level* level, z3orb_label l)
{
    if (l.sector < 0 || l.sector > 2)
        throw z3orb::Error(z3orb::ErrorCode::InvalidArgument,
                           "unknown sector " + std::to_string(l.sector));
    return z3orb::IrrLabel(static_cast<z3orb::Sector>(l.sector), l.index, l.charge, level->level);
}

z3orb_label from_label(const z3orb::IrrLabel& l)
{
    return z3orb_label{static_cast<int32_t>(z3orb::grade(l.sector())), l.index(), l.charge()};
}

z3orb_status copy_string(const std::string& text, char* buf, size_t cap, size_t* needed)
{
    const size_t size = text.size() + 1;
    if (needed != nullptr) *needed = size;
    if (buf == nullptr || cap < size)
        return fail(Z3ORB_ERR_BUFFER_TOO_SMALL, "buffer of " + std::to_string(cap) +
                                                    " bytes is too small, need " + std::to_string(size));
    std::memcpy(buf, text.c_str(), size);
    return Z3ORB_OK;
}

template <class T>
z3orb_status copy_array(const std::vector<T>& values, T* out, size_t cap, size_t* count)
{
    if (count != nullptr) *count = values.size();
    if (values.size() > cap || (out == nullptr && !values.empty()))
        return fail(Z3ORB_ERR_BUFFER_TOO_SMALL, "array capacity " + std::to_string(cap) +
                                                    " is too small, need " + std::to_string(values.size()));
    for (size_t n = 0; n < values.size(); ++n)
        out[n] = values[n];
    return Z3ORB_OK;
}

} // namespace

extern "C" {

const char* z3orb_version(void)
{
    return "1.0.0";
}

const char* z3orb_status_string(z3orb_status status)
{
    switch (status) {
    case Z3ORB_OK: return "ok";
    case Z3ORB_ERR_INVALID_LEVEL: return "invalid level";
    case Z3ORB_ERR_INDEX_RANGE: return "i out of range";
    case Z3ORB_ERR_SYNTAX: return "syntax error";
    case Z3ORB_ERR_LEVEL_MISMATCH: return "level mismatch";
    case Z3ORB_ERR_PARITY: return "parity violation";
    case Z3ORB_ERR_CAP_EXCEEDED: return "cap exceeded";
    case Z3ORB_ERR_OVERFLOW: return "arithmetic overflow";
    case Z3ORB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case Z3ORB_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case Z3ORB_ERR_NULL_POINTER: return "null pointer";
    case Z3ORB_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* z3orb_last_error(void)
{
    return g_last_error.c_str();
}

z3orb_status z3orb_level_create(int32_t k, z3orb_level** out)
{
    return guarded([&] {
        Z3ORB_REQUIRE(out);
        *out = new z3orb_level{z3orb::Level(k)};
        return Z3ORB_OK;
    });
}

void z3orb_level_destroy(z3orb_level* level)
{
    delete level;
}

int32_t z3orb_level_value(const z3orb_level* level)
{
    return level == nullptr ? 0 : level->level.value();
}

size_t z3orb_label_count(const z3orb_level* level)
{
    return level == nullptr ? 0 : level->level.label_count();
}

z3orb_status z3orb_label_at(const z3orb_level* level, size_t ordinal, z3orb_label* out)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        Z3ORB_REQUIRE(out);
        *out = from_label(z3orb::label_at(level->level, ordinal));
        return Z3ORB_OK;
    });
}

z3orb_status z3orb_make_label(const z3orb_level* level, int32_t sector, int32_t index, int64_t charge,
                              z3orb_label* out)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        Z3ORB_REQUIRE(out);
        if (sector < 0 || sector > 2)
            return fail(Z3ORB_ERR_INVALID_ARGUMENT, "unknown sector " + std::to_string(sector));
        *out = from_label(z3orb::make_label(static_cast<z3orb::Sector>(sector), index, charge, level->level));
        return Z3ORB_OK;
    });
}

z3orb_status z3orb_parse_label(const z3orb_level* level, const char* text, z3orb_label* out)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        Z3ORB_REQUIRE(text);
        Z3ORB_REQUIRE(out);
        *out = from_label(z3orb::parse_label(text, level->level));
        return Z3ORB_OK;
    });
}

z3orb_status z3orb_label_key(const z3orb_level* level, z3orb_label label, char* buf, size_t cap,
                             size_t* needed)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        return copy_string(to_label(level, label).key(), buf, cap, needed);
    });
}

z3orb_status z3orb_label_pretty(const z3orb_level* level, z3orb_label label, char* buf, size_t cap,
                                size_t* needed)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        return copy_string(to_label(level, label).pretty(), buf, cap, needed);
    });
}

int32_t z3orb_residue3(int64_t n)
{
    return z3orb::residue3(n);
}

z3orb_status z3orb_weight(const z3orb_level* level, z3orb_label label, int64_t* numerator,
                          int64_t* denominator)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        Z3ORB_REQUIRE(numerator);
        Z3ORB_REQUIRE(denominator);
        const z3orb::Rational w = z3orb::conformal_weight(to_label(level, label));
        *numerator = w.numerator();
        *denominator = w.denominator();
        return Z3ORB_OK;
    });
}

z3orb_status z3orb_base_twist_weight(const z3orb_level* level, int32_t index, int32_t twist,
                                     int64_t* numerator, int64_t* denominator)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        Z3ORB_REQUIRE(numerator);
        Z3ORB_REQUIRE(denominator);
        const z3orb::Rational w = z3orb::base_twist_weight(level->level, index, twist);
        *numerator = w.numerator();
        *denominator = w.denominator();
        return Z3ORB_OK;
    });
}

z3orb_status z3orb_generator(const z3orb_level* level, z3orb_label label, char* buf, size_t cap,
                             size_t* needed)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        return copy_string(z3orb::generator_description(to_label(level, label)), buf, cap, needed);
    });
}

z3orb_status z3orb_qdim_numeric(const z3orb_level* level, z3orb_label label, int32_t digits, char* buf,
                                size_t cap, size_t* needed)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        const auto value = z3orb::qdim_numeric(to_label(level, label), digits);
        return copy_string(z3orb::format_fixed(value, digits), buf, cap, needed);
    });
}

z3orb_status z3orb_qdim_residue(const z3orb_level* level, z3orb_label label, int64_t* coeffs, size_t cap,
                                size_t* count)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        return copy_array(z3orb::qdim_exact(to_label(level, label)).residue().coeffs(), coeffs, cap, count);
    });
}

z3orb_status z3orb_has_unit_qdim(const z3orb_level* level, z3orb_label label, int* out)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        Z3ORB_REQUIRE(out);
        *out = z3orb::has_unit_qdim(to_label(level, label)) ? 1 : 0;
        return Z3ORB_OK;
    });
}

z3orb_status z3orb_global_dimension_numeric(const z3orb_level* level, int32_t digits, char* buf, size_t cap,
                                            size_t* needed)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        const auto g = z3orb::global_dimension(level->level);
        return copy_string(z3orb::format_fixed(g.numeric, digits), buf, cap, needed);
    });
}

z3orb_status z3orb_global_dimension_residue(const z3orb_level* level, int64_t* coeffs, size_t cap,
                                            size_t* count)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        return copy_array(z3orb::global_dimension(level->level).exact.residue().coeffs(), coeffs, cap, count);
    });
}

z3orb_status z3orb_sl2_fusion_range(const z3orb_level* level, int32_t i1, int32_t i2, int32_t* out,
                                    size_t cap, size_t* count)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        const auto range = z3orb::sl2_fusion_range(level->level, i1, i2);
        return copy_array(std::vector<int32_t>(range.begin(), range.end()), out, cap, count);
    });
}

z3orb_status z3orb_sign_value(int32_t i1, int32_t i2, int32_t i3, int64_t j1, int64_t j2, int64_t* out)
{
    return guarded([&] {
        Z3ORB_REQUIRE(out);
        *out = z3orb::sign_value(i1, i2, i3, j1, j2);
        return Z3ORB_OK;
    });
}

z3orb_status z3orb_dual(const z3orb_level* level, z3orb_label label, z3orb_label* out)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        Z3ORB_REQUIRE(out);
        *out = from_label(z3orb::contragredient(to_label(level, label)));
        return Z3ORB_OK;
    });
}

z3orb_status z3orb_coeff(const z3orb_level* level, z3orb_label a, z3orb_label b, z3orb_label c, uint64_t* out)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        Z3ORB_REQUIRE(out);
        *out = z3orb::fusion_coefficient(to_label(level, a), to_label(level, b), to_label(level, c));
        return Z3ORB_OK;
    });
}

z3orb_status z3orb_fusion_create(const z3orb_level* level, z3orb_fusion** out)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        Z3ORB_REQUIRE(out);
        *out = new z3orb_fusion{z3orb::FusionVector(level->level)};
        return Z3ORB_OK;
    });
}

z3orb_status z3orb_fuse(const z3orb_level* level, z3orb_label a, z3orb_label b, z3orb_fusion** out)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        Z3ORB_REQUIRE(out);
        *out = new z3orb_fusion{z3orb::fuse_irreducible(to_label(level, a), to_label(level, b))};
        return Z3ORB_OK;
    });
}

z3orb_status z3orb_fusion_add(z3orb_fusion* vec, z3orb_label label, uint64_t multiplicity)
{
    return guarded([&] {
        Z3ORB_REQUIRE(vec);
        const z3orb_level level{vec->vec.level()};
        vec->vec.add(to_label(&level, label), multiplicity);
        return Z3ORB_OK;
    });
}

z3orb_status z3orb_fusion_product(const z3orb_fusion* lhs, const z3orb_fusion* rhs, z3orb_fusion** out)
{
    return guarded([&] {
        Z3ORB_REQUIRE(lhs);
        Z3ORB_REQUIRE(rhs);
        Z3ORB_REQUIRE(out);
        *out = new z3orb_fusion{z3orb::fuse(lhs->vec, rhs->vec)};
        return Z3ORB_OK;
    });
}

size_t z3orb_fusion_size(const z3orb_fusion* vec)
{
    return vec == nullptr ? 0 : vec->vec.size();
}

z3orb_status z3orb_fusion_term(const z3orb_fusion* vec, size_t position, z3orb_label* label,
                               uint64_t* multiplicity)
{
    return guarded([&] {
        Z3ORB_REQUIRE(vec);
        if (position >= vec->vec.size())
            return fail(Z3ORB_ERR_INVALID_ARGUMENT, "fusion term position out of range");
        auto it = std::next(vec->vec.begin(), static_cast<std::ptrdiff_t>(position));
        if (label != nullptr) *label = from_label(it->first);
        if (multiplicity != nullptr) *multiplicity = it->second;
        return Z3ORB_OK;
    });
}

void z3orb_fusion_destroy(z3orb_fusion* vec)
{
    delete vec;
}

void z3orb_verify_options_default(z3orb_verify_options* opts)
{
    if (opts == nullptr) return;
    const z3orb::VerifyOptions d;
    *opts = z3orb_verify_options{d.cubic_cap, d.quadratic_cap, d.samples, d.seed, d.threads};
}

z3orb_status z3orb_verify(const z3orb_level* level, const char* suite, const z3orb_verify_options* opts,
                          z3orb_report** out)
{
    return guarded([&] {
        Z3ORB_REQUIRE(level);
        Z3ORB_REQUIRE(suite);
        Z3ORB_REQUIRE(out);
        const auto which = z3orb::suite_from_name(suite);
        if (!which)
            return fail(Z3ORB_ERR_INVALID_ARGUMENT, std::string("unknown suite '") + suite + "'");
        z3orb::VerifyOptions o;
        if (opts != nullptr) {
            o.cubic_cap = opts->cubic_cap;
            o.quadratic_cap = opts->quadratic_cap;
            o.samples = opts->samples;
            o.seed = opts->seed;
            o.threads = opts->threads;
        }
        auto* r = new z3orb_report{z3orb::run_suite(*which, level->level, o), {}};
        for (const auto& f : r->report.failures) {
            std::string text = f.description;
            if (!f.counterexample.empty()) {
                text += " [counterexample:";
                for (const auto& l : f.counterexample)
                    text += " " + l.key();
                text += "]";
            }
            r->rendered.push_back(std::move(text));
        }
        *out = r;
        return Z3ORB_OK;
    });
}

int z3orb_report_passed(const z3orb_report* report)
{
    return report != nullptr && report->report.passed() ? 1 : 0;
}

const char* z3orb_report_suite(const z3orb_report* report)
{
    return report == nullptr ? "" : report->report.suite.c_str();
}

int32_t z3orb_report_level(const z3orb_report* report)
{
    return report == nullptr ? 0 : report->report.level.value();
}

uint64_t z3orb_report_checks(const z3orb_report* report)
{
    return report == nullptr ? 0 : report->report.checks_run;
}

uint64_t z3orb_report_failure_count(const z3orb_report* report)
{
    return report == nullptr ? 0 : report->report.failure_count;
}

size_t z3orb_report_recorded_failures(const z3orb_report* report)
{
    return report == nullptr ? 0 : report->rendered.size();
}

const char* z3orb_report_failure(const z3orb_report* report, size_t position)
{
    if (report == nullptr || position >= report->rendered.size()) return nullptr;
    return report->rendered[position].c_str();
}

int z3orb_report_sampled(const z3orb_report* report)
{
    return report != nullptr && report->report.sampled ? 1 : 0;
}

double z3orb_report_elapsed_seconds(const z3orb_report* report)
{
    return report == nullptr ? 0.0 : report->report.elapsed.count();
}

void z3orb_report_destroy(z3orb_report* report)
{
    delete report;
}

} // extern "C"
