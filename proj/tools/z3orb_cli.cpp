// z3orb: command-line front end over the C API.

#include <z3orb/z3orb.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(z3orb_status status)
{
    if (status != Z3ORB_OK)
    {
        const std::string detail = z3orb_last_error();
        throw CliError(detail.empty() ? z3orb_status_string(status) : detail);
    }
}

struct LevelDeleter {
    void operator()(z3orb_level* p) const { z3orb_level_destroy(p); }
};
struct FusionDeleter {
    void operator()(z3orb_fusion* p) const { z3orb_fusion_destroy(p); }
};
struct ReportDeleter {
    void operator()(z3orb_report* p) const { z3orb_report_destroy(p); }
};
using LevelPtr = std::unique_ptr<z3orb_level, LevelDeleter>;
using FusionPtr = std::unique_ptr<z3orb_fusion, FusionDeleter>;
using ReportPtr = std::unique_ptr<z3orb_report, ReportDeleter>;

LevelPtr open_level(int k)
{
    z3orb_level* raw = nullptr;
    check(z3orb_level_create(k, &raw));
    return LevelPtr(raw);
}

template <class Fn>
std::string read_string(Fn fn)
{
    size_t needed = 0;
    const z3orb_status probe = fn(nullptr, 0, &needed);
    if (probe != Z3ORB_ERR_BUFFER_TOO_SMALL) check(probe);
    std::string buf(needed, '\0');
    check(fn(buf.data(), buf.size(), &needed));
    buf.resize(needed - 1);
    return buf;
}

template <class Fn>
std::vector<int64_t> read_coeffs(Fn fn)
{
    size_t count = 0;
    const z3orb_status probe = fn(nullptr, 0, &count);
    if (probe != Z3ORB_ERR_BUFFER_TOO_SMALL) check(probe);
    std::vector<int64_t> out(count);
    check(fn(out.data(), out.size(), &count));
    return out;
}

std::string render_poly(const std::vector<int64_t>& c)
{
    std::ostringstream os;
    bool first = true;
    for (size_t n = c.size(); n-- > 0;) {
        if (c[n] == 0) continue;
        if (first)
            os << (c[n] < 0 ? "-" : "");
        else
            os << (c[n] < 0 ? " - " : " + ");
        const int64_t mag = c[n] < 0 ? -c[n] : c[n];
        if (mag != 1 || n == 0) os << mag;
        if (n >= 1) os << "x";
        if (n >= 2) os << "^" << n;
        first = false;
    }
    return first ? "0" : os.str();
}

struct Session {
    LevelPtr level;

    explicit Session(int k) : level(open_level(k)) {}

    z3orb_label parse(const std::string& text) const
    {
        z3orb_label l{};
        check(z3orb_parse_label(level.get(), text.c_str(), &l));
        return l;
    }
    std::string key(z3orb_label l) const
    {
        return read_string([&](char* b, size_t c, size_t* n) { return z3orb_label_key(level.get(), l, b, c, n); });
    }
    std::string pretty(z3orb_label l) const
    {
        return read_string([&](char* b, size_t c, size_t* n) { return z3orb_label_pretty(level.get(), l, b, c, n); });
    }
    std::string weight(z3orb_label l) const
    {
        int64_t num = 0, den = 1;
        check(z3orb_weight(level.get(), l, &num, &den));
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
    std::string qdim(z3orb_label l, int digits) const
    {
        return read_string(
            [&](char* b, size_t c, size_t* n) { return z3orb_qdim_numeric(level.get(), l, digits, b, c, n); });
    }
    std::vector<int64_t> qdim_residue(z3orb_label l) const
    {
        return read_coeffs([&](int64_t* b, size_t c, size_t* n) { return z3orb_qdim_residue(level.get(), l, b, c, n); });
    }
    z3orb_label dual(z3orb_label l) const
    {
        z3orb_label out{};
        check(z3orb_dual(level.get(), l, &out));
        return out;
    }
    std::string generator(z3orb_label l) const
    {
        return read_string([&](char* b, size_t c, size_t* n) { return z3orb_generator(level.get(), l, b, c, n); });
    }
    std::vector<z3orb_label> labels() const
    {
        std::vector<z3orb_label> out(z3orb_label_count(level.get()));
        for (size_t n = 0; n < out.size(); ++n)
            check(z3orb_label_at(level.get(), n, &out[n]));
        return out;
    }
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

constexpr int kCatalogDigits = 12;

void emit_catalog(const Session& s, const std::string& format, std::ostream& out)
{
    const int k = z3orb_level_value(s.level.get());
    const auto labels = s.labels();
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["level"] = k;
        doc["count"] = labels.size();
        auto& modules = doc["modules"] = nlohmann::ordered_json::array();
        for (const auto& l : labels) {
            nlohmann::ordered_json m;
            m["label"] = s.key(l);
            m["pretty"] = s.pretty(l);
            m["weight"] = s.weight(l);
            m["qdim"] = s.qdim(l, kCatalogDigits);
            m["qdim_residue"] = s.qdim_residue(l);
            m["dual"] = s.key(s.dual(l));
            m["generator"] = s.generator(l);
            modules.push_back(std::move(m));
        }
        out << doc.dump(2) << "\n";
    } else if (format == "csv") {
        out << "label,pretty,weight,qdim,dual,generator\r\n";
        for (const auto& l : labels)
            out << csv_field(s.key(l)) << ',' << csv_field(s.pretty(l)) << ',' << csv_field(s.weight(l)) << ','
                << csv_field(s.qdim(l, kCatalogDigits)) << ',' << csv_field(s.key(s.dual(l))) << ','
                << csv_field(s.generator(l)) << "\r\n";
    } else {
        out << "Irreducible modules, k = " << k << " (" << labels.size() << " modules)\n\n";
        out << "| Module | Label | Weight | qdim | Dual | Generator |\n";
        out << "|---|---|---|---|---|---|\n";
        for (const auto& l : labels)
            out << "| " << s.pretty(l) << " | `" << s.key(l) << "` | " << s.weight(l) << " | "
                << s.qdim(l, kCatalogDigits) << " | " << s.pretty(s.dual(l)) << " | `" << s.generator(l)
                << "` |\n";
    }
}

void emit_fusion(const Session& s, const z3orb_fusion* vec, const std::string& format, std::ostream& out)
{
    const size_t n = z3orb_fusion_size(vec);
    std::vector<std::pair<z3orb_label, uint64_t>> terms(n);
    for (size_t t = 0; t < n; ++t)
        check(z3orb_fusion_term(vec, t, &terms[t].first, &terms[t].second));

    if (format == "json") {
        out << '{';
        for (size_t t = 0; t < n; ++t)
            out << (t ? ", " : "") << nlohmann::json(s.key(terms[t].first)).dump() << ": " << terms[t].second;
        out << "}\n";
    } else if (format == "csv") {
        out << "label,multiplicity\r\n";
        for (const auto& [l, m] : terms)
            out << csv_field(s.key(l)) << ',' << m << "\r\n";
    } else {
        out << "| Module | Label | Multiplicity |\n|---|---|---|\n";
        for (const auto& [l, m] : terms)
            out << "| " << s.pretty(l) << " | `" << s.key(l) << "` | " << m << " |\n";
    }
}

const std::vector<std::string> kSuites{"unit", "comm", "assoc", "dual", "qdim", "oracle", "catalog"};
constexpr size_t kShownFailures = 20;

bool run_verify(const Session& s, const std::string& suite, const z3orb_verify_options& opts, std::ostream& out)
{
    std::vector<std::string> suites;
    if (suite == "all")
        suites = kSuites;
    else
        suites.push_back(suite);

    bool all_passed = true;
    for (const auto& name : suites) {
        z3orb_report* raw = nullptr;
        check(z3orb_verify(s.level.get(), name.c_str(), &opts, &raw));
        ReportPtr report(raw);
        const bool passed = z3orb_report_passed(raw) != 0;
        all_passed = all_passed && passed;
        char elapsed[32];
        std::snprintf(elapsed, sizeof elapsed, "%.3fs", z3orb_report_elapsed_seconds(raw));
        out << (passed ? "PASS" : "FAIL") << "  " << z3orb_report_suite(raw) << "  k=" << z3orb_report_level(raw)
            << "  checks=" << z3orb_report_checks(raw) << "  failures=" << z3orb_report_failure_count(raw)
            << (z3orb_report_sampled(raw) ? "  (sampled)" : "") << "  " << elapsed << "\n";
        const size_t recorded = z3orb_report_recorded_failures(raw);
        for (size_t f = 0; f < recorded && f < kShownFailures; ++f)
            out << "    - " << z3orb_report_failure(raw, f) << "\n";
        if (recorded > kShownFailures)
            out << "    ... " << (z3orb_report_failure_count(raw) - kShownFailures) << " more\n";
    }
    return all_passed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Representation data and fusion rules of the Z3-orbifold of affine sl2 at level k"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(z3orb_version()));

    int level = 0;
    std::string format = "json";
    std::string out_path;
    const std::vector<std::string> formats{"json", "csv", "markdown"};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--level,-k", level, "Level k >= 1")->required();
        sub->add_option("--out", out_path, "Write output to PATH instead of standard output");
    };

    auto* catalog = app.add_subcommand("catalog", "List every irreducible module with weight, qdim, dual");
    add_common(catalog);
    catalog->add_option("--format", format, "json, csv or markdown")->check(CLI::IsMember(formats));

    std::string a_text, b_text, c_text;
    auto* fuse = app.add_subcommand("fuse", "Fusion product A x B");
    add_common(fuse);
    fuse->add_option("A", a_text, "First label, e.g. t1:0:2")->required();
    fuse->add_option("B", b_text, "Second label")->required();
    fuse->add_option("--format", format, "json, csv or markdown")->check(CLI::IsMember(formats));

    auto* coeff = app.add_subcommand("coeff", "Fusion coefficient N_{A,B}^C");
    add_common(coeff);
    coeff->add_option("A", a_text)->required();
    coeff->add_option("B", b_text)->required();
    coeff->add_option("C", c_text)->required();

    auto* dual = app.add_subcommand("dual", "Contragredient module");
    add_common(dual);
    dual->add_option("A", a_text)->required();

    int digits = 12;
    bool exact = false;
    auto* qdim = app.add_subcommand("qdim", "Quantum dimension of a module");
    add_common(qdim);
    qdim->add_option("A", a_text)->required();
    qdim->add_option("--digits", digits, "Digits after the decimal point")->check(CLI::Range(1, 80));
    qdim->add_flag("--exact", exact, "Print the exact residue polynomial in x = 2cos(pi/(k+2))");

    std::string glob_format = "text";
    auto* glob = app.add_subcommand("glob", "Global dimension");
    add_common(glob);
    glob->add_option("--digits", digits, "Digits after the decimal point")->check(CLI::Range(1, 80));
    glob->add_option("--format", glob_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    z3orb_verify_options vopts;
    z3orb_verify_options_default(&vopts);
    std::string suite;
    std::vector<std::string> suite_choices = kSuites;
    suite_choices.push_back("all");
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    add_common(verify);
    verify->add_option("--suite", suite, "unit, comm, assoc, dual, qdim, oracle, catalog or all")
        ->required()
        ->check(CLI::IsMember(suite_choices));
    verify->add_option("--cap", vopts.cubic_cap, "Highest level swept exhaustively by triple suites");
    verify->add_option("--quadratic-cap", vopts.quadratic_cap, "Highest level swept exhaustively by pair suites");
    verify->add_option("--samples", vopts.samples, "Random tuples drawn above the cap (0 refuses)");
    verify->add_option("--seed", vopts.seed, "Sampling seed");
    verify->add_option("--threads", vopts.threads, "Worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    std::ostringstream out;
    int status = kExitOk;
    try {
        const Session s(level);
        if (*catalog) {
            emit_catalog(s, format, out);
        } else if (*fuse) {
            z3orb_fusion* raw = nullptr;
            check(z3orb_fuse(s.level.get(), s.parse(a_text), s.parse(b_text), &raw));
            FusionPtr vec(raw);
            emit_fusion(s, vec.get(), format, out);
        } else if (*coeff) {
            uint64_t n = 0;
            check(z3orb_coeff(s.level.get(), s.parse(a_text), s.parse(b_text), s.parse(c_text), &n));
            out << n << "\n";
        } else if (*dual) {
            out << s.key(s.dual(s.parse(a_text))) << "\n";
        } else if (*qdim) {
            const auto l = s.parse(a_text);
            if (exact)
                out << render_poly(s.qdim_residue(l)) << "\n";
            else
                out << s.qdim(l, digits) << "\n";
        } else if (*glob) {
            const auto residue = read_coeffs([&](int64_t* b, size_t c, size_t* n) {
                return z3orb_global_dimension_residue(s.level.get(), b, c, n);
            });
            const auto numeric = read_string([&](char* b, size_t c, size_t* n) {
                return z3orb_global_dimension_numeric(s.level.get(), digits, b, c, n);
            });
            if (glob_format == "json") {
                nlohmann::ordered_json doc;
                doc["level"] = level;
                doc["exact"] = render_poly(residue);
                doc["exact_coeffs"] = residue;
                doc["numeric"] = numeric;
                out << doc.dump(2) << "\n";
            } else {
                out << "exact: " << render_poly(residue) << "\n" << "numeric: " << numeric << "\n";
            }
        } else if (*verify) {
            status = run_verify(s, suite, vopts, out) ? kExitOk : kExitVerifyFailed;
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (out_path.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << " for writing\n";
            return kExitUsage;
        }
        file << out.str();
    }
    return status;
}
