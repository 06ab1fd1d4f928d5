// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <json.hpp>
#include <z3orb/fusion.hpp>
#include <z3orb/qdim.hpp>
#include <z3orb/verify.hpp>
#include <z3orb/weights.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <sys/wait.h>

using namespace z3orb;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(std::string why)
    {
        if (ok) detail = std::move(why);
        ok = false;
    }
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<void(Outcome&)>& body)
{
    Outcome out;
    const auto t0 = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_seconds > 0 && secs >= limit_seconds)
        out.fail("took " + std::to_string(secs) + "s, limit " + std::to_string(limit_seconds) + "s");
    std::printf("%s  [%d] %-44s %8.3fs%s%s\n", out.ok ? "PASS" : "FAIL", id, name, secs,
                out.detail.empty() ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
    if (!out.ok) ++failures;
}

std::string capture(const std::string& args, int& status)
{
    const std::string cmd = std::string("\"") + Z3ORB_CLI_PATH + "\" " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("cannot start CLI");
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int raw = pclose(pipe);
    status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return out;
}

Rational R(std::int64_t n, std::int64_t d = 1)
{
    return Rational(n, d);
}

// Twisted rows as printed for k > 1.
Rational twisted_row(Sector s, int k, int i, int j)
{
    const Rational base = R(i * (i + 2), 4 * (k + 2));
    const std::array edge{R(k, 36), R(k + 48, 36), R(k + 24, 36)};
    if (s == Sector::T1) {
        if (i == 0) return edge[j];
        return base + std::array{R(k - 6 * i, 36), R(k - 6 * i + 12, 36), R(k - 6 * i + 24, 36)}[j];
    }
    if (i == k) return edge[j];
    return base + std::array{R(k - 3 * i, 9), R(k - 3 * i + 3, 9), R(k - 3 * i + 6, 9)}[j];
}

double sine_qdim(int k, int i)
{
    const double t = std::numbers::pi / (k + 2);
    return std::sin((i + 1) * t) / std::sin(t);
}

void expect_clean(Outcome& o, const VerificationReport& r, bool exhaustive)
{
    if (!r.passed())
        o.fail(r.suite + " k=" + std::to_string(r.level.value()) + ": " + std::to_string(r.failure_count) +
               " failures, first: " + (r.failures.empty() ? "" : r.failures.front().description));
    if (exhaustive && r.sampled) o.fail(r.suite + " k=" + std::to_string(r.level.value()) + " was sampled");
}

} // namespace

int main()
{
    criterion(1, "k=1 weights via CLI catalog", 1.0, [](Outcome& o) {
        const std::array<std::string, 18> expected{"0",    "1",     "1",     "1/4", "1/4", "9/4",
                                                   "1/36", "49/36", "25/36", "1/9", "4/9", "16/9",
                                                   "1/9",  "4/9",   "16/9",  "1/36", "49/36", "25/36"};
        int status = -1;
        const auto doc = nlohmann::json::parse(capture("catalog --level 1 --format json", status));
        if (status != 0) o.fail("exit status " + std::to_string(status));
        const auto& mods = doc.at("modules");
        if (mods.size() != 18) return o.fail("expected 18 modules, got " + std::to_string(mods.size()));
        for (std::size_t n = 0; n < 18; ++n)
            if (mods[n].at("weight") != expected[n])
                o.fail(mods[n].at("label").get<std::string>() + " weight " + mods[n].at("weight").get<std::string>() +
                       " != " + expected[n]);
    });

    criterion(2, "twisted weight rows, k in {2,3,5}", 1.0, [](Outcome& o) {
        for (int k : {2, 3, 5})
            for (Sector s : {Sector::T1, Sector::T2})
                for (int i = 0; i <= k; ++i)
                    for (int j = 0; j < 3; ++j) {
                        const auto l = make_label(s, i, j, Level(k));
                        const auto got = conformal_weight(l);
                        const auto want = twisted_row(s, k, i, j);
                        if (got != want)
                            o.fail(l.key() + " at k=" + std::to_string(k) + ": " + got.to_string() +
                                   " != " + want.to_string());
                    }
    });

    criterion(3, "catalog count 9(k+1), k = 1..20", 1.0, [](Outcome& o) {
        for (int k = 1; k <= 20; ++k) {
            const auto n = enumerate_irreducibles(Level(k)).size();
            if (n != static_cast<std::size_t>(9 * (k + 1)))
                o.fail("k=" + std::to_string(k) + " has " + std::to_string(n));
        }
    });

    criterion(4, "k=1 Z/18 lattice oracle", 1.0, [](Outcome& o) {
        const auto r = verify_k1_lattice_oracle();
        expect_clean(o, r, true);
        if (r.checks_run < 324 + 18 + 18) o.fail("only " + std::to_string(r.checks_run) + " checks");
    });

    criterion(5, "ring axioms (cubic k<=6, quadratic k<=12)", 0, [](Outcome& o) {
        VerifyOptions opts;
        opts.samples = 0;
        for (int k = 1; k <= 12; ++k) {
            expect_clean(o, verify_unit(Level(k)), true);
            expect_clean(o, verify_commutativity(Level(k), opts), true);
        }
        for (int k = 1; k <= 6; ++k) {
            const auto t0 = Clock::now();
            expect_clean(o, verify_associativity(Level(k), opts), true);
            const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
            if (k == 6 && secs >= 60) o.fail("assoc at k=6 took " + std::to_string(secs) + "s");
            expect_clean(o, verify_duality(Level(k), opts), true);
        }
    });

    criterion(6, "qdim homomorphism, k <= 12", 10.0, [](Outcome& o) {
        VerifyOptions opts;
        opts.samples = 0;
        for (int k = 1; k <= 12; ++k) expect_clean(o, verify_qdim_homomorphism(Level(k), opts), true);
    });

    criterion(7, "global dimension", 0, [](Outcome& o) {
        const auto g1 = global_dimension(Level(1));
        if (std::abs(static_cast<double>(g1.numeric) - 18.0) > 1e-9) o.fail("numeric k=1 is not 18");
        if (g1.exact.residue() != ChebPoly::constant(18)) o.fail("exact k=1 is " + g1.exact.residue().to_string());
        for (int k = 1; k <= 8; ++k) {
            double direct = 0;
            for (const auto& l : enumerate_irreducibles(Level(k))) direct += std::pow(sine_qdim(k, l.index()), 2);
            const double formula = static_cast<double>(global_dimension(Level(k)).numeric);
            if (std::abs(formula - direct) > 1e-9)
                o.fail("k=" + std::to_string(k) + ": " + std::to_string(formula) + " vs " + std::to_string(direct));
        }
    });

    criterion(8, "simple currents are exactly i in {0,k}", 0, [](Outcome& o) {
        for (const auto& l : enumerate_irreducibles(Level(1)))
            if (!has_unit_qdim(l)) o.fail(l.key() + " at k=1 is not a simple current");
        for (int k = 1; k <= 12; ++k)
            for (const auto& l : enumerate_irreducibles(Level(k)))
                if (has_unit_qdim(l) != (l.index() == 0 || l.index() == k))
                    o.fail(l.key() + " at k=" + std::to_string(k));
    });

    criterion(9, "duals keep weight and qdim; involution", 0, [](Outcome& o) {
        for (int k = 1; k <= 12; ++k)
            for (const auto& a : enumerate_irreducibles(Level(k))) {
                const auto d = contragredient(a);
                const std::string where = a.key() + " at k=" + std::to_string(k);
                if (contragredient(d) != a) o.fail(where + ": not an involution");
                if (conformal_weight(d) != conformal_weight(a)) o.fail(where + ": weight changes");
                if (qdim_exact(d) != qdim_exact(a)) o.fail(where + ": qdim changes");
            }
    });

    std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
