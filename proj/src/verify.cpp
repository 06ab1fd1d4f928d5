#include <z3orb/verify.hpp>
#include <z3orb/fusion.hpp>
#include <z3orb/qdim.hpp>
#include <z3orb/weights.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <random>
#include <set>
#include <thread>

namespace z3orb {

namespace {

using Clock = std::chrono::steady_clock;
using Terms = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

struct Collector {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::vector<VerificationFailure> recorded;

    void check(bool ok, const std::string& description, std::vector<IrrLabel> labels)
    {
        ++checks;
        if (ok) return;
        ++failures;
        if (recorded.size() < VerificationReport::kMaxRecordedFailures)
            recorded.push_back({description, std::move(labels)});
    }
};

void merge_into(VerificationReport& report, Collector& c)
{
    report.checks_run += c.checks;
    report.failure_count += c.failures;
    for (auto& f : c.recorded) {
        if (report.failures.size() >= VerificationReport::kMaxRecordedFailures) break;
        report.failures.push_back(std::move(f));
    }
}

unsigned worker_count(const VerifyOptions& opts)
{
    unsigned n = opts.threads != 0 ? opts.threads : std::thread::hardware_concurrency();
    return std::max(1u, n);
}

/// Runs fn(task, collector) for task in [0, tasks) across workers. Results are
/// merged in task order, so reports do not depend on scheduling.
template <class Fn>
void sweep(std::size_t tasks, const VerifyOptions& opts, VerificationReport& report, Fn fn)
{
    std::vector<Collector> results(tasks);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t t = next++; t < tasks; t = next++)
            fn(t, results[t]);
    };
    const unsigned n = std::min<std::size_t>(worker_count(opts), std::max<std::size_t>(tasks, 1));
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < n; ++w)
        pool.emplace_back(work);
    work();
    pool.clear();
    for (auto& c : results)
        merge_into(report, c);
}

/// Memoized fuse_irreducible over all ordered pairs, by label ordinal.
class ProductTable {
public:
    explicit ProductTable(Level level, const VerifyOptions& opts)
        : level_(level), labels_(enumerate_irreducibles(level)), n_(labels_.size()), table_(n_ * n_)
    {
        VerificationReport scratch;
        sweep(n_, opts, scratch, [&](std::size_t a, Collector&) {
            for (std::size_t b = 0; b < n_; ++b) {
                Terms& t = table_[a * n_ + b];
                for (const auto& [label, m] : fuse_irreducible(labels_[a], labels_[b]))
                    t.emplace_back(static_cast<std::uint32_t>(label.ordinal()), m);
            }
        });
    }

    std::size_t size() const noexcept { return n_; }
    const IrrLabel& label(std::size_t o) const { return labels_[o]; }
    const std::vector<IrrLabel>& labels() const noexcept { return labels_; }
    const Terms& at(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }

    std::uint64_t coefficient(std::size_t a, std::size_t b, std::size_t c) const
    {
        for (const auto& [o, m] : at(a, b))
            if (o == c) return m;
        return 0;
    }

    std::string render(const Terms& terms) const
    {
        FusionVector v(level_);
        for (const auto& [o, m] : terms)
            v.add(labels_[o], m);
        return v.to_string();
    }

private:
    Level level_;
    std::vector<IrrLabel> labels_;
    std::size_t n_;
    std::vector<Terms> table_;
};

void normalize(Terms& t)
{
    std::sort(t.begin(), t.end());
    Terms out;
    for (const auto& [o, m] : t) {
        if (!out.empty() && out.back().first == o)
            out.back().second += m;
        else
            out.emplace_back(o, m);
    }
    t.swap(out);
}

bool exhaustive(Level level, int cap, const VerifyOptions& opts, std::string_view suite)
{
    if (level.value() <= cap) return true;
    if (opts.samples == 0)
        throw Error(ErrorCode::CapExceeded,
                    std::string(suite) + " suite: level " + std::to_string(level.value()) +
                        " exceeds exhaustive cap " + std::to_string(cap) +
                        " and sampling is disabled");
    return false;
}

constexpr std::size_t kSampleChunk = 4096;

/// Deterministic sample streams: chunk c draws from seed_seq{seed, c}.
template <std::size_t Arity, class Fn>
void sample_sweep(std::size_t n, const VerifyOptions& opts, VerificationReport& report, Fn fn)
{
    const std::size_t chunks = (opts.samples + kSampleChunk - 1) / kSampleChunk;
    sweep(chunks, opts, report, [&](std::size_t chunk, Collector& c) {
        std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                          static_cast<std::uint32_t>(chunk)};
        std::mt19937_64 rng(seq);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        const std::size_t begin = chunk * kSampleChunk;
        const std::size_t end = std::min<std::size_t>(begin + kSampleChunk, opts.samples);
        for (std::size_t s = begin; s < end; ++s) {
            std::array<std::size_t, Arity> tuple;
            for (auto& x : tuple)
                x = pick(rng);
            fn(tuple, c);
        }
    });
    report.sampled = true;
}

template <class Fn>
VerificationReport timed(std::string_view name, Level level, Fn body)
{
    VerificationReport report;
    report.suite = std::string(name);
    report.level = level;
    const auto start = Clock::now();
    body(report);
    report.elapsed = Clock::now() - start;
    return report;
}

// k = 1 correspondence with the 18 modules V_{Z b + s b/18}, indexed by
// label ordinal (u:0:0 .. t2:1:2).
constexpr std::array<int, 18> kLatticeCharge{
    0, 6, 12, 15, 3, 9,   // u:0:j, u:1:j
    1, 7, 13, 16, 4, 10,  // t1:0:j, t1:1:j
    2, 14, 8, 17, 11, 5,  // t2:0:j, t2:1:j
};

} // namespace

std::string_view suite_name(Suite s) noexcept
{
    switch (s) {
    case Suite::Unit: return "unit";
    case Suite::Commutativity: return "comm";
    case Suite::Associativity: return "assoc";
    case Suite::Duality: return "dual";
    case Suite::QdimHomomorphism: return "qdim";
    case Suite::LatticeOracle: return "oracle";
    case Suite::Catalog: return "catalog";
    }
    return "?";
}

std::optional<Suite> suite_from_name(std::string_view name) noexcept
{
    for (Suite s : kAllSuites)
        if (suite_name(s) == name) return s;
    return std::nullopt;
}

int lattice_charge(const IrrLabel& label)
{
    if (label.level().value() != 1)
        throw Error(ErrorCode::LevelMismatch, "lattice correspondence exists only at level 1");
    return kLatticeCharge[label.ordinal()];
}

VerificationReport verify_unit(Level level)
{
    return timed("unit", level, [&](VerificationReport& report) {
        Collector c;
        const IrrLabel vac = vacuum(level);
        for (const auto& x : enumerate_irreducibles(level)) {
            const FusionVector got = fuse_irreducible(vac, x);
            c.check(got == FusionVector(x), "vacuum x " + x.key() + " = " + got.to_string() +
                                                ", expected {" + x.key() + ": 1}",
                    {vac, x});
        }
        merge_into(report, c);
    });
}

VerificationReport verify_commutativity(Level level, const VerifyOptions& opts)
{
    return timed("comm", level, [&](VerificationReport& report) {
        const bool full = exhaustive(level, opts.quadratic_cap, opts, "comm");
        const ProductTable table(level, opts);
        auto check = [&](std::size_t a, std::size_t b, Collector& c) {
            const Terms& ab = table.at(a, b);
            const Terms& ba = table.at(b, a);
            c.check(ab == ba,
                    table.label(a).key() + " x " + table.label(b).key() + " = " + table.render(ab) +
                        " but reversed = " + table.render(ba),
                    {table.label(a), table.label(b)});
        };
        if (full) {
            sweep(table.size(), opts, report, [&](std::size_t a, Collector& c) {
                for (std::size_t b = 0; b < table.size(); ++b)
                    check(a, b, c);
            });
        } else {
            sample_sweep<2>(table.size(), opts, report,
                            [&](const std::array<std::size_t, 2>& t, Collector& c) { check(t[0], t[1], c); });
        }
    });
}

VerificationReport verify_associativity(Level level, const VerifyOptions& opts)
{
    return timed("assoc", level, [&](VerificationReport& report) {
        const bool full = exhaustive(level, opts.cubic_cap, opts, "assoc");
        const ProductTable table(level, opts);
        auto check = [&](std::size_t a, std::size_t b, std::size_t c, Collector& col) {
            Terms left;
            for (const auto& [d, m] : table.at(a, b))
                for (const auto& [o, n] : table.at(d, c))
                    left.emplace_back(o, m * n);
            Terms right;
            for (const auto& [e, m] : table.at(b, c))
                for (const auto& [o, n] : table.at(a, e))
                    right.emplace_back(o, m * n);
            normalize(left);
            normalize(right);
            col.check(left == right,
                      "(" + table.label(a).key() + " x " + table.label(b).key() + ") x " +
                          table.label(c).key() + " = " + table.render(left) + " but " +
                          table.label(a).key() + " x (" + table.label(b).key() + " x " +
                          table.label(c).key() + ") = " + table.render(right),
                      {table.label(a), table.label(b), table.label(c)});
        };
        if (full) {
            const std::size_t n = table.size();
            sweep(n * n, opts, report, [&](std::size_t ab, Collector& col) {
                for (std::size_t c = 0; c < n; ++c)
                    check(ab / n, ab % n, c, col);
            });
        } else {
            sample_sweep<3>(table.size(), opts, report, [&](const std::array<std::size_t, 3>& t, Collector& col) {
                check(t[0], t[1], t[2], col);
            });
        }
    });
}

VerificationReport verify_duality(Level level, const VerifyOptions& opts)
{
    return timed("dual", level, [&](VerificationReport& report) {
        const bool full = exhaustive(level, opts.cubic_cap, opts, "dual");
        const ProductTable table(level, opts);
        const std::size_t n = table.size();
        std::vector<std::size_t> dual(n);
        for (std::size_t a = 0; a < n; ++a)
            dual[a] = contragredient(table.label(a)).ordinal();
        const std::size_t vac = vacuum(level).ordinal();

        // N_{A,B}^C = N_{A,C'}^{B'}
        auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c, Collector& col) {
            const auto lhs = table.coefficient(a, b, c);
            const auto rhs = table.coefficient(a, dual[c], dual[b]);
            col.check(lhs == rhs,
                      "N(" + table.label(a).key() + ", " + table.label(b).key() + "; " + table.label(c).key() +
                          ") = " + std::to_string(lhs) + " but N(" + table.label(a).key() + ", " +
                          table.label(dual[c]).key() + "; " + table.label(dual[b]).key() +
                          ") = " + std::to_string(rhs),
                      {table.label(a), table.label(b), table.label(c)});
        };
        if (full) {
            sweep(n * n, opts, report, [&](std::size_t ab, Collector& col) {
                for (std::size_t c = 0; c < n; ++c)
                    check_triple(ab / n, ab % n, c, col);
            });
        } else {
            sample_sweep<3>(n, opts, report, [&](const std::array<std::size_t, 3>& t, Collector& col) {
                check_triple(t[0], t[1], t[2], col);
            });
        }

        Collector c;
        for (std::size_t a = 0; a < n; ++a) {
            const IrrLabel& A = table.label(a);
            const IrrLabel& Ad = table.label(dual[a]);
            for (std::size_t b = 0; b < n; ++b) {
                const auto m = table.coefficient(a, b, vac);
                const std::uint64_t want = b == dual[a] ? 1 : 0;
                c.check(m == want,
                        "N(" + A.key() + ", " + table.label(b).key() + "; vacuum) = " + std::to_string(m) +
                            ", expected " + std::to_string(want),
                        {A, table.label(b)});
            }
            c.check(dual[dual[a]] == a, "dual is not an involution at " + A.key(), {A, Ad});
            const Rational w = conformal_weight(A);
            const Rational wd = conformal_weight(Ad);
            c.check(w == wd, "weight(" + A.key() + ") = " + w.to_string() + " but weight(" + Ad.key() +
                                 ") = " + wd.to_string(),
                    {A, Ad});
            const QDimElement q = qdim_exact(A);
            const QDimElement qd = qdim_exact(Ad);
            c.check(q == qd, "qdim(" + A.key() + ") = " + q.residue().to_string() + " but qdim(" + Ad.key() +
                                 ") = " + qd.residue().to_string(),
                    {A, Ad});
        }
        merge_into(report, c);
    });
}

VerificationReport verify_qdim_homomorphism(Level level, const VerifyOptions& opts)
{
    return timed("qdim", level, [&](VerificationReport& report) {
        const bool full = exhaustive(level, opts.quadratic_cap, opts, "qdim");
        const ProductTable table(level, opts);
        std::vector<QDimElement> d;
        d.reserve(table.size());
        for (const auto& l : table.labels())
            d.push_back(qdim_exact(l));

        auto check = [&](std::size_t a, std::size_t b, Collector& c) {
            const QDimElement lhs = d[a] * d[b];
            QDimElement rhs = qdim_zero(level);
            for (const auto& [o, m] : table.at(a, b))
                rhs += static_cast<std::int64_t>(m) * d[o];
            c.check(lhs == rhs,
                    "qdim(" + table.label(a).key() + ") * qdim(" + table.label(b).key() +
                        ") = " + lhs.residue().to_string() + " but sum over " + table.render(table.at(a, b)) +
                        " = " + rhs.residue().to_string(),
                    {table.label(a), table.label(b)});
        };
        if (full) {
            sweep(table.size(), opts, report, [&](std::size_t a, Collector& c) {
                for (std::size_t b = 0; b < table.size(); ++b)
                    check(a, b, c);
            });
        } else {
            sample_sweep<2>(table.size(), opts, report,
                            [&](const std::array<std::size_t, 2>& t, Collector& c) { check(t[0], t[1], c); });
        }

        // Simple currents: unit quantum dimension exactly for i in {0, k}.
        Collector c;
        for (const auto& l : table.labels()) {
            const bool edge = l.index() == 0 || l.index() == level.value();
            c.check(has_unit_qdim(l) == edge,
                    "has_unit_qdim(" + l.key() + ") = " + (edge ? "false" : "true") + ", expected " +
                        (edge ? "true" : "false"),
                    {l});
        }
        merge_into(report, c);
    });
}

VerificationReport verify_k1_lattice_oracle()
{
    const Level level(1);
    return timed("oracle", level, [&](VerificationReport& report) {
        Collector c;
        const auto labels = enumerate_irreducibles(level);
        std::array<std::size_t, 18> by_charge{};
        for (const auto& l : labels)
            by_charge[lattice_charge(l)] = l.ordinal();

        for (const auto& a : labels) {
            const int s = lattice_charge(a);
            for (const auto& b : labels) {
                const int t = lattice_charge(b);
                const IrrLabel& expect = labels[by_charge[(s + t) % 18]];
                const FusionVector got = fuse_irreducible(a, b);
                c.check(got == FusionVector(expect),
                        a.key() + " x " + b.key() + " = " + got.to_string() + ", lattice model gives " +
                            std::to_string(s) + " + " + std::to_string(t) + " -> " + expect.key(),
                        {a, b});
            }
            const IrrLabel d = contragredient(a);
            c.check(lattice_charge(d) == (18 - s) % 18,
                    "dual(" + a.key() + ") = " + d.key() + " has charge " + std::to_string(lattice_charge(d)) +
                        ", expected " + std::to_string((18 - s) % 18),
                    {a, d});
            const Rational w = conformal_weight(a);
            const Rational lattice_w(static_cast<std::int64_t>(s) * s, 36);
            c.check((w - lattice_w).is_integer(),
                    "weight(" + a.key() + ") = " + w.to_string() + " is not " + lattice_w.to_string() + " mod 1",
                    {a});
            c.check(has_unit_qdim(a), a.key() + " is not a simple current", {a});
        }
        merge_into(report, c);
    });
}

VerificationReport verify_catalog(Level level)
{
    return timed("catalog", level, [&](VerificationReport& report) {
        Collector c;
        const auto labels = enumerate_irreducibles(level);
        const std::size_t want = 9u * static_cast<std::size_t>(level.value() + 1);
        c.check(labels.size() == want,
                "catalog has " + std::to_string(labels.size()) + " labels, expected " + std::to_string(want), {});
        const std::set<IrrLabel> distinct(labels.begin(), labels.end());
        c.check(distinct.size() == labels.size(), "catalog contains duplicate labels", {});

        const int k = level.value();
        for (const auto& l : labels) {
            const Rational w = conformal_weight(l);
            c.check(w >= Rational(0), "weight(" + l.key() + ") = " + w.to_string() + " is negative", {l});
            c.check((w == Rational(0)) == l.is_vacuum(),
                    "weight(" + l.key() + ") = " + w.to_string() +
                        (l.is_vacuum() ? ", vacuum must have weight 0" : ", only the vacuum has weight 0"),
                    {l});
            if (l.sector() == Sector::T1) {
                const IrrLabel partner(Sector::T2, k - l.index(), l.charge(), level);
                const Rational wp = conformal_weight(partner);
                c.check(w == wp,
                        "weight(" + l.key() + ") = " + w.to_string() + " but weight(" + partner.key() +
                            ") = " + wp.to_string(),
                        {l, partner});
                if (l.charge() == 0) {
                    const Rational base = base_twist_weight(level, l.index(), 1);
                    c.check(w == base,
                            "weight(" + l.key() + ") = " + w.to_string() + " differs from twisted base " +
                                base.to_string(),
                            {l});
                }
            }
        }
        merge_into(report, c);
    });
}

VerificationReport run_suite(Suite suite, Level level, const VerifyOptions& opts)
{
    switch (suite) {
    case Suite::Unit: return verify_unit(level);
    case Suite::Commutativity: return verify_commutativity(level, opts);
    case Suite::Associativity: return verify_associativity(level, opts);
    case Suite::Duality: return verify_duality(level, opts);
    case Suite::QdimHomomorphism: return verify_qdim_homomorphism(level, opts);
    case Suite::LatticeOracle: return verify_k1_lattice_oracle();
    case Suite::Catalog: return verify_catalog(level);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown suite");
}

} // namespace z3orb
