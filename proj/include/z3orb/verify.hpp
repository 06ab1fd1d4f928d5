#pragma once

#include <z3orb/labels.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace z3orb {

enum class Suite { Unit, Commutativity, Associativity, Duality, QdimHomomorphism, LatticeOracle, Catalog };

inline constexpr Suite kAllSuites[] = {Suite::Unit,     Suite::Commutativity,    Suite::Associativity,
                                       Suite::Duality,  Suite::QdimHomomorphism, Suite::LatticeOracle,
                                       Suite::Catalog};

/// CLI names: unit, comm, assoc, dual, qdim, oracle, catalog.
std::string_view suite_name(Suite s) noexcept;
std::optional<Suite> suite_from_name(std::string_view name) noexcept;

struct VerifyOptions {
    /// Highest level swept exhaustively by the triple suites (assoc, dual).
    int cubic_cap = 8;
    /// Highest level swept exhaustively by the pair suites (comm, qdim).
    int quadratic_cap = 12;
    /// Random tuples drawn above the cap. Zero means refuse with CapExceeded.
    std::uint64_t samples = 100000;
    std::uint64_t seed = 20190901;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct VerificationFailure {
    std::string description;
    std::vector<IrrLabel> counterexample;
};

struct VerificationReport {
    std::string suite;
    Level level{1};
    std::uint64_t checks_run = 0;
    /// First kMaxRecordedFailures failures in canonical order.
    std::vector<VerificationFailure> failures;
    std::uint64_t failure_count = 0;
    bool sampled = false;
    std::chrono::duration<double> elapsed{};

    static constexpr std::size_t kMaxRecordedFailures = 1000;

    bool passed() const noexcept { return failure_count == 0; }
};

VerificationReport verify_unit(Level level);
VerificationReport verify_commutativity(Level level, const VerifyOptions& opts = {});
VerificationReport verify_associativity(Level level, const VerifyOptions& opts = {});
VerificationReport verify_duality(Level level, const VerifyOptions& opts = {});
VerificationReport verify_qdim_homomorphism(Level level, const VerifyOptions& opts = {});
/// Always runs at k = 1 against the Z/18 lattice model.
VerificationReport verify_k1_lattice_oracle();
VerificationReport verify_catalog(Level level);

VerificationReport run_suite(Suite suite, Level level, const VerifyOptions& opts = {});

/// Lattice residue s in Z/18 attached to each k = 1 label; V_{Z b + s b/18}.
int lattice_charge(const IrrLabel& label);

} // namespace z3orb
