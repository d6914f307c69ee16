#ifndef HGCOLOR_BENCH_HPP
#define HGCOLOR_BENCH_HPP

#include <hgcolor/types.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hgcolor {

enum class Algorithm { Delayed, Certified, Balanced, KBalanced, Local };

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

enum class InstanceKind { Uniform, Erdos };

/// Everything a Monte Carlo run needs; the CSV is a pure function of this.
struct TrialSpec {
    Algorithm algorithm = Algorithm::Certified;
    InstanceKind instance = InstanceKind::Uniform;
    std::uint32_t n = 0;
    std::uint64_t v = 0;  // universe for uniform instances
    std::uint64_t q = 0;  // edges for uniform instances
    std::uint32_t t = 0;  // erdos parameter when instance == Erdos
    std::optional<double> p;               // delayed/certified; default p_default(n)
    std::uint32_t k = 2;                   // kbalanced classes
    std::optional<std::uint64_t> cap;      // certified residual cap
    std::optional<std::uint64_t> max_passes;  // local; default 4*log2(v+2)
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

struct TrialRecord {
    std::uint64_t trial = 0;
    std::uint64_t derived_seed = 0;
    std::string outcome;  // "valid" | "invalid" | failure reason
    bool produced_coloring = false;
    bool valid = false;   // independent re-validation, the ground truth
    std::uint64_t flips = 0;
    std::uint64_t residual_blue = 0;
    std::uint64_t residual_red = 0;
    std::uint64_t passes = 0;
    std::uint64_t peak_state = 0;
    std::uint32_t bits_per_vertex = 0;
    double wall_ms = 0.0;
};

struct BenchSummary {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;  // valid colorings delivered
    double success_rate = 0.0;
    double mean_residual_blue = 0.0;
    double mean_residual_red = 0.0;
    double mean_passes = 0.0;
    double mean_flips = 0.0;
};

struct BenchResult {
    std::vector<TrialRecord> records;
    BenchSummary summary;
};

/**
 * Runs spec.trials independent trials; trial i draws its instance and its
 * algorithm randomness from seeds derived by a keyed counter, so the result
 * is a pure function of the TrialSpec. Every returned coloring is re-validated
 * against the stored instance; a certified/balanced/kbalanced/local trial
 * that validates "invalid" aborts with std::logic_error (soundness is a hard
 * guarantee, not a statistic).
 */
BenchResult run_bench(const TrialSpec& spec);

/// CSV: one '#' schema comment, one row per trial, one trailing summary row.
void write_csv(std::ostream& out, const TrialSpec& spec, const BenchResult& result,
               bool include_timing);

}  // namespace hgcolor

#endif  // HGCOLOR_BENCH_HPP
