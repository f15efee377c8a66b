#pragma once

// Independent checks of the closed-form frequency.
//
//  * oracle_frequency counts graphs one by one with the membership
//    criterion; nothing from the closed form is used.
//  * oracle_frequency_constructive builds the count from the edge
//    requirement sets E_{w,t}: it verifies they are pairwise disjoint over
//    U(w) and that the cycle-minimum requirements are implied, then
//    multiplies the number of nonempty subsets of each E_{w,t} (counted by
//    walking the submasks) by the free choices on the remaining edges.
//  * sample_rate estimates r(w) from uniformly random graphs.
//
// Sampling uses SplitMix64 in counter mode: trial i (0-based) takes the
// i-th output of a SplitMix64 generator seeded with `seed`, computed
// directly as mix(seed + (i + 1) * 0x9E3779B97F4A7C15), and keeps its low
// C(n,2) bits as the edge mask. Each trial depends only on (seed, i), so results
// are identical for any number of jobs and on any platform.

#include <chrono>
#include <cstdint>

#include "dfreq/frequency.hpp"
#include "dfreq/graph.hpp"
#include "dfreq/perm.hpp"

namespace dfreq {

inline constexpr int kOracleDefaultLimit = 7;
inline constexpr int kSweepDefaultLimit = 5;

struct OracleOptions {
    /// Worker threads; the result never depends on this.
    int jobs = 1;
    /// Allow n above the default limit (still bounded by kMaxGraphVertices).
    bool force = false;
};

struct OracleResult {
    ExactCount count;
    int universe_log2 = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// Throws std::length_error for n > kOracleDefaultLimit unless forced.
OracleResult oracle_frequency(const Derangement& w, const OracleOptions& opts = {});

/// Counts over an explicit mask range; used to check partition invariance.
std::uint64_t oracle_count_range(const Derangement& w, MaskRange range);

/// Throws std::logic_error if the requirement sets are not disjoint or a
/// cycle-minimum requirement is not implied (never expected).
OracleResult oracle_frequency_constructive(const Derangement& w);

struct MonteCarloEstimate {
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    std::uint64_t seed = 0;

    double estimate() const { return trials == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(trials); }

    friend bool operator==(const MonteCarloEstimate&, const MonteCarloEstimate&) = default;
};

/// One SplitMix64 step: advances `x` by the golden gamma and mixes.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Edge mask drawn for trial `index` under `seed`.
EdgeMask sample_graph_mask(int n, std::uint64_t seed, std::uint64_t index) noexcept;

/// Throws std::invalid_argument for trials == 0.
MonteCarloEstimate sample_rate(const Derangement& w, std::uint64_t trials, std::uint64_t seed, int jobs = 1);

/// Sum over all graphs G on {1..n} of |D(G)|. Throws std::length_error for
/// n > kSweepDefaultLimit unless forced.
ExactCount sum_over_graphs(int n, const OracleOptions& opts = {});

/// Sum over all derangements w of {1..n} of frequency(w).
ExactCount sum_of_frequencies(int n);

}  // namespace dfreq
