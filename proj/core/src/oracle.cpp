#include "dfreq/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>
#include <vector>

#include "dfreq/derangement_set.hpp"

namespace dfreq {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// Runs fn(part_index) on `parts` threads (inline when parts == 1) and
// returns the per-part results in index order.
template <typename Fn>
std::vector<std::uint64_t> run_parts(std::size_t parts, Fn fn) {
    std::vector<std::uint64_t> out(parts, 0);
    if (parts == 1) {
        out[0] = fn(std::size_t{0});
        return out;
    }
    std::vector<std::jthread> workers;
    workers.reserve(parts);
    for (std::size_t i = 0; i < parts; ++i) workers.emplace_back([&, i] { out[i] = fn(i); });
    workers.clear();
    return out;
}

void check_limit(int n, int limit, bool force, const char* what) {
    if (n > kMaxGraphVertices)
        throw std::length_error(std::string(what) + " cannot enumerate graphs on more than " +
                                std::to_string(kMaxGraphVertices) + " vertices");
    if (n > limit && !force)
        throw std::length_error(std::string(what) + " limited to n <= " + std::to_string(limit) +
                                " without --force (got n = " + std::to_string(n) + ")");
}

}  // namespace

std::uint64_t oracle_count_range(const Derangement& w, MaskRange range) {
    const int n = w.size();
    const MembershipTest member(w.permutation());
    std::uint64_t hits = 0;
    for_each_graph(n, range, [&](const OrderedGraph& g) { hits += member(g) ? 1 : 0; });
    return hits;
}

OracleResult oracle_frequency(const Derangement& w, const OracleOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    const int n = w.size();
    check_limit(n, kOracleDefaultLimit, opts.force, "oracle_frequency");

    const auto ranges = partition_graphs(n, std::max(opts.jobs, 1));
    const auto per_part = run_parts(ranges.size(), [&](std::size_t i) { return oracle_count_range(w, ranges[i]); });

    OracleResult r;
    for (const auto c : per_part) r.count += c;
    r.universe_log2 = pair_count(n);
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

OracleResult oracle_frequency_constructive(const Derangement& w) {
    const auto start = std::chrono::steady_clock::now();
    const int n = w.size();
    if (n > kMaxGraphVertices)
        throw std::length_error("constructive oracle needs n <= " + std::to_string(kMaxGraphVertices));

    const NonMinSet u = non_min_elements(w);
    EdgeMask constrained = 0;
    ExactCount count = 1;
    for (const Vertex t : u.elements) {
        const EdgeMask e = edge_requirement(w, t).mask();
        if (e & constrained) throw std::logic_error("edge requirements overlap at vertex " + std::to_string(t));
        constrained |= e;

        // Nonempty subsets of E_{w,t}: walk every submask of e.
        std::uint64_t choices = 0;
        for (EdgeMask sub = e; sub != 0; sub = (sub - 1) & e) ++choices;
        count *= choices;
    }
    // Requirements at cycle minima must already be met by any choice above.
    for (const auto& c : w.cycles()) {
        const Vertex s = c.front();
        if (!edge_requirement(w, w(s)).subset_of(edge_requirement(w, s)))
            throw std::logic_error("requirement at cycle minimum " + std::to_string(s) + " is not implied");
    }
    const int free_edges = pair_count(n) - std::popcount(constrained);
    count <<= free_edges;

    OracleResult r;
    r.count = count;
    r.universe_log2 = pair_count(n);
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += kGoldenGamma;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

EdgeMask sample_graph_mask(int n, std::uint64_t seed, std::uint64_t index) noexcept {
    const int bits = pair_count(n);
    const EdgeMask keep = bits >= 64 ? ~EdgeMask{0} : (EdgeMask{1} << bits) - 1;
    return splitmix64(seed + index * kGoldenGamma) & keep;
}

MonteCarloEstimate sample_rate(const Derangement& w, std::uint64_t trials, std::uint64_t seed, int jobs) {
    if (trials == 0) throw std::invalid_argument("need at least one trial");
    const int n = w.size();
    if (n > kMaxGraphVertices)
        throw std::length_error("sampling needs n <= " + std::to_string(kMaxGraphVertices));
    const MembershipTest member(w.permutation());

    const std::uint64_t parts = std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)), trials);
    const auto per_part = run_parts(static_cast<std::size_t>(parts), [&](std::size_t i) {
        const std::uint64_t first = trials / parts * i + std::min<std::uint64_t>(i, trials % parts);
        const std::uint64_t len = trials / parts + (i < trials % parts ? 1 : 0);
        std::uint64_t hits = 0;
        for (std::uint64_t k = first; k < first + len; ++k)
            hits += member(OrderedGraph(n, sample_graph_mask(n, seed, k))) ? 1 : 0;
        return hits;
    });

    MonteCarloEstimate est{trials, 0, seed};
    for (const auto h : per_part) est.hits += h;
    return est;
}

ExactCount sum_over_graphs(int n, const OracleOptions& opts) {
    check_limit(n, kSweepDefaultLimit, opts.force, "sum_over_graphs");
    std::vector<MembershipTest> tests;
    for_each_derangement(n, [&](const Derangement& w) { tests.emplace_back(w.permutation()); });

    const auto ranges = partition_graphs(n, std::max(opts.jobs, 1));
    const auto per_part = run_parts(ranges.size(), [&](std::size_t i) {
        std::uint64_t total = 0;
        for_each_graph(n, ranges[i], [&](const OrderedGraph& g) {
            for (const auto& member : tests) total += member(g) ? 1 : 0;
        });
        return total;
    });

    ExactCount sum = 0;
    for (const auto c : per_part) sum += c;
    return sum;
}

ExactCount sum_of_frequencies(int n) {
    ExactCount sum = 0;
    for_each_derangement(n, [&](const Derangement& w) { sum += frequency(w); });
    return sum;
}

}  // namespace dfreq
