#pragma once

// Ordered simple graphs on {1..n} encoded as a single 64-bit edge mask.
//
// Bit layout: the unordered pair {u,v}, u < v, occupies bit
//   index(u,v) = sum_{i<u} (n - i) + (v - u - 1),
// i.e. pairs are numbered in lexicographic order (1,2)=0, (1,3)=1, ...,
// (1,n)=n-2, (2,3)=n-1, ... This layout is part of the file-format
// contract: masks printed by the tools are reproducible bit for bit.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dfreq/perm.hpp"

namespace dfreq {

using EdgeMask = std::uint64_t;

/// Largest n whose C(n,2) potential edges fit in one EdgeMask.
inline constexpr int kMaxGraphVertices = 11;

constexpr int pair_count(int n) noexcept { return n * (n - 1) / 2; }

/// Lexicographic bit index of {u,v}. Requires 1 <= u,v <= n and u != v;
/// the arguments may come in either order.
int edge_index(int n, Vertex u, Vertex v);

/// Inverse of edge_index.
std::pair<Vertex, Vertex> edge_at(int n, int index);

/// An arbitrary collection of potential edges on {1..n}.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int n, EdgeMask mask = 0);

    int vertex_count() const noexcept { return n_; }
    EdgeMask mask() const noexcept { return mask_; }
    int size() const noexcept;
    bool empty() const noexcept { return mask_ == 0; }

    bool contains(Vertex u, Vertex v) const;
    void insert(Vertex u, Vertex v);

    /// Edges as (u,v) with u < v in ascending bit order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool intersects(const EdgeSet& other) const noexcept { return (mask_ & other.mask_) != 0; }
    bool subset_of(const EdgeSet& other) const noexcept { return (mask_ & ~other.mask_) == 0; }

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    int n_ = 0;
    EdgeMask mask_ = 0;
};

class OrderedGraph {
public:
    /// Throws std::invalid_argument if n < 1, n > kMaxGraphVertices, or the
    /// mask has bits beyond C(n,2).
    explicit OrderedGraph(int n, EdgeMask edges = 0);

    int vertex_count() const noexcept { return n_; }
    EdgeMask mask() const noexcept { return edges_; }
    int edge_count() const noexcept;
    EdgeSet edge_set() const { return EdgeSet(n_, edges_); }

    /// Never true for u == v. Throws std::out_of_range for vertices outside {1..n}.
    bool adjacent(Vertex u, Vertex v) const;

    /// Unchecked variant for hot loops; u != v and both in range.
    bool has_edge_unchecked(Vertex u, Vertex v) const noexcept;

    friend bool operator==(const OrderedGraph&, const OrderedGraph&) = default;

private:
    int n_;
    EdgeMask edges_;
};

OrderedGraph complete_graph(int n);
OrderedGraph empty_graph(int n);

/// Text format: first line n, then one "u v" per non-empty line. Either
/// order within a pair is accepted. Errors report line and column.
OrderedGraph parse_graph(std::string_view text);

/// JSON format: {"n": int, "edges": [[u,v], ...]}.
OrderedGraph parse_graph_json(std::string_view text);

/// Canonical text output: u < v, edges in ascending bit order.
std::string render_graph(const OrderedGraph& g);

/// Reads a graph file; ".json" extension selects the JSON parser.
OrderedGraph load_graph_file(const std::string& path);

/// Number of graphs on {1..n}, 2^{C(n,2)}.
std::uint64_t graph_count(int n);

/// Half-open range of edge masks.
struct MaskRange {
    EdgeMask first;
    EdgeMask last;
};

/// Splits [0, graph_count(n)) into `parts` contiguous ranges whose sizes
/// differ by at most one. Empty ranges are dropped.
std::vector<MaskRange> partition_graphs(int n, int parts);

/// Visits graphs in ascending mask order over `range`.
void for_each_graph(int n, MaskRange range, const std::function<void(const OrderedGraph&)>& fn);

/// Visits all 2^{C(n,2)} graphs in ascending mask order.
void for_each_graph(int n, const std::function<void(const OrderedGraph&)>& fn);

}  // namespace dfreq
