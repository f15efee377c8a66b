#include "dfreq/graph.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dfreq {

namespace {

void check_vertex(int n, Vertex v) {
    if (v < 1 || v > n)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside {1.." + std::to_string(n) + "}");
}

EdgeMask full_mask(int n) {
    const int bits = pair_count(n);
    return bits == 64 ? ~EdgeMask{0} : (EdgeMask{1} << bits) - 1;
}

}  // namespace

int edge_index(int n, Vertex u, Vertex v) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw std::invalid_argument("loop {" + std::to_string(u) + "," + std::to_string(u) + "} is not an edge");
    if (u > v) std::swap(u, v);
    // sum_{i=1}^{u-1} (n - i) = (u-1)*n - (u-1)*u/2
    return (u - 1) * n - (u - 1) * u / 2 + (v - u - 1);
}

std::pair<Vertex, Vertex> edge_at(int n, int index) {
    if (index < 0 || index >= pair_count(n)) throw std::out_of_range("edge index out of range");
    Vertex u = 1;
    while (index >= n - u) {
        index -= n - u;
        ++u;
    }
    return {u, u + 1 + index};
}

EdgeSet::EdgeSet(int n, EdgeMask mask) : n_(n), mask_(mask) {
    if (n < 0 || n > kMaxGraphVertices)
        throw std::invalid_argument("edge sets support at most " + std::to_string(kMaxGraphVertices) + " vertices");
    if ((mask & ~full_mask(n)) != 0) throw std::invalid_argument("edge mask has bits beyond C(n,2)");
}

int EdgeSet::size() const noexcept { return std::popcount(mask_); }

bool EdgeSet::contains(Vertex u, Vertex v) const {
    if (u == v) return false;
    return (mask_ >> edge_index(n_, u, v)) & 1U;
}

void EdgeSet::insert(Vertex u, Vertex v) { mask_ |= EdgeMask{1} << edge_index(n_, u, v); }

std::vector<std::pair<Vertex, Vertex>> EdgeSet::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (EdgeMask m = mask_; m != 0; m &= m - 1) out.push_back(edge_at(n_, std::countr_zero(m)));
    return out;
}

OrderedGraph::OrderedGraph(int n, EdgeMask edges) : n_(n), edges_(edges) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (n > kMaxGraphVertices)
        throw std::invalid_argument("graphs with " + std::to_string(n) + " vertices exceed the " +
                                    std::to_string(kMaxGraphVertices) + "-vertex mask capacity");
    if ((edges & ~full_mask(n)) != 0) throw std::invalid_argument("edge mask has bits beyond C(n,2)");
}

int OrderedGraph::edge_count() const noexcept { return std::popcount(edges_); }

bool OrderedGraph::adjacent(Vertex u, Vertex v) const {
    check_vertex(n_, u);
    check_vertex(n_, v);
    if (u == v) return false;
    return has_edge_unchecked(u, v);
}

bool OrderedGraph::has_edge_unchecked(Vertex u, Vertex v) const noexcept {
    if (u > v) std::swap(u, v);
    const int idx = (u - 1) * n_ - (u - 1) * u / 2 + (v - u - 1);
    return (edges_ >> idx) & 1U;
}

OrderedGraph complete_graph(int n) { return OrderedGraph(n, full_mask(n)); }
OrderedGraph empty_graph(int n) { return OrderedGraph(n, 0); }

OrderedGraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int n = 0;
    bool have_n = false;
    EdgeMask mask = 0;

    auto parse_int = [&](const std::string& s, std::size_t& pos, const char* what) -> long long {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
        const std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (start == pos || pos - start > 9)
            throw ParseError(std::string("expected ") + what, lineno, static_cast<int>(start + 1));
        return std::stoll(s.substr(start, pos - start));
    };
    auto expect_end = [&](const std::string& s, std::size_t pos) {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
        if (pos != s.size()) throw ParseError("trailing characters", lineno, static_cast<int>(pos + 1));
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::size_t pos = 0;
        if (!have_n) {
            const long long value = parse_int(line, pos, "vertex count");
            expect_end(line, pos);
            if (value < 1 || value > kMaxGraphVertices)
                throw ParseError("vertex count must be in [1, " + std::to_string(kMaxGraphVertices) + "]", lineno, 1);
            n = static_cast<int>(value);
            have_n = true;
            continue;
        }
        const std::size_t u_col = pos;
        const long long u = parse_int(line, pos, "vertex");
        const std::size_t v_col = pos;
        const long long v = parse_int(line, pos, "second vertex");
        expect_end(line, pos);
        if (u < 1 || u > n)
            throw ParseError("vertex " + std::to_string(u) + " out of range", lineno, static_cast<int>(u_col + 1));
        if (v < 1 || v > n)
            throw ParseError("vertex " + std::to_string(v) + " out of range", lineno, static_cast<int>(v_col + 1));
        if (u == v) throw ParseError("loop at vertex " + std::to_string(u), lineno, static_cast<int>(u_col + 1));
        const EdgeMask bit = EdgeMask{1} << edge_index(n, static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (mask & bit)
            throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), lineno,
                             static_cast<int>(u_col + 1));
        mask |= bit;
    }
    if (!have_n) throw ParseError("missing vertex count", lineno == 0 ? 1 : lineno, 1);
    return OrderedGraph(n, mask);
}

OrderedGraph parse_graph_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), 0, static_cast<int>(e.byte));
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("expected object with integer \"n\"", 0, 0);
    const auto n = j["n"].get<long long>();
    if (n < 1 || n > kMaxGraphVertices)
        throw ParseError("vertex count must be in [1, " + std::to_string(kMaxGraphVertices) + "]", 0, 0);
    EdgeMask mask = 0;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array", 0, 0);
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw ParseError("each edge must be a pair of integers", 0, 0);
            const auto u = e[0].get<long long>();
            const auto v = e[1].get<long long>();
            if (u < 1 || u > n || v < 1 || v > n) throw ParseError("edge vertex out of range", 0, 0);
            if (u == v) throw ParseError("loop at vertex " + std::to_string(u), 0, 0);
            const EdgeMask bit = EdgeMask{1} << edge_index(static_cast<int>(n), static_cast<Vertex>(u),
                                                           static_cast<Vertex>(v));
            if (mask & bit) throw ParseError("duplicate edge", 0, 0);
            mask |= bit;
        }
    }
    return OrderedGraph(static_cast<int>(n), mask);
}

std::string render_graph(const OrderedGraph& g) {
    std::string out = std::to_string(g.vertex_count()) + "\n";
    for (const auto& [u, v] : g.edge_set().edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

OrderedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    return json ? parse_graph_json(buf.str()) : parse_graph(buf.str());
}

std::uint64_t graph_count(int n) {
    const int bits = pair_count(n);
    if (bits >= 64) throw std::overflow_error("graph count does not fit in 64 bits");
    return std::uint64_t{1} << bits;
}

std::vector<MaskRange> partition_graphs(int n, int parts) {
    if (parts < 1) throw std::invalid_argument("need at least one part");
    const std::uint64_t total = graph_count(n);
    const std::uint64_t p = static_cast<std::uint64_t>(parts);
    std::vector<MaskRange> out;
    EdgeMask first = 0;
    for (std::uint64_t i = 0; i < p; ++i) {
        const EdgeMask len = total / p + (i < total % p ? 1 : 0);
        if (len == 0) continue;
        out.push_back({first, first + len});
        first += len;
    }
    return out;
}

void for_each_graph(int n, MaskRange range, const std::function<void(const OrderedGraph&)>& fn) {
    const std::uint64_t total = graph_count(n);
    if (range.first > range.last || range.last > total) throw std::out_of_range("mask range outside graph universe");
    for (EdgeMask m = range.first; m < range.last; ++m) fn(OrderedGraph(n, m));
}

void for_each_graph(int n, const std::function<void(const OrderedGraph&)>& fn) {
    for_each_graph(n, MaskRange{0, graph_count(n)}, fn);
}

}  // namespace dfreq
