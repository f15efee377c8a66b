#include "dfreq/derangement_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dfreq {

namespace {

void check_sizes(const OrderedGraph& g, const Permutation& w) {
    if (g.vertex_count() != w.size())
        throw std::invalid_argument("permutation acts on " + std::to_string(w.size()) + " vertices but the graph has " +
                                    std::to_string(g.vertex_count()));
}

}  // namespace

MembershipReport check_membership(const OrderedGraph& g, const Permutation& w) {
    check_sizes(g, w);
    const Canopy c(w);
    MembershipReport report;
    for (Vertex t = 1; t <= w.size(); ++t) {
        const Vertex l = c.lambda(t);
        const auto& r = c.rho(t);
        const bool ok = std::any_of(r.begin(), r.end(), [&](Vertex s) { return g.adjacent(l, s); });
        if (!ok) report.failures.push_back({t, l, r});
    }
    report.member = report.failures.empty();
    return report;
}

MembershipTest::MembershipTest(const Permutation& w) : canopy_(w) {}

bool MembershipTest::operator()(const OrderedGraph& g) const noexcept {
    for (Vertex t = 1; t <= canopy_.size(); ++t) {
        const Vertex l = canopy_.lambda(t);
        bool ok = false;
        for (const Vertex s : canopy_.rho(t)) {
            if (s != l && g.has_edge_unchecked(l, s)) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

std::vector<Derangement> derangement_set(const OrderedGraph& g, int limit) {
    const int n = g.vertex_count();
    if (n > limit)
        throw std::length_error("derangement set enumeration limited to n <= " + std::to_string(limit) +
                                " (got n = " + std::to_string(n) + ")");
    std::vector<Derangement> out;
    for_each_derangement(n, [&](const Derangement& w) {
        if (check_membership(g, w).member) out.push_back(w);
    });
    return out;
}

EdgeSet edge_requirement(const Derangement& w, Vertex t) {
    const int n = w.size();
    if (t < 1 || t > n) throw std::out_of_range("vertex " + std::to_string(t) + " outside {1.." + std::to_string(n) + "}");
    const Canopy c(w);
    EdgeSet e(n);
    for (const Vertex s : c.rho(t))
        if (s != c.lambda(t)) e.insert(c.lambda(t), s);
    return e;
}

bool NonMinSet::contains(Vertex v) const {
    return std::binary_search(elements.begin(), elements.end(), v);
}

NonMinSet non_min_elements(const Derangement& w) {
    NonMinSet u;
    const auto& p = w.permutation();
    for (Vertex t = 1; t <= p.size(); ++t)
        if (p.cycle_min(t) != t) u.elements.push_back(t);
    return u;
}

bool membership_via_requirements(const OrderedGraph& g, const Derangement& w) {
    check_sizes(g, w);
    const EdgeSet edges = g.edge_set();
    for (Vertex t = 1; t <= w.size(); ++t)
        if (!edges.intersects(edge_requirement(w, t))) return false;
    return true;
}

}  // namespace dfreq
