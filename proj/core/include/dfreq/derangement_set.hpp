#pragma once

// The derangement set D(G) of an ordered graph: w belongs to D(G) iff for
// every vertex t, lambda_w(t) is adjacent in G to some vertex of rho_w(t).

#include <vector>

#include "dfreq/graph.hpp"
#include "dfreq/perm.hpp"

namespace dfreq {

/// One vertex at which the criterion fails.
struct CriterionFailure {
    Vertex t;
    Vertex lambda;
    std::vector<Vertex> rho;

    friend bool operator==(const CriterionFailure&, const CriterionFailure&) = default;
};

struct MembershipReport {
    bool member = false;
    /// Every failing vertex in increasing order of t; empty iff member.
    std::vector<CriterionFailure> failures;
};

/// Evaluates the criterion on any permutation of {1..n}. A fixed point t
/// always fails (lambda = t, rho = {t}, and there are no loops), so only
/// derangements can be members. Throws std::invalid_argument on a size
/// mismatch between w and G.
MembershipReport check_membership(const OrderedGraph& g, const Permutation& w);

/// check_membership with the canopy computed once, for evaluating one
/// permutation against many graphs. Same adjacency-by-adjacency test, no
/// failure report.
class MembershipTest {
public:
    explicit MembershipTest(const Permutation& w);

    int size() const noexcept { return canopy_.size(); }
    bool operator()(const OrderedGraph& g) const noexcept;

private:
    Canopy canopy_;
};

inline constexpr int kDefaultDerangementSetLimit = 8;

/// All derangements in D(G), lexicographic by one-line notation. Throws
/// std::length_error when n exceeds `limit`.
std::vector<Derangement> derangement_set(const OrderedGraph& g, int limit = kDefaultDerangementSetLimit);

/// E_{w,t} = {{lambda_w(t), s} : s in rho_w(t)}, without the loop {t,t} that
/// arises when t is minimal in its cycle. Throws std::out_of_range for t
/// outside {1..n}; needs n <= kMaxGraphVertices.
EdgeSet edge_requirement(const Derangement& w, Vertex t);

/// U(w): vertices that are not the minimum of their cycle, ascending.
struct NonMinSet {
    std::vector<Vertex> elements;

    int size() const noexcept { return static_cast<int>(elements.size()); }
    bool contains(Vertex v) const;
};

NonMinSet non_min_elements(const Derangement& w);

/// True iff G meets every E_{w,t}. Must agree with check_membership.
bool membership_via_requirements(const OrderedGraph& g, const Derangement& w);

}  // namespace dfreq
