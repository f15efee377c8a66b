#pragma once

// Permutations of the ordered ground set {1..n} in cycle form, plus the
// canopy maps (backward "lambda" and forward "rho" walks) used by the
// derangement-set criterion.

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dfreq {

/// Vertices and permutation entries are 1-based.
using Vertex = int;
using Cycle = std::vector<Vertex>;

/// Raised by the text parsers. `line` and `column` are 1-based; `line` is 0
/// for single-line inputs such as cycle notation.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column);

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

class FixedPointError : public std::invalid_argument {
public:
    explicit FixedPointError(Vertex v);
    Vertex vertex() const noexcept { return vertex_; }

private:
    Vertex vertex_;
};

/// A bijection on {1..n} together with its cycle decomposition.
///
/// Cycles are always kept in standard form: each cycle is rotated so its
/// minimum comes first, and cycles are sorted by ascending minimum. Fixed
/// points appear as 1-cycles in `cycles()` but are omitted from the
/// rendered cycle notation.
class Permutation {
public:
    /// Builds from one-line notation: `images[i]` is the image of vertex i+1.
    /// Throws std::invalid_argument if `images` is not a bijection on {1..n}.
    static Permutation from_images(std::vector<Vertex> images);

    /// Builds from (possibly partial) cycles; omitted vertices are fixed.
    static Permutation from_cycles(int n, std::span<const Cycle> cycles);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    Vertex operator()(Vertex t) const { return images_[static_cast<std::size_t>(t - 1)]; }
    Vertex inverse(Vertex t) const { return preimages_[static_cast<std::size_t>(t - 1)]; }

    const std::vector<Vertex>& images() const noexcept { return images_; }
    const std::vector<Cycle>& cycles() const noexcept { return cycles_; }

    /// Number of cycles including 1-cycles.
    int cycle_count() const noexcept { return static_cast<int>(cycles_.size()); }

    /// Smallest fixed point, or 0 if there is none.
    Vertex first_fixed_point() const noexcept;

    /// Minimum of the cycle containing t.
    Vertex cycle_min(Vertex t) const { return cycle_min_[static_cast<std::size_t>(t - 1)]; }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }

private:
    explicit Permutation(std::vector<Vertex> images);

    std::vector<Vertex> images_;
    std::vector<Vertex> preimages_;
    std::vector<Cycle> cycles_;
    std::vector<Vertex> cycle_min_;
};

/// A permutation with no fixed points. Only obtainable via as_derangement()
/// or the enumerators, so the invariant holds for every instance.
class Derangement {
public:
    const Permutation& permutation() const noexcept { return perm_; }
    operator const Permutation&() const noexcept { return perm_; }

    int size() const noexcept { return perm_.size(); }
    Vertex operator()(Vertex t) const { return perm_(t); }
    const std::vector<Cycle>& cycles() const noexcept { return perm_.cycles(); }
    int cycle_count() const noexcept { return perm_.cycle_count(); }

    friend bool operator==(const Derangement& a, const Derangement& b) { return a.perm_ == b.perm_; }

private:
    explicit Derangement(Permutation p) : perm_(std::move(p)) {}
    friend Derangement as_derangement(Permutation w);

    Permutation perm_;
};

/// Parses cycle notation such as "(13472)(56)", "(1 3 4)(2,5)". Elements
/// of {1..n} not mentioned are fixed points. The separator-free form
/// "(13472)" is read digit by digit and is only accepted for n <= 9.
Permutation parse_cycle_form(std::string_view text, int n);

/// Renders cycles min-first, sorted by minimum, fixed points omitted.
/// Separator-free for n <= 9, space-separated otherwise.
std::string standard_cycle_form(const Permutation& w);

/// Throws FixedPointError naming the smallest fixed vertex.
Derangement as_derangement(Permutation w);

/// Parses and validates in one step.
Derangement parse_derangement(std::string_view text, int n);

/// Per-vertex canopy data of a permutation.
///
/// rho(t) = {t, w(t), ..., w^{k-1}(t)} with k minimal such that w^k(t) <= t,
/// listed in walk order. lambda(t) = w^{-l}(t) with l minimal such that
/// w^{-l}(t) <= t.
class Canopy {
public:
    explicit Canopy(const Permutation& w);

    int size() const noexcept { return static_cast<int>(lambda_.size()); }
    Vertex lambda(Vertex t) const { return lambda_[static_cast<std::size_t>(t - 1)]; }
    const std::vector<Vertex>& rho(Vertex t) const { return rho_[static_cast<std::size_t>(t - 1)]; }
    int rho_size(Vertex t) const { return static_cast<int>(rho(t).size()); }

private:
    std::vector<Vertex> lambda_;
    std::vector<std::vector<Vertex>> rho_;
};

inline Canopy canopy(const Permutation& w) { return Canopy(w); }

/// Calls `fn` for every derangement of {1..n} in lexicographic order of
/// one-line notation. Empty for n < 2.
void for_each_derangement(int n, const std::function<void(const Derangement&)>& fn);

std::vector<Derangement> enumerate_derangements(int n);

/// Derangements of {1..n} with exactly k cycles, same order as above.
/// Throws std::invalid_argument unless 1 <= k <= n/2.
std::vector<Derangement> enumerate_derangements_with_k_cycles(int n, int k);

}  // namespace dfreq
