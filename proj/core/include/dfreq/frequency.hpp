#pragma once

// Exact frequency f(w) and rate r(w) of a derangement w of {1..n}.
//
//   f(w) = 2^{C(n,2) - sum_{t in U(w)} |rho(t)|} * prod_{t in U(w)} (2^{|rho(t)|} - 1)
//   r(w) = f(w) / 2^{C(n,2)} = prod_{t in U(w)} (1 - 2^{-|rho(t)|})
//
// All arithmetic is exact. Every rate is dyadic, so DyadicRate stores an
// odd numerator over a power of two and prints a finite decimal.

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dfreq/perm.hpp"

namespace dfreq {

using ExactCount = boost::multiprecision::cpp_int;

/// 2^e as an exact integer.
ExactCount pow2(int e);

/// numerator / 2^exponent, normalized so the numerator is odd (or the value
/// is 0 with exponent 0).
class DyadicRate {
public:
    DyadicRate() = default;
    DyadicRate(ExactCount numerator, int exponent);

    static DyadicRate one() { return DyadicRate(1, 0); }

    /// Parses an exact decimal such as "0.08203125" or "1". Throws
    /// std::invalid_argument if the string is malformed or not dyadic.
    static DyadicRate from_decimal(std::string_view text);

    const ExactCount& numerator() const noexcept { return num_; }
    int exponent() const noexcept { return exp_; }

    /// "21/2^8"
    std::string fraction() const;
    /// "0.08203125"; exact, no rounding.
    std::string decimal() const;
    double to_double() const;

    DyadicRate& operator*=(const DyadicRate& other);
    friend DyadicRate operator*(DyadicRate a, const DyadicRate& b) { return a *= b; }

    friend bool operator==(const DyadicRate&, const DyadicRate&) = default;
    friend std::strong_ordering operator<=>(const DyadicRate& a, const DyadicRate& b);

private:
    void normalize();

    ExactCount num_ = 0;
    int exp_ = 0;
};

ExactCount frequency(const Derangement& w);
DyadicRate rate(const Derangement& w);

/// Non-decreasing canopy sizes |rho(t)| over t in U(w); length n - k.
struct ThetaProfile {
    int k = 0;
    std::vector<int> sizes;

    friend bool operator==(const ThetaProfile&, const ThetaProfile&) = default;
};

ThetaProfile theta(const Derangement& w);

enum class ThetaOrder { Equal, LessOrEqual, GreaterOrEqual, Incomparable };

std::string_view to_string(ThetaOrder order);

/// Componentwise (cartesian) comparison. Throws std::invalid_argument if the
/// profiles come from different cycle counts or have different lengths:
/// the monotonicity statement only relates derangements within one D^k(V).
ThetaOrder compare_theta(const ThetaProfile& a, const ThetaProfile& b);

/// (1 n n-1 ... 3 2): every cycle decreasing after its minimum, one cycle.
/// Throws std::invalid_argument for n < 2.
Derangement min_rate_derangement(int n);

/// (1 2 3 ... n).
Derangement max_rate_derangement(int n);

/// Rate of a derangement whose non-minimal vertices all have |rho(t)| = 1:
/// 1 / 2^{num_non_min}.
DyadicRate decreasing_arrangement_rate(int num_non_min);

/// Rate of a derangement whose cycles (lengths c_i) are all increasing:
/// prod_i prod_{k=1}^{c_i - 1} (1 - 2^{-k}). Throws if some c_i < 2.
DyadicRate increasing_arrangement_rate(std::span<const int> cycle_lengths);

}  // namespace dfreq
