#include "dfreq/frequency.hpp"

#include <algorithm>
#include <stdexcept>

#include "dfreq/derangement_set.hpp"
#include "dfreq/graph.hpp"

namespace dfreq {

ExactCount pow2(int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    ExactCount r = 1;
    r <<= e;
    return r;
}

DyadicRate::DyadicRate(ExactCount numerator, int exponent) : num_(std::move(numerator)), exp_(exponent) {
    if (num_ < 0 || exp_ < 0) throw std::invalid_argument("dyadic rate must be non-negative with exponent >= 0");
    normalize();
}

void DyadicRate::normalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    while (exp_ > 0 && !boost::multiprecision::bit_test(num_, 0)) {
        num_ >>= 1;
        --exp_;
    }
}

DyadicRate DyadicRate::from_decimal(std::string_view text) {
    const auto dot = text.find('.');
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw std::invalid_argument("empty decimal");
    auto all_digits = [](std::string_view s) {
        return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!all_digits(int_part) || !all_digits(frac_part)) throw std::invalid_argument("malformed decimal");

    // value = digits / 10^d = digits / (5^d * 2^d); dyadic iff 5^d divides digits.
    std::string digits(int_part);
    digits += frac_part;
    ExactCount value = 0;
    for (const char c : digits) value = value * 10 + (c - '0');
    const int d = static_cast<int>(frac_part.size());
    ExactCount five = 1;
    for (int i = 0; i < d; ++i) five *= 5;
    if (value % five != 0) throw std::invalid_argument("decimal " + std::string(text) + " is not dyadic");
    return DyadicRate(value / five, d);
}

std::string DyadicRate::fraction() const { return num_.str() + "/2^" + std::to_string(exp_); }

std::string DyadicRate::decimal() const {
    if (exp_ == 0) return num_.str();
    // num / 2^e = num * 5^e / 10^e
    ExactCount scaled = num_;
    for (int i = 0; i < exp_; ++i) scaled *= 5;
    std::string s = scaled.str();
    if (static_cast<int>(s.size()) <= exp_) s.insert(0, static_cast<std::size_t>(exp_) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(exp_), 1, '.');
    return s;
}

double DyadicRate::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(pow2(exp_));
}

DyadicRate& DyadicRate::operator*=(const DyadicRate& other) {
    num_ *= other.num_;
    exp_ += other.exp_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const DyadicRate& a, const DyadicRate& b) {
    const int e = std::max(a.exp_, b.exp_);
    const ExactCount lhs = a.num_ << (e - a.exp_);
    const ExactCount rhs = b.num_ << (e - b.exp_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

namespace {

std::vector<int> non_min_rho_sizes(const Derangement& w) {
    const Canopy c(w.permutation());
    std::vector<int> sizes;
    for (const Vertex t : non_min_elements(w).elements) sizes.push_back(c.rho_size(t));
    return sizes;
}

}  // namespace

ExactCount frequency(const Derangement& w) {
    const int n = w.size();
    int constrained = 0;
    ExactCount f = 1;
    for (const int m : non_min_rho_sizes(w)) {
        constrained += m;
        f *= pow2(m) - 1;
    }
    return f * pow2(pair_count(n) - constrained);
}

DyadicRate rate(const Derangement& w) {
    DyadicRate r = DyadicRate::one();
    for (const int m : non_min_rho_sizes(w)) r *= DyadicRate(pow2(m) - 1, m);
    return r;
}

ThetaProfile theta(const Derangement& w) {
    ThetaProfile p{w.cycle_count(), non_min_rho_sizes(w)};
    std::sort(p.sizes.begin(), p.sizes.end());
    return p;
}

std::string_view to_string(ThetaOrder order) {
    switch (order) {
        case ThetaOrder::Equal: return "Equal";
        case ThetaOrder::LessOrEqual: return "LessOrEqual";
        case ThetaOrder::GreaterOrEqual: return "GreaterOrEqual";
        case ThetaOrder::Incomparable: return "Incomparable";
    }
    return "?";
}

ThetaOrder compare_theta(const ThetaProfile& a, const ThetaProfile& b) {
    if (a.k != b.k)
        throw std::invalid_argument("theta profiles have different cycle counts (" + std::to_string(a.k) + " vs " +
                                    std::to_string(b.k) + "); they are only compared within one D^k(V)");
    if (a.sizes.size() != b.sizes.size()) throw std::invalid_argument("theta profiles have different lengths");
    bool le = true;
    bool ge = true;
    for (std::size_t i = 0; i < a.sizes.size(); ++i) {
        le = le && a.sizes[i] <= b.sizes[i];
        ge = ge && a.sizes[i] >= b.sizes[i];
    }
    if (le && ge) return ThetaOrder::Equal;
    if (le) return ThetaOrder::LessOrEqual;
    if (ge) return ThetaOrder::GreaterOrEqual;
    return ThetaOrder::Incomparable;
}

Derangement min_rate_derangement(int n) {
    if (n < 2) throw std::invalid_argument("extremal derangements need n >= 2");
    Cycle c{1};
    for (Vertex v = n; v >= 2; --v) c.push_back(v);
    const std::vector<Cycle> cycles{c};
    return as_derangement(Permutation::from_cycles(n, cycles));
}

Derangement max_rate_derangement(int n) {
    if (n < 2) throw std::invalid_argument("extremal derangements need n >= 2");
    Cycle c;
    for (Vertex v = 1; v <= n; ++v) c.push_back(v);
    const std::vector<Cycle> cycles{c};
    return as_derangement(Permutation::from_cycles(n, cycles));
}

DyadicRate decreasing_arrangement_rate(int num_non_min) {
    if (num_non_min < 0) throw std::invalid_argument("negative count");
    return DyadicRate(1, num_non_min);
}

DyadicRate increasing_arrangement_rate(std::span<const int> cycle_lengths) {
    DyadicRate r = DyadicRate::one();
    for (const int c : cycle_lengths) {
        if (c < 2) throw std::invalid_argument("cycle length " + std::to_string(c) + " < 2");
        for (int k = 1; k < c; ++k) r *= DyadicRate(pow2(k) - 1, k);
    }
    return r;
}

}  // namespace dfreq
