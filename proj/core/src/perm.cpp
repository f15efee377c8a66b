#include "dfreq/perm.hpp"

#include <algorithm>
#include <cctype>

namespace dfreq {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(what), line_(line), column_(column) {}

FixedPointError::FixedPointError(Vertex v)
    : std::invalid_argument("permutation fixes vertex " + std::to_string(v) + "; not a derangement"),
      vertex_(v) {}

Permutation::Permutation(std::vector<Vertex> images)
    : images_(std::move(images)) {
    const auto n = images_.size();
    preimages_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = images_[i];
        if (v < 1 || static_cast<std::size_t>(v) > n || preimages_[static_cast<std::size_t>(v - 1)] != 0)
            throw std::invalid_argument("not a bijection on {1.." + std::to_string(n) + "}");
        preimages_[static_cast<std::size_t>(v - 1)] = static_cast<Vertex>(i + 1);
    }

    // Scanning vertices in increasing order yields standard form directly:
    // the first unvisited vertex is its cycle's minimum.
    cycle_min_.assign(n, 0);
    for (Vertex start = 1; start <= static_cast<Vertex>(n); ++start) {
        if (cycle_min_[static_cast<std::size_t>(start - 1)] != 0) continue;
        Cycle c;
        Vertex t = start;
        do {
            c.push_back(t);
            cycle_min_[static_cast<std::size_t>(t - 1)] = start;
            t = (*this)(t);
        } while (t != start);
        cycles_.push_back(std::move(c));
    }
}

Permutation Permutation::from_images(std::vector<Vertex> images) {
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, std::span<const Cycle> cycles) {
    if (n < 0) throw std::invalid_argument("negative ground set size");
    std::vector<Vertex> images(static_cast<std::size_t>(n), 0);
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            const Vertex from = c[i];
            if (from < 1 || from > n)
                throw std::invalid_argument("element " + std::to_string(from) + " outside {1.." + std::to_string(n) + "}");
            if (images[static_cast<std::size_t>(from - 1)] != 0)
                throw std::invalid_argument("element " + std::to_string(from) + " repeated");
            images[static_cast<std::size_t>(from - 1)] = c[(i + 1) % c.size()];
        }
    }
    for (Vertex t = 1; t <= n; ++t)
        if (images[static_cast<std::size_t>(t - 1)] == 0) images[static_cast<std::size_t>(t - 1)] = t;
    return Permutation(std::move(images));
}

Permutation Permutation::identity(int n) {
    std::vector<Vertex> images(static_cast<std::size_t>(std::max(n, 0)));
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<Vertex>(i + 1);
    return Permutation(std::move(images));
}

Vertex Permutation::first_fixed_point() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] == static_cast<Vertex>(i + 1)) return images_[i];
    return 0;
}

namespace {

struct Token {
    std::string digits;
    int column;
};

[[noreturn]] void fail(const std::string& msg, std::size_t pos) {
    throw ParseError(msg, 0, static_cast<int>(pos + 1));
}

}  // namespace

Permutation parse_cycle_form(std::string_view text, int n) {
    if (n < 1) throw std::invalid_argument("ground set size must be positive");

    std::vector<Cycle> cycles;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::size_t pos = 0;

    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };

    auto add = [&](Cycle& c, long long value, std::size_t at) {
        if (value < 1 || value > n)
            fail("element " + std::to_string(value) + " outside {1.." + std::to_string(n) + "}", at);
        if (seen[static_cast<std::size_t>(value)]) fail("element " + std::to_string(value) + " repeated", at);
        seen[static_cast<std::size_t>(value)] = true;
        c.push_back(static_cast<Vertex>(value));
    };

    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') fail("expected '('", pos);
        const std::size_t open = pos++;

        std::vector<Token> tokens;
        bool separated = false;
        bool expect_elem = true;  // after '(' or ','
        for (;;) {
            if (pos >= text.size()) fail("unbalanced '('", open);
            const char ch = text[pos];
            if (ch == ')') {
                if (tokens.empty()) fail("empty cycle", pos);
                if (expect_elem && separated) fail("expected element before ')'", pos);
                ++pos;
                break;
            }
            if (std::isspace(static_cast<unsigned char>(ch))) {
                ++pos;
                continue;
            }
            if (ch == ',') {
                if (expect_elem) fail("expected element before ','", pos);
                separated = true;
                expect_elem = true;
                ++pos;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(ch))) fail(std::string("unexpected character '") + ch + "'", pos);
            if (!tokens.empty() && !expect_elem) separated = true;  // whitespace-separated run
            Token tok{{}, static_cast<int>(pos)};
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) tok.digits += text[pos++];
            tokens.push_back(std::move(tok));
            expect_elem = false;
        }

        Cycle c;
        if (!separated && tokens.size() == 1 && tokens.front().digits.size() > 1) {
            const auto& tok = tokens.front();
            if (n > 9)
                fail("compact cycle notation requires n <= 9; separate elements with spaces or commas",
                     static_cast<std::size_t>(tok.column));
            for (std::size_t i = 0; i < tok.digits.size(); ++i)
                add(c, tok.digits[i] - '0', static_cast<std::size_t>(tok.column) + i);
        } else {
            for (const auto& tok : tokens) {
                // Anything longer than 9 digits is out of range for any supported n.
                const long long value = tok.digits.size() > 9 ? -1 : std::stoll(tok.digits);
                add(c, value, static_cast<std::size_t>(tok.column));
            }
        }
        cycles.push_back(std::move(c));
        skip_ws();
    }
    return Permutation::from_cycles(n, cycles);
}

std::string standard_cycle_form(const Permutation& w) {
    const bool compact = w.size() <= 9;
    std::string out;
    for (const auto& c : w.cycles()) {
        if (c.size() < 2) continue;
        out += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i > 0 && !compact) out += ' ';
            out += std::to_string(c[i]);
        }
        out += ')';
    }
    return out;
}

Derangement as_derangement(Permutation w) {
    if (const Vertex t = w.first_fixed_point(); t != 0) throw FixedPointError(t);
    return Derangement(std::move(w));
}

Derangement parse_derangement(std::string_view text, int n) {
    return as_derangement(parse_cycle_form(text, n));
}

Canopy::Canopy(const Permutation& w) {
    const int n = w.size();
    lambda_.resize(static_cast<std::size_t>(n));
    rho_.resize(static_cast<std::size_t>(n));
    for (Vertex t = 1; t <= n; ++t) {
        auto& r = rho_[static_cast<std::size_t>(t - 1)];
        Vertex s = t;
        do {
            r.push_back(s);
            s = w(s);
        } while (s > t);

        Vertex back = w.inverse(t);
        while (back > t) back = w.inverse(back);
        lambda_[static_cast<std::size_t>(t - 1)] = back;
    }
}

namespace {

// Depth-first over positions, trying values in increasing order, which is
// exactly lexicographic order of one-line notation with fixed points pruned.
void derange_rec(std::vector<Vertex>& images, std::vector<bool>& used, int pos,
                 const std::function<void(const Derangement&)>& fn) {
    const int n = static_cast<int>(images.size());
    if (pos == n) {
        fn(as_derangement(Permutation::from_images(images)));
        return;
    }
    for (Vertex v = 1; v <= n; ++v) {
        if (v == pos + 1 || used[static_cast<std::size_t>(v)]) continue;
        used[static_cast<std::size_t>(v)] = true;
        images[static_cast<std::size_t>(pos)] = v;
        derange_rec(images, used, pos + 1, fn);
        used[static_cast<std::size_t>(v)] = false;
    }
}

}  // namespace

void for_each_derangement(int n, const std::function<void(const Derangement&)>& fn) {
    if (n < 2) return;
    std::vector<Vertex> images(static_cast<std::size_t>(n), 0);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    derange_rec(images, used, 0, fn);
}

std::vector<Derangement> enumerate_derangements(int n) {
    std::vector<Derangement> out;
    for_each_derangement(n, [&](const Derangement& d) { out.push_back(d); });
    return out;
}

std::vector<Derangement> enumerate_derangements_with_k_cycles(int n, int k) {
    if (k < 1 || k > n / 2)
        throw std::invalid_argument("cycle count " + std::to_string(k) + " outside [1, " + std::to_string(n / 2) + "]");
    std::vector<Derangement> out;
    for_each_derangement(n, [&](const Derangement& d) {
        if (d.cycle_count() == k) out.push_back(d);
    });
    return out;
}

}  // namespace dfreq
