#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace schur {

/// A root eps_a - eps_b of gl_n, stored by its written indices (1-based,
/// a != b).  Positive roots have a < b.
struct Root {
    int a = 0;
    int b = 0;

    Root() = default;
    Root(int a_, int b_) : a(a_), b(b_) {
        if (a == b) throw std::invalid_argument("Root: indices must differ");
    }

    bool is_positive() const { return a < b; }
    Root negated() const { return Root(b, a); }
    /// The positive root in {alpha, -alpha}.
    Root positive_part() const { return a < b ? *this : negated(); }

    bool operator==(const Root& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Root& o) const { return !(*this == o); }
    bool operator<(const Root& o) const {
        return a != o.a ? a < o.a : b < o.b;
    }

    std::string to_string() const {
        return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
};

/// "Box" comparison on positive roots: eps_i - eps_j dominates eps_r - eps_s
/// when s > j, or s = j and r > i.
inline bool box_greater(const Root& alpha, const Root& beta) {
    if (beta.b != alpha.b) return beta.b > alpha.b;
    return beta.a > alpha.a;
}

inline int box_compare(const Root& alpha, const Root& beta) {
    if (alpha == beta) return 0;
    return box_greater(alpha, beta) ? 1 : -1;
}

/// All positive roots of gl_n listed in descending box order, i.e. sorted by
/// (b, a) ascending: (1,2), (1,3), (2,3), ... for n = 3.
inline std::vector<Root> positive_roots(int n) {
    std::vector<Root> out;
    for (int b = 2; b <= n; ++b)
        for (int a = 1; a < b; ++a) out.emplace_back(a, b);
    return out;
}

/// An ordering of the positive roots, used to fix the shape of sorted
/// monomials.  position() is the sort key.
class RootOrder {
public:
    RootOrder() = default;
    RootOrder(int n, std::vector<Root> sequence) : n_(n), seq_(std::move(sequence)) {
        auto expect = positive_roots(n);
        auto sorted = seq_;
        std::sort(sorted.begin(), sorted.end());
        std::sort(expect.begin(), expect.end());
        if (sorted != expect)
            throw std::invalid_argument("RootOrder: sequence is not a permutation of the positive roots");
    }

    static RootOrder box(int n) { return RootOrder(n, positive_roots(n)); }
    static RootOrder reverse_box(int n) {
        auto seq = positive_roots(n);
        std::reverse(seq.begin(), seq.end());
        return RootOrder(n, seq);
    }

    int n() const { return n_; }
    const std::vector<Root>& sequence() const { return seq_; }
    std::size_t size() const { return seq_.size(); }

    std::size_t position(const Root& alpha) const {
        for (std::size_t i = 0; i < seq_.size(); ++i)
            if (seq_[i] == alpha) return i;
        throw std::invalid_argument("RootOrder: root not in sequence");
    }

    bool operator==(const RootOrder& o) const { return n_ == o.n_ && seq_ == o.seq_; }

private:
    int n_ = 0;
    std::vector<Root> seq_;
};

/// Weights and exponent vectors are both plain integer vectors; compositions
/// of d into n parts are the nonnegative ones with entry sum d.
using Composition = std::vector<int>;
using ContentVector = std::vector<int>;

inline int composition_sum(const Composition& c) {
    int s = 0;
    for (int x : c) s += x;
    return s;
}

inline bool componentwise_leq(const ContentVector& a, const ContentVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("componentwise_leq: size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// All compositions of d into n nonnegative parts, in descending
/// lexicographic order: (d,0,...), ..., (0,...,0,d).
inline std::vector<Composition> enumerate_compositions(int n, int d) {
    std::vector<Composition> out;
    Composition cur(n, 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == n - 1) {
            cur[pos] = rest;
            out.push_back(cur);
            return;
        }
        for (int x = rest; x >= 0; --x) {
            cur[pos] = x;
            self(self, pos + 1, rest - x);
        }
    };
    if (n > 0) rec(rec, 0, d);
    return out;
}

/// lambda + m * (eps_a - eps_b); nullopt when the shift leaves the set of
/// compositions (a negative entry appears).
inline std::optional<Composition> shift_composition(const Composition& lambda,
                                                    const Root& alpha, int m = 1) {
    Composition out = lambda;
    out[static_cast<std::size_t>(alpha.a) - 1] += m;
    out[static_cast<std::size_t>(alpha.b) - 1] -= m;
    for (int x : out)
        if (x < 0) return std::nullopt;
    return out;
}

inline ContentVector add_content(ContentVector a, const ContentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline std::string composition_to_string(const Composition& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

/// Pairing (eps_i, alpha_j) for the simple root alpha_j = eps_j - eps_{j+1}.
inline int eps_alpha_pairing(int i, int j) {
    return (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
}

}  // namespace schur
