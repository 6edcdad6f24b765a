#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "schur/kostant.hpp"
#include "schur/laurent.hpp"
#include "schur/qint.hpp"
#include "schur/rootdata.hpp"
#include "schur/scalar_ring.hpp"

namespace schur {

struct NoRule : std::logic_error {
    explicit NoRule(const std::string& what) : std::logic_error(what) {}
};

struct NonTermination : std::runtime_error {
    explicit NonTermination(const std::string& what) : std::runtime_error(what) {}
};

/// One summand of a rewrite: a scalar times a factor word.
template <class Ring>
struct RuleTerm {
    typename Ring::Scalar coeff;
    std::vector<KostantFactor> word;
};

namespace detail {

inline LaurentPolynomial laurent_pow(const LaurentPolynomial& base, int e) {
    LaurentPolynomial r = LaurentPolynomial::one();
    for (int s = 0; s < e; ++s) r = r * base;
    return r;
}

inline void push_x(std::vector<KostantFactor>& w, int a, int b, int m) {
    if (m > 0) w.push_back(KostantFactor::divided_power(Root(a, b), m));
}

inline void push_k(std::vector<KostantFactor>& w, int i, int e) {
    if (e != 0) w.push_back(KostantFactor::k_power(i, e));
}

inline void push_kbin(std::vector<KostantFactor>& w, const Root& r, long c, int t) {
    if (t > 0) w.push_back(KostantFactor::root_k_binomial(r, c, t));
}

inline KostantFactor omega_factor(const KostantFactor& f) {
    switch (f.kind) {
        case FactorKind::DividedRootPower:
            return KostantFactor::divided_power(f.root.negated(), f.m);
        case FactorKind::KPower:
            return KostantFactor::k_power(f.index, -f.exp);
        case FactorKind::RootKBinomial:
        case FactorKind::CartanBinomial:
        case FactorKind::Idempotent:
            return f;  // fixed by the bar-reversing symmetry
    }
    return f;
}

/// The bar-reversing algebra antiautomorphism applied to one term: flips
/// every written index pair, inverts K factors, reverses the word and bars
/// the coefficient.
template <class Ring>
RuleTerm<Ring> omega_term(const RuleTerm<Ring>& t) {
    RuleTerm<Ring> out;
    out.coeff = Ring::bar(t.coeff);
    out.word.reserve(t.word.size());
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) out.word.push_back(omega_factor(*it));
    return out;
}

/// Rearranges a rewrite of y*x whose leading summand is the plain swap
/// [x, y] with unit coefficient c0 into a rewrite of x*y.
template <class Ring>
std::vector<RuleTerm<Ring>> solve_for_swap(const KostantFactor& x, const KostantFactor& y,
                                           std::vector<RuleTerm<Ring>> reversed) {
    std::vector<KostantFactor> main_word{x, y};
    std::size_t main_idx = reversed.size();
    for (std::size_t i = 0; i < reversed.size(); ++i)
        if (reversed[i].word == main_word) {
            main_idx = i;
            break;
        }
    if (main_idx == reversed.size()) throw NoRule("solve_for_swap: leading summand not found");
    typename Ring::Scalar c0 = reversed[main_idx].coeff;
    std::vector<RuleTerm<Ring>> out;
    out.push_back(RuleTerm<Ring>{Ring::one() / c0, {y, x}});
    for (std::size_t i = 0; i < reversed.size(); ++i) {
        if (i == main_idx) continue;
        out.push_back(RuleTerm<Ring>{(Ring::zero() - reversed[i].coeff) / c0, std::move(reversed[i].word)});
    }
    return out;
}

// --- quantum rules ---------------------------------------------------------

inline RationalFunction q_unit(int e) { return RationalFunction::v_power(e); }

/// Adjacent raising product X_ij X_jl expanded toward the swapped order.
inline std::vector<RuleTerm<QuantumRing>> q_ee_adjacent(int i, int j, int l, int M, int N) {
    std::vector<RuleTerm<QuantumRing>> out;
    for (int t = 0; t <= std::min(M, N); ++t) {
        RuleTerm<QuantumRing> term;
        term.coeff = q_unit((M - t) * (N - t) + t);
        push_x(term.word, j, l, N - t);
        push_x(term.word, i, l, t);
        push_x(term.word, i, j, M - t);
        out.push_back(std::move(term));
    }
    return out;
}

/// Properly overlapping raising product X_ij X_kl with i<k<j<l.  The
/// defect form lists the same identity with the short factors pushed to
/// the right of the long ones.
inline std::vector<RuleTerm<QuantumRing>> q_ee_overlap(int i, int j, int k, int l, int M, int N,
                                                       bool defect_form) {
    std::vector<RuleTerm<QuantumRing>> out;
    LaurentPolynomial vinv_minus_v = LaurentPolynomial(BigInt(1), -1) - LaurentPolynomial(BigInt(1), 1);
    for (int t = 0; t <= std::min(M, N); ++t) {
        RuleTerm<QuantumRing> term;
        LaurentPolynomial c = laurent_pow(vinv_minus_v, t) * quantum_factorial(t);
        term.coeff = RationalFunction(c.shifted(-t * (t - 1) / 2));
        if (defect_form) {
            term.coeff = term.coeff * q_unit(-t * (M - t) - t * (N - t));
            push_x(term.word, k, l, N - t);
            push_x(term.word, i, l, t);
            push_x(term.word, k, j, t);
            push_x(term.word, i, j, M - t);
        } else {
            push_x(term.word, k, j, t);
            push_x(term.word, k, l, N - t);
            push_x(term.word, i, j, M - t);
            push_x(term.word, i, l, t);
        }
        out.push_back(std::move(term));
    }
    return out;
}

inline std::vector<RuleTerm<QuantumRing>> quantum_ee(const KostantFactor& x, const KostantFactor& y,
                                                     bool defect_form) {
    const int i = x.root.a, j = x.root.b, k = y.root.a, l = y.root.b;
    const int M = x.m, N = y.m;
    if (j < k || l < i || (k < i && j < l) || (i < k && l < j))
        return {RuleTerm<QuantumRing>{QuantumRing::one(), {y, x}}};
    if (i == k || j == l) {
        int sign = ((i == k && j < l) || (j == l && i < k)) ? -1 : 1;
        return {RuleTerm<QuantumRing>{q_unit(sign * M * N), {y, x}}};
    }
    if (j == k) return q_ee_adjacent(i, j, l, M, N);
    if (l == i) {
        // Solved from the adjacent rule applied to the reversed pair.
        auto rev = q_ee_adjacent(k, l, j, N, M);
        return solve_for_swap<QuantumRing>(x, y, std::move(rev));
    }
    if (i < k && k < j && j < l) return q_ee_overlap(i, j, k, l, M, N, defect_form);
    if (k < i && i < l && l < j) {
        auto rev = q_ee_overlap(k, l, i, j, N, M, false);
        return solve_for_swap<QuantumRing>(x, y, std::move(rev));
    }
    throw NoRule("quantum_ee: unhandled configuration");
}

/// Mixed product E F: the raising factor X_ij against the lowering factor
/// written X_lk (pair k < l).  The five direct configurations; everything
/// else is routed through the bar-reversing symmetry.
inline std::vector<RuleTerm<QuantumRing>> quantum_ef(const KostantFactor& x, const KostantFactor& y,
                                                     bool defect_form) {
    const int i = x.root.a, j = x.root.b;
    const int l = y.root.a, k = y.root.b;
    const int M = x.m, N = y.m;

    if (j <= k || (k < i && j < l))
        return {RuleTerm<QuantumRing>{QuantumRing::one(), {y, x}}};

    if (i == k && j == l) {
        std::vector<RuleTerm<QuantumRing>> out;
        for (int t = 0; t <= std::min(M, N); ++t) {
            RuleTerm<QuantumRing> term;
            term.coeff = QuantumRing::one();
            push_x(term.word, j, i, N - t);
            push_kbin(term.word, Root(i, j), 2 * t - M - N, t);
            push_x(term.word, i, j, M - t);
            out.push_back(std::move(term));
        }
        return out;
    }

    if (i < k && j == l) {
        std::vector<RuleTerm<QuantumRing>> out;
        for (int t = 0; t <= std::min(M, N); ++t) {
            RuleTerm<QuantumRing> term;
            term.coeff = q_unit(t * (N - t - 1));
            push_x(term.word, j, k, N - t);
            push_k(term.word, k, -t);
            push_k(term.word, j, t);
            push_x(term.word, i, j, M - t);
            push_x(term.word, i, k, t);
            out.push_back(std::move(term));
        }
        return out;
    }

    if (i == k && j < l) {
        std::vector<RuleTerm<QuantumRing>> out;
        for (int t = 0; t <= std::min(M, N); ++t) {
            RuleTerm<QuantumRing> term;
            term.coeff = q_unit(t * (M - t));
            if (t % 2 == 1) term.coeff = QuantumRing::zero() - term.coeff;
            push_x(term.word, l, j, t);
            push_x(term.word, l, i, N - t);
            push_k(term.word, i, -t);
            push_k(term.word, j, t);
            push_x(term.word, i, j, M - t);
            out.push_back(std::move(term));
        }
        return out;
    }

    if (i < k && k < j && j < l) {
        std::vector<RuleTerm<QuantumRing>> out;
        LaurentPolynomial v_minus_vinv = LaurentPolynomial(BigInt(1), 1) - LaurentPolynomial(BigInt(1), -1);
        for (int t = 0; t <= std::min(M, N); ++t) {
            RuleTerm<QuantumRing> term;
            LaurentPolynomial c = laurent_pow(v_minus_vinv, t) * quantum_factorial(t);
            term.coeff = RationalFunction(c.shifted(-t * (2 * N + t - 1) / 2));
            if (defect_form) {
                term.coeff = term.coeff * q_unit(t * M);
                push_x(term.word, l, k, N - t);
                push_x(term.word, i, k, t);
                push_x(term.word, l, j, t);
                push_k(term.word, k, -t);
                push_k(term.word, j, t);
                push_x(term.word, i, j, M - t);
            } else {
                push_x(term.word, l, k, N - t);
                push_x(term.word, l, j, t);
                push_k(term.word, k, -t);
                push_k(term.word, j, t);
                push_x(term.word, i, j, M - t);
                push_x(term.word, i, k, t);
            }
            out.push_back(std::move(term));
        }
        return out;
    }

    // Uncovered shape: transport through the bar-reversing symmetry, which
    // exchanges the two pair intervals and keeps the product E-then-F.
    KostantFactor ox = omega_factor(y);  // raising factor, pair (k, l)
    KostantFactor oy = omega_factor(x);  // lowering factor, pair (i, j)
    auto inner = quantum_ef(ox, oy, defect_form);
    std::vector<RuleTerm<QuantumRing>> out;
    out.reserve(inner.size());
    for (const auto& t : inner) out.push_back(omega_term<QuantumRing>(t));
    return out;
}

inline bool is_raising(const KostantFactor& f) { return f.root.is_positive(); }

inline std::vector<RuleTerm<QuantumRing>> quantum_pair(const KostantFactor& x, const KostantFactor& y,
                                                       bool defect_form) {
    if (x.root == y.root) throw NoRule("quantum_pair: equal roots must be merged, not commuted");
    const bool xe = is_raising(x), ye = is_raising(y);
    if (xe && ye) return quantum_ee(x, y, defect_form);
    if (xe && !ye) return quantum_ef(x, y, defect_form);
    if (!xe && ye) {
        auto rev = quantum_ef(y, x, defect_form);
        return solve_for_swap<QuantumRing>(x, y, std::move(rev));
    }
    auto inner = quantum_ee(omega_factor(y), omega_factor(x), defect_form);
    std::vector<RuleTerm<QuantumRing>> out;
    out.reserve(inner.size());
    for (const auto& t : inner) out.push_back(omega_term<QuantumRing>(t));
    return out;
}

// --- classical rules -------------------------------------------------------

/// Sign in the bracket [x_alpha, x_beta] = c x_{alpha+beta} when the sum of
/// the written roots is again a root.
inline int classical_sign(const Root& alpha, const Root& beta) {
    if (alpha.b == beta.a && alpha.a != beta.b) return 1;
    if (alpha.a == beta.b && alpha.b != beta.a) return -1;
    return 0;
}

inline std::vector<RuleTerm<ClassicalRing>> classical_pair(const KostantFactor& x, const KostantFactor& y) {
    if (x.root == y.root) throw NoRule("classical_pair: equal roots must be merged, not commuted");
    const int M = x.m, N = y.m;
    if (x.root == y.root.negated()) {
        std::vector<RuleTerm<ClassicalRing>> out;
        for (int t = 0; t <= std::min(M, N); ++t) {
            RuleTerm<ClassicalRing> term;
            term.coeff = ClassicalRing::one();
            push_x(term.word, y.root.a, y.root.b, N - t);
            push_kbin(term.word, x.root, 2 * t - M - N, t);
            push_x(term.word, x.root.a, x.root.b, M - t);
            out.push_back(std::move(term));
        }
        return out;
    }
    int c = classical_sign(x.root, y.root);
    if (c == 0) return {RuleTerm<ClassicalRing>{ClassicalRing::one(), {y, x}}};
    Root sum = c == 1 ? Root(x.root.a, y.root.b) : Root(y.root.a, x.root.b);
    std::vector<RuleTerm<ClassicalRing>> out;
    out.push_back(RuleTerm<ClassicalRing>{ClassicalRing::one(), {y, x}});
    for (int t = 1; t <= std::min(M, N); ++t) {
        RuleTerm<ClassicalRing> term;
        term.coeff = ClassicalRing::from_long(t % 2 == 0 ? 1 : c);
        push_x(term.word, y.root.a, y.root.b, N - t);
        push_x(term.word, sum.a, sum.b, t);
        push_x(term.word, x.root.a, x.root.b, M - t);
        out.push_back(std::move(term));
    }
    return out;
}

}  // namespace detail

/// Rewrites the adjacent product x*y of two divided root powers as a
/// combination of words whose leading summand has y's root moved left.
/// defect_form selects the variant whose overlap corrections keep the
/// offending short factors to the right.
template <class Ring>
std::vector<RuleTerm<Ring>> commute_pair(const KostantFactor& x, const KostantFactor& y,
                                         bool defect_form = false) {
    if (x.kind != FactorKind::DividedRootPower || y.kind != FactorKind::DividedRootPower)
        throw NoRule("commute_pair: both factors must be divided root powers");
    if (x.m == 0 || y.m == 0)
        return {RuleTerm<Ring>{Ring::one(), {y, x}}};
    if constexpr (Ring::tag == RingTag::Quantum)
        return detail::quantum_pair(x, y, defect_form);
    else
        return detail::classical_pair(x, y);
}

/// Names the configuration a pair falls into, for reporting and coverage
/// checks: sign pattern of the two factors plus the relation between the
/// written index intervals.
inline std::string classify_pair(const KostantFactor& x, const KostantFactor& y) {
    auto pattern = std::string(detail::is_raising(x) ? "E" : "F") + (detail::is_raising(y) ? "E" : "F");
    Root px = x.root.positive_part(), py = y.root.positive_part();
    int i = px.a, j = px.b, k = py.a, l = py.b;
    std::string rel;
    if (i == k && j == l)
        rel = "same-pair";
    else if (j < k)
        rel = "disjoint-left";
    else if (l < i)
        rel = "disjoint-right";
    else if (j == k)
        rel = "adjacent-left";
    else if (l == i)
        rel = "adjacent-right";
    else if (i == k)
        rel = j < l ? "shared-left-short" : "shared-left-long";
    else if (j == l)
        rel = i < k ? "shared-right-long" : "shared-right-short";
    else if (i < k && l < j)
        rel = "nested-inner";
    else if (k < i && j < l)
        rel = "nested-outer";
    else if (i < k && k < j && j < l)
        rel = "overlap-left";
    else if (k < i && i < l && l < j)
        rel = "overlap-right";
    else
        rel = "unknown";
    return pattern + ":" + rel;
}

/// All rule variants applicable to the ordered pair, labeled; the defect
/// variant is listed when it differs from the plain one.
template <class Ring>
std::vector<std::pair<std::string, std::vector<RuleTerm<Ring>>>> derive_rule_variants(
    const KostantFactor& x, const KostantFactor& y) {
    std::vector<std::pair<std::string, std::vector<RuleTerm<Ring>>>> out;
    std::string base = classify_pair(x, y);
    out.emplace_back(base + ":plain", commute_pair<Ring>(x, y, false));
    auto defect = commute_pair<Ring>(x, y, true);
    if (!(defect.size() == out.back().second.size() &&
          std::equal(defect.begin(), defect.end(), out.back().second.begin(),
                     [](const RuleTerm<Ring>& a, const RuleTerm<Ring>& b) {
                         return a.word == b.word && a.coeff == b.coeff;
                     })))
        out.emplace_back(base + ":defect", std::move(defect));
    return out;
}

/// A scalar multiple of a root-power word ending in a weight idempotent.
template <class Ring>
struct StraightenTerm {
    typename Ring::Scalar coeff;
    std::vector<KostantFactor> word;  // divided root powers only
    Composition mu;
};

/// Well-founded complexity of a term, compared lexicographically.  The
/// deviation measures how far the right content overshoots the weight; the
/// defect and the bad-factor count order the repair steps; degree and the
/// flattened word order the final sorting.
struct Measure {
    int deviation = 0;
    int defect = 0;
    int bads_left = 0;
    int degree = 0;
    std::vector<int> flattened;

    bool operator<(const Measure& o) const {
        return std::tie(deviation, defect, bads_left, degree, flattened) <
               std::tie(o.deviation, o.defect, o.bads_left, o.degree, o.flattened);
    }
};

struct BasisKey {
    std::vector<int> A;
    std::vector<int> C;
    Composition mu;

    bool operator<(const BasisKey& o) const {
        return std::tie(mu, A, C) < std::tie(o.mu, o.A, o.C);
    }
    bool operator==(const BasisKey& o) const { return A == o.A && C == o.C && mu == o.mu; }
};

template <class Ring>
struct StraightenResult {
    std::map<BasisKey, typename Ring::Scalar> coords;
    std::size_t steps = 0;
    std::size_t terms_processed = 0;
};

/// Straightens factor products into coordinates on the sorted monomial
/// family with the idempotent on the right.
template <class Ring>
class Straightener {
public:
    using Scalar = typename Ring::Scalar;
    using Term = StraightenTerm<Ring>;

    struct Options {
        std::size_t step_budget = 1000000;
        bool check_measure = false;
    };

    Straightener(int n, int d, RootOrder orderE, RootOrder orderF, Options opt = Options{})
        : n_(n), d_(d), orderE_(std::move(orderE)), orderF_(std::move(orderF)), opt_(opt) {}

    Straightener(int n, int d) : Straightener(n, d, RootOrder::box(n), RootOrder::box(n)) {}

    const RootOrder& orderE() const { return orderE_; }
    const RootOrder& orderF() const { return orderF_; }

    /// Pushes every idempotent to the right end, absorbing diagonal factors
    /// as scalars along the way; terms that hit an impossible weight vanish.
    /// Inputs without any idempotent are resolved against every weight.
    std::vector<Term> move_idempotents_right(const KostantMonomial& input) const {
        std::vector<Term> out;
        bool has_idem = false;
        for (const auto& f : input)
            if (f.kind == FactorKind::Idempotent) has_idem = true;
        if (has_idem && input.back().kind == FactorKind::Idempotent) {
            KostantMonomial head(input.begin(), input.end() - 1);
            if (auto t = absorb(head, input.back().lambda)) out.push_back(std::move(*t));
        } else {
            for (const auto& mu : enumerate_compositions(n_, d_))
                if (auto t = absorb(input, mu)) out.push_back(std::move(*t));
        }
        return out;
    }

    StraightenResult<Ring> straighten(const KostantMonomial& input) {
        StraightenResult<Ring> res;
        std::vector<Term> stack = move_idempotents_right(input);
        while (!stack.empty()) {
            Term term = std::move(stack.back());
            stack.pop_back();
            ++res.terms_processed;

            ContentVector chi = right_content(term.word);
            if (componentwise_leq(chi, term.mu)) {
                int swap_at = first_out_of_order(term.word);
                if (swap_at < 0) {
                    emit(res, term);
                    continue;
                }
                expand(res, stack, term, swap_at, false);
            } else {
                int p = defect_good_position(term.word, chi, term.mu);
                if (p <= 0) throw std::logic_error("straighten: stuck term escaped the zero check");
                expand(res, stack, term, p - 1, true);
            }
        }
        return res;
    }

    Measure measure(const Term& term) const {
        Measure m;
        m.degree = 0;
        for (const auto& f : term.word) {
            m.degree += f.m;
            int r = factor_rank(f);
            for (int s = 0; s < f.m; ++s) m.flattened.push_back(r);
        }
        ContentVector chi = right_content(term.word);
        for (std::size_t t = 0; t < chi.size(); ++t)
            if (chi[t] > term.mu[t]) m.deviation += chi[t] - term.mu[t];
        if (m.deviation > 0) {
            int j = offending_index(chi, term.mu);
            int first_bad = -1;
            for (std::size_t p = 0; p < term.word.size(); ++p)
                if (term.word[p].root.b == j) {
                    first_bad = static_cast<int>(p);
                    break;
                }
            if (first_bad >= 0) {
                int leftmost_good = -1;
                for (std::size_t p = static_cast<std::size_t>(first_bad) + 1; p < term.word.size(); ++p) {
                    if (term.word[p].root.b != j) {
                        m.defect += term.word[p].m;
                        if (leftmost_good < 0) leftmost_good = static_cast<int>(p);
                    }
                }
                if (leftmost_good >= 0)
                    for (int p = 0; p < leftmost_good; ++p)
                        if (term.word[static_cast<std::size_t>(p)].root.b == j) ++m.bads_left;
            }
        }
        return m;
    }

private:
    int factor_rank(const KostantFactor& f) const {
        if (f.root.is_positive()) return static_cast<int>(orderE_.position(f.root));
        return static_cast<int>(orderE_.size() + orderF_.position(f.root.positive_part()));
    }

    ContentVector right_content(const std::vector<KostantFactor>& word) const {
        ContentVector chi(static_cast<std::size_t>(n_), 0);
        for (const auto& f : word) chi[static_cast<std::size_t>(f.root.b) - 1] += f.m;
        return chi;
    }

    static int offending_index(const ContentVector& chi, const Composition& mu) {
        for (std::size_t t = 0; t < chi.size(); ++t)
            if (chi[t] > mu[t]) return static_cast<int>(t) + 1;
        return 0;
    }

    /// Leftmost factor not touching the offending coordinate that has a
    /// contributing factor somewhere to its left.
    static int defect_good_position(const std::vector<KostantFactor>& word, const ContentVector& chi,
                                    const Composition& mu) {
        int j = offending_index(chi, mu);
        int first_bad = -1;
        for (std::size_t p = 0; p < word.size(); ++p) {
            bool bad = word[p].root.b == j;
            if (bad && first_bad < 0) first_bad = static_cast<int>(p);
            if (!bad && first_bad >= 0) return static_cast<int>(p);
        }
        return -1;
    }

    int first_out_of_order(const std::vector<KostantFactor>& word) const {
        for (std::size_t p = 0; p + 1 < word.size(); ++p)
            if (factor_rank(word[p]) > factor_rank(word[p + 1])) return static_cast<int>(p);
        return -1;
    }

    /// Right-to-left pass: evaluates diagonal factors at the boundary
    /// weight, drops matching idempotents, kills impossible weights, then
    /// merges adjacent equal roots.
    std::optional<Term> absorb(const std::vector<KostantFactor>& word, Composition mu) const {
        if (static_cast<int>(mu.size()) != n_) throw std::invalid_argument("absorb: weight size mismatch");
        if (composition_sum(mu) != d_) return std::nullopt;
        for (int x : mu)
            if (x < 0) return std::nullopt;
        Term term;
        term.coeff = Ring::one();
        term.mu = mu;
        Composition nu = mu;
        std::vector<KostantFactor> kept;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            const KostantFactor& f = *it;
            switch (f.kind) {
                case FactorKind::DividedRootPower: {
                    if (f.m == 0) break;
                    nu[static_cast<std::size_t>(f.root.a) - 1] += f.m;
                    nu[static_cast<std::size_t>(f.root.b) - 1] -= f.m;
                    if (nu[static_cast<std::size_t>(f.root.b) - 1] < 0) return std::nullopt;
                    kept.push_back(f);
                    break;
                }
                case FactorKind::Idempotent: {
                    if (static_cast<int>(f.lambda.size()) != n_)
                        throw std::invalid_argument("absorb: idempotent weight size mismatch");
                    if (f.lambda != nu) return std::nullopt;
                    break;
                }
                case FactorKind::CartanBinomial: {
                    long w = nu[static_cast<std::size_t>(f.index) - 1];
                    term.coeff = term.coeff * Ring::binomial_scalar(w + f.c, f.t);
                    break;
                }
                case FactorKind::RootKBinomial: {
                    long w = nu[static_cast<std::size_t>(f.root.a) - 1] - nu[static_cast<std::size_t>(f.root.b) - 1];
                    term.coeff = term.coeff * Ring::binomial_scalar(w + f.c, f.t);
                    break;
                }
                case FactorKind::KPower: {
                    long w = nu[static_cast<std::size_t>(f.index) - 1];
                    if constexpr (Ring::tag == RingTag::Quantum) {
                        term.coeff = term.coeff * Ring::v_power(static_cast<int>(f.exp * w));
                    } else {
                        if (f.exp < 0) throw std::invalid_argument("absorb: negative classical Cartan power");
                        for (int s = 0; s < f.exp; ++s) term.coeff = term.coeff * Ring::from_long(w);
                    }
                    break;
                }
            }
            if (term.coeff == Ring::zero()) return std::nullopt;
        }
        std::reverse(kept.begin(), kept.end());
        // Merge adjacent equal roots into one divided power.
        std::vector<KostantFactor> merged;
        for (const auto& f : kept) {
            if (!merged.empty() && merged.back().root == f.root) {
                int a = merged.back().m, b = f.m;
                term.coeff = term.coeff * Ring::binomial_scalar(a + b, a);
                if (term.coeff == Ring::zero()) return std::nullopt;
                merged.back().m = a + b;
            } else {
                merged.push_back(f);
            }
        }
        term.word = std::move(merged);
        return term;
    }

    void emit(StraightenResult<Ring>& res, const Term& term) const {
        BasisKey key;
        key.A.assign(orderE_.size(), 0);
        key.C.assign(orderF_.size(), 0);
        key.mu = term.mu;
        for (const auto& f : term.word) {
            if (f.root.is_positive())
                key.A[orderE_.position(f.root)] = f.m;
            else
                key.C[orderF_.position(f.root.positive_part())] = f.m;
        }
        auto it = res.coords.find(key);
        if (it == res.coords.end()) {
            if (!(term.coeff == Ring::zero())) res.coords.emplace(std::move(key), term.coeff);
        } else {
            it->second = it->second + term.coeff;
            if (it->second == Ring::zero()) res.coords.erase(it);
        }
    }

    void expand(StraightenResult<Ring>& res, std::vector<Term>& stack, const Term& term, int at,
                bool defect_form) {
        if (++res.steps > opt_.step_budget)
            throw NonTermination("straighten: step budget exceeded after " + std::to_string(res.steps - 1) +
                                 " expansions");
        Measure parent;
        if (opt_.check_measure) parent = measure(term);
        const auto& x = term.word[static_cast<std::size_t>(at)];
        const auto& y = term.word[static_cast<std::size_t>(at) + 1];
        auto rewrites = commute_pair<Ring>(x, y, defect_form);
        for (auto& rt : rewrites) {
            std::vector<KostantFactor> next;
            next.reserve(term.word.size() + rt.word.size());
            next.insert(next.end(), term.word.begin(), term.word.begin() + at);
            next.insert(next.end(), rt.word.begin(), rt.word.end());
            next.insert(next.end(), term.word.begin() + at + 2, term.word.end());
            auto child = absorb(next, term.mu);
            if (!child) continue;
            child->coeff = child->coeff * term.coeff * rt.coeff;
            if (child->coeff == Ring::zero()) continue;
            if (opt_.check_measure) {
                Measure cm = measure(*child);
                if (!(cm < parent))
                    throw std::logic_error("straighten: measure did not decrease at a " +
                                           classify_pair(x, y) + " step");
            }
            stack.push_back(std::move(*child));
        }
    }

    int n_;
    int d_;
    RootOrder orderE_;
    RootOrder orderF_;
    Options opt_;
};

}  // namespace schur
