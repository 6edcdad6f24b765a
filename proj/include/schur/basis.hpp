#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schur/algebra.hpp"
#include "schur/kostant.hpp"
#include "schur/linalg.hpp"
#include "schur/numeric.hpp"
#include "schur/rootdata.hpp"

namespace schur {

enum class Side { Plus, Minus };
enum class Placement { Left, Middle, Right };

inline const char* side_name(Side s) { return s == Side::Plus ? "plus" : "minus"; }
inline const char* placement_name(Placement p) {
    switch (p) {
        case Placement::Left: return "left";
        case Placement::Middle: return "middle";
        case Placement::Right: return "right";
    }
    return "?";
}

inline Side side_from_string(const std::string& s) {
    if (s == "plus") return Side::Plus;
    if (s == "minus") return Side::Minus;
    throw std::invalid_argument("side must be plus or minus");
}

inline Placement placement_from_string(const std::string& s) {
    if (s == "left") return Placement::Left;
    if (s == "middle") return Placement::Middle;
    if (s == "right") return Placement::Right;
    throw std::invalid_argument("placement must be left, middle or right");
}

/// Dimension of the full algebra: compositions of d into n^2 parts.
inline std::size_t expected_dimension(int n, int d) {
    BigInt b = binomial(BigInt(n * n + d - 1), d);
    return static_cast<std::size_t>(b.convert_to<unsigned long>());
}

/// One monomial basis element: exponents A over the positive-root sequence
/// for the raising block, exponents C for the lowering block, and the
/// weight of the idempotent at the stored placement.
struct BasisElement {
    std::vector<int> A;
    Composition weight;
    std::vector<int> C;
    Side side = Side::Plus;
    Placement placement = Placement::Middle;

    int degree() const {
        int s = 0;
        for (int x : A) s += x;
        for (int x : C) s += x;
        return s;
    }
    int raising_degree() const {
        int s = 0;
        for (int x : A) s += x;
        return s;
    }
};

struct BasisFamily {
    int n = 0;
    int d = 0;
    Side side = Side::Plus;
    Placement placement = Placement::Middle;
    RootOrder orderE;
    RootOrder orderF;
    std::vector<BasisElement> elements;

    /// Contiguous runs of elements sharing one weight, in enumeration order.
    std::vector<std::pair<Composition, std::pair<std::size_t, std::size_t>>> pieces() const {
        std::vector<std::pair<Composition, std::pair<std::size_t, std::size_t>>> out;
        std::size_t i = 0;
        while (i < elements.size()) {
            std::size_t j = i;
            while (j < elements.size() && elements[j].weight == elements[i].weight) ++j;
            out.push_back({elements[i].weight, {i, j}});
            i = j;
        }
        return out;
    }
};

namespace detail {

/// The weight coordinate constrained by each exponent, depending on where
/// the idempotent sits.  Right placement groups by the second written index
/// of the factor and left by the first, for either side.  Middle placement
/// groups by the index the block next to the idempotent consumes from: the
/// larger root index when the raising block is adjacent (plus side), the
/// smaller when the lowering block is (minus side).
inline int variable_group(const Root& pair_root, bool is_raising, Side side,
                          Placement placement) {
    switch (placement) {
        case Placement::Middle: return side == Side::Plus ? pair_root.b : pair_root.a;
        case Placement::Right: return is_raising ? pair_root.b : pair_root.a;
        case Placement::Left: return is_raising ? pair_root.a : pair_root.b;
    }
    return pair_root.b;
}

inline void enumerate_bounded_vectors(int slots, int budget, std::vector<int>& cur,
                                      std::vector<std::vector<int>>& out) {
    if (slots == 0) {
        out.push_back(cur);
        return;
    }
    for (int x = 0; x <= budget; ++x) {
        cur.push_back(x);
        enumerate_bounded_vectors(slots - 1, budget - x, cur, out);
        cur.pop_back();
    }
}

/// Piece-internal order: lower total degree first, then more raising
/// factors first, then fewer distinct factors, then lexicographically
/// larger exponent vectors over the raising-then-lowering sequence.
inline bool piece_order_less(const BasisElement& x, const BasisElement& y) {
    int dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx < dy;
    int rx = x.raising_degree(), ry = y.raising_degree();
    if (rx != ry) return rx > ry;
    auto support = [](const BasisElement& e) {
        int s = 0;
        for (int a : e.A) s += a > 0 ? 1 : 0;
        for (int c : e.C) s += c > 0 ? 1 : 0;
        return s;
    };
    int sx = support(x), sy = support(y);
    if (sx != sy) return sx < sy;
    for (std::size_t k = 0; k < x.A.size(); ++k)
        if (x.A[k] != y.A[k]) return x.A[k] > y.A[k];
    for (std::size_t k = 0; k < x.C.size(); ++k)
        if (x.C[k] != y.C[k]) return x.C[k] > y.C[k];
    return false;
}

}  // namespace detail

/// All basis elements for the requested side and placement, grouped by
/// weight in descending lexicographic order and sorted inside each piece.
inline BasisFamily enumerate_basis(int n, int d, Side side, Placement placement,
                               const RootOrder& orderE, const RootOrder& orderF) {
    BasisFamily fam;
    fam.n = n;
    fam.d = d;
    fam.side = side;
    fam.placement = placement;
    fam.orderE = orderE;
    fam.orderF = orderF;

    const auto& seqE = orderE.sequence();
    const auto& seqF = orderF.sequence();
    const int ne = static_cast<int>(seqE.size());
    const int nf = static_cast<int>(seqF.size());

    std::vector<std::vector<int>> shapes;
    {
        std::vector<int> cur;
        detail::enumerate_bounded_vectors(ne + nf, d, cur, shapes);
    }

    std::vector<int> group(static_cast<std::size_t>(ne + nf));
    for (int k = 0; k < ne; ++k)
        group[static_cast<std::size_t>(k)] =
            detail::variable_group(seqE[static_cast<std::size_t>(k)], true, side, placement);
    for (int k = 0; k < nf; ++k)
        group[static_cast<std::size_t>(ne + k)] =
            detail::variable_group(seqF[static_cast<std::size_t>(k)], false, side, placement);

    for (const auto& lam : enumerate_compositions(n, d)) {
        std::vector<BasisElement> piece;
        for (const auto& shape : shapes) {
            Composition sums(static_cast<std::size_t>(n), 0);
            for (int k = 0; k < ne + nf; ++k)
                sums[static_cast<std::size_t>(group[static_cast<std::size_t>(k)]) - 1] +=
                    shape[static_cast<std::size_t>(k)];
            bool ok = true;
            for (int g = 0; g < n; ++g)
                if (sums[static_cast<std::size_t>(g)] > lam[static_cast<std::size_t>(g)]) ok = false;
            if (!ok) continue;
            BasisElement el;
            el.A.assign(shape.begin(), shape.begin() + ne);
            el.C.assign(shape.begin() + ne, shape.end());
            el.weight = lam;
            el.side = side;
            el.placement = placement;
            piece.push_back(std::move(el));
        }
        std::sort(piece.begin(), piece.end(), detail::piece_order_less);
        for (auto& el : piece) fam.elements.push_back(std::move(el));
    }
    return fam;
}

inline BasisFamily enumerate_basis(int n, int d, Side side = Side::Plus,
                               Placement placement = Placement::Middle) {
    return enumerate_basis(n, d, side, placement, RootOrder::box(n), RootOrder::box(n));
}

/// The factor product realizing one element: raising factors in order,
/// lowering factors in order, idempotent at the stored placement; the
/// minus side puts the lowering block first.
inline KostantMonomial element_monomial(const BasisFamily& fam, const BasisElement& el) {
    KostantMonomial blockE, blockF;
    const auto& seqE = fam.orderE.sequence();
    const auto& seqF = fam.orderF.sequence();
    for (std::size_t k = 0; k < seqE.size(); ++k)
        if (el.A[k] > 0) blockE.push_back(KostantFactor::divided_power(seqE[k], el.A[k]));
    for (std::size_t k = 0; k < seqF.size(); ++k)
        if (el.C[k] > 0)
            blockF.push_back(KostantFactor::divided_power(Root(seqF[k].b, seqF[k].a), el.C[k]));

    KostantMonomial first = el.side == Side::Plus ? blockE : blockF;
    KostantMonomial second = el.side == Side::Plus ? blockF : blockE;
    KostantMonomial out;
    auto idem = KostantFactor::idempotent(el.weight);
    if (el.placement == Placement::Left) out.push_back(idem);
    out.insert(out.end(), first.begin(), first.end());
    if (el.placement == Placement::Middle) out.push_back(idem);
    out.insert(out.end(), second.begin(), second.end());
    if (el.placement == Placement::Right) out.push_back(idem);
    return out;
}

inline std::string element_to_string(const BasisFamily& fam, const BasisElement& el) {
    return monomial_to_string(element_monomial(fam, el));
}

/// A basis family together with its matrices and a coordinate solver.
template <class Ring>
struct BasisRealization {
    BasisFamily family;
    std::vector<ExactOperator<Ring>> ops;
    LinearSolver<Ring> solver{true};
};

template <class Ring>
BasisRealization<Ring> realize_basis(AlgebraContext<Ring>& ctx, BasisFamily family) {
    BasisRealization<Ring> real;
    real.family = std::move(family);
    real.ops.reserve(real.family.elements.size());
    for (const auto& el : real.family.elements) {
        real.ops.push_back(ctx.evaluate(element_monomial(real.family, el)));
        real.solver.insert(real.ops.back());
    }
    return real;
}

struct BasisCheck {
    std::size_t count = 0;
    std::size_t rank = 0;
    std::size_t expected = 0;
    bool pass = false;
};

/// The family is a basis exactly when its count and rank both equal the
/// algebra dimension.
template <class Ring>
BasisCheck verify_basis(const BasisRealization<Ring>& real) {
    BasisCheck chk;
    chk.count = real.family.elements.size();
    chk.rank = real.solver.rank();
    chk.expected = expected_dimension(real.family.n, real.family.d);
    chk.pass = chk.count == chk.expected && chk.rank == chk.expected;
    return chk;
}

template <class Ring>
struct CoordinateVector {
    std::map<std::size_t, typename Ring::Scalar> coords;
    bool integral = true;
};

template <class Ring>
std::optional<CoordinateVector<Ring>> express_in_basis(const BasisRealization<Ring>& real,
                                                       const ExactOperator<Ring>& op) {
    auto coords = real.solver.express(op);
    if (!coords) return std::nullopt;
    CoordinateVector<Ring> cv;
    cv.coords = std::move(*coords);
    for (const auto& [idx, c] : cv.coords)
        if (!Ring::is_integral(c)) cv.integral = false;
    return cv;
}

/// Correspondence between products with a Cartan block in the middle and
/// middle-placement basis elements.  The exponent triple (A, B, C) with
/// B zero at the distinguished coordinate i0 and |A|+|B|+|C| <= d matches
/// the element (A, C) at the weight built from B and the content.
struct CardEntry {
    std::vector<int> A;
    Composition B;
    std::vector<int> C;
    Composition lambda;
};

struct CardBijectionReport {
    std::size_t count = 0;
    std::size_t expected = 0;
    bool forward_in_basis = true;
    bool injective = true;
    bool roundtrip = true;
    bool pass = false;
    std::vector<CardEntry> entries;
};

inline CardBijectionReport card_bijection(int n, int d, int i0, const RootOrder& orderE,
                                          const RootOrder& orderF) {
    if (i0 < 1 || i0 > n) throw std::invalid_argument("card_bijection: i0 out of range");
    CardBijectionReport rep;
    rep.expected = expected_dimension(n, d);
    const auto& seqE = orderE.sequence();
    const auto& seqF = orderF.sequence();
    const int ne = static_cast<int>(seqE.size());
    const int nf = static_cast<int>(seqF.size());

    std::vector<std::vector<int>> shapes;
    {
        std::vector<int> cur;
        detail::enumerate_bounded_vectors(ne + n + nf, d, cur, shapes);
    }
    std::map<std::pair<std::vector<int>, Composition>, int> seen;
    for (const auto& shape : shapes) {
        Composition B(shape.begin() + ne, shape.begin() + ne + n);
        if (B[static_cast<std::size_t>(i0) - 1] != 0) continue;
        std::vector<int> A(shape.begin(), shape.begin() + ne);
        std::vector<int> C(shape.begin() + ne + n, shape.end());
        int total = 0;
        for (int x : shape) total += x;
        int s = d - total;

        ContentVector chi(static_cast<std::size_t>(n), 0);
        for (int k = 0; k < ne; ++k) chi[static_cast<std::size_t>(seqE[static_cast<std::size_t>(k)].b) - 1] += A[static_cast<std::size_t>(k)];
        for (int k = 0; k < nf; ++k) chi[static_cast<std::size_t>(seqF[static_cast<std::size_t>(k)].b) - 1] += C[static_cast<std::size_t>(k)];

        Composition lam(static_cast<std::size_t>(n), 0);
        for (int t = 0; t < n; ++t) lam[static_cast<std::size_t>(t)] = B[static_cast<std::size_t>(t)] + chi[static_cast<std::size_t>(t)];
        lam[static_cast<std::size_t>(i0) - 1] += s;

        if (!componentwise_leq(chi, lam)) rep.forward_in_basis = false;

        std::vector<int> ac = A;
        ac.insert(ac.end(), C.begin(), C.end());
        auto key = std::make_pair(ac, lam);
        if (!seen.emplace(key, 1).second) rep.injective = false;

        Composition Bback(static_cast<std::size_t>(n), 0);
        for (int t = 0; t < n; ++t) Bback[static_cast<std::size_t>(t)] = lam[static_cast<std::size_t>(t)] - chi[static_cast<std::size_t>(t)];
        Bback[static_cast<std::size_t>(i0) - 1] = 0;
        if (Bback != B) rep.roundtrip = false;

        rep.entries.push_back(CardEntry{std::move(A), std::move(B), std::move(C), std::move(lam)});
    }
    rep.count = rep.entries.size();
    rep.pass = rep.count == rep.expected && rep.forward_in_basis && rep.injective && rep.roundtrip;
    return rep;
}

}  // namespace schur
