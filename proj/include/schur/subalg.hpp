#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "schur/algebra.hpp"
#include "schur/basis.hpp"
#include "schur/linalg.hpp"
#include "schur/report.hpp"

namespace schur {

namespace detail {

/// All exponent vectors over the positive-root sequence with entry sum in
/// [lo, hi].
inline std::vector<std::vector<int>> exponent_vectors(std::size_t slots, int lo, int hi) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    enumerate_bounded_vectors(static_cast<int>(slots), hi, cur, all);
    std::vector<std::vector<int>> out;
    for (auto& v : all) {
        int s = 0;
        for (int x : v) s += x;
        if (s >= lo) out.push_back(std::move(v));
    }
    return out;
}

template <class Ring>
ExactOperator<Ring> raising_product(AlgebraContext<Ring>& ctx, const RootOrder& order,
                                    const std::vector<int>& A) {
    auto op = ExactOperator<Ring>::identity(ctx.dimension());
    const auto& seq = order.sequence();
    for (std::size_t k = 0; k < seq.size(); ++k)
        if (A[k] > 0) op = op * ctx.divided_power(seq[k], A[k]);
    return op;
}

template <class Ring>
ExactOperator<Ring> lowering_product(AlgebraContext<Ring>& ctx, const RootOrder& order,
                                     const std::vector<int>& C) {
    auto op = ExactOperator<Ring>::identity(ctx.dimension());
    const auto& seq = order.sequence();
    for (std::size_t k = 0; k < seq.size(); ++k)
        if (C[k] > 0) op = op * ctx.divided_power(seq[k].negated(), C[k]);
    return op;
}

}  // namespace detail

/// One-sided products with total exponent above the degree vanish, provided
/// the factors are arranged so that each letter is consumed before any
/// earlier factor can replenish it.  For raising products that is the order
/// with the larger second index leftmost; for lowering products the
/// mirrored one.  Checks exponent sums d+1 and d+2 on both sides.
template <class Ring>
VerificationReport borel_vanishing_check(AlgebraContext<Ring>& ctx) {
    VerificationReport rep;
    rep.suite = "borel-vanishing";
    rep.n = ctx.n();
    rep.d = ctx.d();
    rep.ring = ring_name(Ring::tag);
    auto orderE = RootOrder::reverse_box(ctx.n());
    auto orderF = RootOrder::box(ctx.n());
    for (int extra = 1; extra <= 2; ++extra) {
        int total = ctx.d() + extra;
        bool okE = true, okF = true;
        std::string witE, witF;
        std::size_t checked = 0;
        for (const auto& A : detail::exponent_vectors(orderE.size(), total, total)) {
            ++checked;
            if (okE && !detail::raising_product(ctx, orderE, A).is_zero()) {
                okE = false;
                witE = "nonzero raising product at exponent sum " + std::to_string(total);
            }
            if (okF && !detail::lowering_product(ctx, orderF, A).is_zero()) {
                okF = false;
                witF = "nonzero lowering product at exponent sum " + std::to_string(total);
            }
        }
        rep.add("raising-vanishing-degree-" + std::to_string(total), okE,
                okE ? std::to_string(checked) + " products checked" : witE);
        rep.add("lowering-vanishing-degree-" + std::to_string(total), okF,
                okF ? std::to_string(checked) + " products checked" : witF);
    }
    return rep;
}

struct SubsetCheck {
    std::size_t count = 0;
    std::size_t rank = 0;
    std::size_t expected = 0;
    bool pass = false;
};

/// The divided raising products of total exponent at most d; their span is
/// the raising part, of dimension binomial(#positive roots + d, d).
template <class Ring>
SubsetCheck borel_plus_basis(AlgebraContext<Ring>& ctx, const RootOrder& orderE) {
    SubsetCheck chk;
    LinearSolver<Ring> solver(false);
    for (const auto& A : detail::exponent_vectors(orderE.size(), 0, ctx.d())) {
        ++chk.count;
        solver.insert(detail::raising_product(ctx, orderE, A));
    }
    chk.rank = solver.rank();
    BigInt b = binomial(BigInt(static_cast<long>(orderE.size()) + ctx.d()), ctx.d());
    chk.expected = static_cast<std::size_t>(b.convert_to<unsigned long>());
    chk.pass = chk.count == chk.expected && chk.rank == chk.expected;
    return chk;
}

/// The raising products cut by weight idempotents, kept when the content
/// fits under the weight; the family must stay linearly independent.
template <class Ring>
SubsetCheck borel_idempotent_basis(AlgebraContext<Ring>& ctx, const RootOrder& orderE) {
    SubsetCheck chk;
    LinearSolver<Ring> solver(false);
    const auto& seq = orderE.sequence();
    for (const auto& lam : ctx.weights()) {
        for (const auto& A : detail::exponent_vectors(orderE.size(), 0, ctx.d())) {
            ContentVector chi(static_cast<std::size_t>(ctx.n()), 0);
            for (std::size_t k = 0; k < seq.size(); ++k)
                chi[static_cast<std::size_t>(seq[k].b) - 1] += A[k];
            if (!componentwise_leq(chi, lam)) continue;
            ++chk.count;
            solver.insert(detail::raising_product(ctx, orderE, A) * ctx.idempotent(lam));
        }
    }
    chk.rank = solver.rank();
    chk.expected = chk.count;
    chk.pass = chk.rank == chk.count;
    return chk;
}

/// The corner of the algebra at the all-ones weight, with its standard
/// generators t_i cut from the simple raising and lowering pairs.
template <class Ring>
struct HeckeContext {
    int d = 0;
    Composition omega;
    ExactOperator<Ring> unit;            // the corner idempotent
    std::vector<ExactOperator<Ring>> t;  // indices 1..d-1
};

template <class Ring>
HeckeContext<Ring> hecke_build(AlgebraContext<Ring>& ctx) {
    if (ctx.n() != ctx.d())
        throw std::invalid_argument("hecke_build: needs n == d so the all-ones weight exists");
    HeckeContext<Ring> h;
    h.d = ctx.d();
    h.omega.assign(static_cast<std::size_t>(ctx.n()), 1);
    h.unit = ctx.idempotent(h.omega);
    for (int i = 1; i < ctx.d(); ++i) {
        auto ti = h.unit * ctx.generators().raise(i) * ctx.generators().lower(i) * h.unit;
        h.t.push_back(ti);
    }
    return h;
}

/// The corner relations: quadratic, distant commutation and the braid-type
/// identity for t_i, then the same in the shifted generators T_i with
/// parameter q (the square of v; classically 1).
template <class Ring>
VerificationReport hecke_relation_check(AlgebraContext<Ring>& ctx, const HeckeContext<Ring>& h) {
    using Op = ExactOperator<Ring>;
    VerificationReport rep;
    rep.suite = "hecke";
    rep.n = ctx.n();
    rep.d = ctx.d();
    rep.ring = ring_name(Ring::tag);
    const int m = static_cast<int>(h.t.size());

    auto two = Ring::integer(2);  // v + v^-1 quantumly
    {
        bool ok = true;
        for (int i = 0; i < m; ++i)
            if (h.t[static_cast<std::size_t>(i)] * h.t[static_cast<std::size_t>(i)] !=
                h.t[static_cast<std::size_t>(i)].scaled(two))
                ok = false;
        rep.add("quadratic", ok);
    }
    {
        bool ok = true;
        std::size_t pairs = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 2; j < m; ++j) {
                ++pairs;
                if (h.t[static_cast<std::size_t>(i)] * h.t[static_cast<std::size_t>(j)] !=
                    h.t[static_cast<std::size_t>(j)] * h.t[static_cast<std::size_t>(i)])
                    ok = false;
            }
        rep.add("distant-commute", ok, std::to_string(pairs) + " pairs");
    }
    {
        bool ok = true;
        for (int i = 0; i + 1 < m; ++i) {
            const Op &a = h.t[static_cast<std::size_t>(i)], &b = h.t[static_cast<std::size_t>(i + 1)];
            if (a * b * a - b * a * b != a - b) ok = false;
        }
        rep.add("braid-difference", ok);
    }

    // Shifted generators.
    typename Ring::Scalar v1 = Ring::v_power(1), q = Ring::v_power(2);
    std::vector<Op> T;
    for (const auto& ti : h.t) T.push_back(h.unit.scaled(q) - ti.scaled(v1));
    {
        bool ok = true;
        for (const auto& Ti : T)
            if (Ti * Ti != Ti.scaled(q - Ring::one()) + h.unit.scaled(q)) ok = false;
        rep.add("shifted-quadratic", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i + 1 < m; ++i) {
            const Op &a = T[static_cast<std::size_t>(i)], &b = T[static_cast<std::size_t>(i + 1)];
            if (a * b * a != b * a * b) ok = false;
        }
        rep.add("shifted-braid", ok);
    }

    // The corner cut is two-sided symmetric on each simple pair.
    {
        bool ok = true;
        for (int i = 1; i < ctx.d(); ++i) {
            auto ef = h.unit * ctx.generators().raise(i) * ctx.generators().lower(i) * h.unit;
            auto fe = h.unit * ctx.generators().lower(i) * ctx.generators().raise(i) * h.unit;
            if (ef != fe) ok = false;
        }
        rep.add("corner-symmetry", ok);
    }

    // Normalized idempotents.
    {
        bool ok = true;
        for (const auto& ti : h.t) {
            auto e = ti.scaled(Ring::one() / two);
            if (e * e != e) ok = false;
        }
        rep.add("normalized-idempotents", ok);
    }
    return rep;
}

/// The corner piece of the sorted monomial basis: elements whose raising
/// and lowering blocks shift the all-ones weight by the same amount.  Their
/// count is the factorial of d.
template <class Ring>
SubsetCheck hecke_basis_check(AlgebraContext<Ring>& ctx, const BasisFamily& family) {
    SubsetCheck chk;
    Composition omega(static_cast<std::size_t>(ctx.n()), 1);
    LinearSolver<Ring> solver(false);
    const auto& seqE = family.orderE.sequence();
    const auto& seqF = family.orderF.sequence();
    for (const auto& el : family.elements) {
        if (el.weight != omega) continue;
        ContentVector shiftA(static_cast<std::size_t>(ctx.n()), 0), shiftC(shiftA);
        for (std::size_t k = 0; k < seqE.size(); ++k) {
            shiftA[static_cast<std::size_t>(seqE[k].a) - 1] += el.A[k];
            shiftA[static_cast<std::size_t>(seqE[k].b) - 1] -= el.A[k];
        }
        for (std::size_t k = 0; k < seqF.size(); ++k) {
            shiftC[static_cast<std::size_t>(seqF[k].a) - 1] += el.C[k];
            shiftC[static_cast<std::size_t>(seqF[k].b) - 1] -= el.C[k];
        }
        if (shiftA != shiftC) continue;
        ++chk.count;
        solver.insert(ctx.evaluate(element_monomial(family, el)));
    }
    chk.rank = solver.rank();
    std::size_t fact = 1;
    for (int s = 2; s <= ctx.d(); ++s) fact *= static_cast<std::size_t>(s);
    chk.expected = fact;
    chk.pass = chk.count == fact && chk.rank == fact;
    return chk;
}

}  // namespace schur
