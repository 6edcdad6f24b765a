#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schur/algebra.hpp"
#include "schur/basis.hpp"
#include "schur/linalg.hpp"
#include "schur/rootdata.hpp"
#include "schur/subalg.hpp"

namespace schur {

/// Outcome of one experimental spanning-family test.  `count` is the number
/// of candidate elements, `rank` the dimension of their span, `expected`
/// the target the family is hoped to reach.
struct ConjectureReport {
    std::string kind;
    int n = 0;
    int d = 0;
    std::string ring;
    int i0 = 1;
    std::size_t count = 0;
    std::size_t rank = 0;
    std::size_t expected = 0;
    bool pass = false;
    std::string note;
};

namespace detail {

/// Splits a flat exponent vector into the (A, B, C) blocks used by the
/// ordered-product families below.
inline void split_abc(const std::vector<int>& flat, std::size_t na, std::size_t nb,
                      std::vector<int>& A, std::vector<int>& B, std::vector<int>& C) {
    A.assign(flat.begin(), flat.begin() + static_cast<long>(na));
    B.assign(flat.begin() + static_cast<long>(na), flat.begin() + static_cast<long>(na + nb));
    C.assign(flat.begin() + static_cast<long>(na + nb), flat.end());
}

}  // namespace detail

/// Ordered monomials in the plain (undivided) generators: raising root
/// vectors, then Cartan generators with one index omitted, then lowering
/// root vectors, of total degree at most d.  In the quantum ring the Cartan
/// block uses nonnegative powers of the K generators.
template <class Ring>
ConjectureReport conjecture_pbw(AlgebraContext<Ring>& ctx, int i0 = 1) {
    const int n = ctx.n();
    const int d = ctx.d();
    if (i0 < 1 || i0 > n) throw std::invalid_argument("conjecture_pbw: omitted index out of range");
    auto orderE = RootOrder::box(n);
    auto orderF = RootOrder::box(n);
    const std::size_t na = orderE.size(), nb = static_cast<std::size_t>(n - 1), nc = orderF.size();

    ConjectureReport rep;
    rep.kind = "pbw";
    rep.n = n;
    rep.d = d;
    rep.ring = ring_name(Ring::tag);
    rep.i0 = i0;
    rep.expected = static_cast<std::size_t>(
        static_cast<long>(binomial(static_cast<long>(n) * n - 1 + d, d)));

    std::vector<int> cartan_indices;
    for (int i = 1; i <= n; ++i)
        if (i != i0) cartan_indices.push_back(i);

    LinearSolver<Ring> solver(false);
    std::vector<int> A, B, C;
    for (const auto& flat : detail::exponent_vectors(na + nb + nc, 0, d)) {
        detail::split_abc(flat, na, nb, A, B, C);
        auto op = ExactOperator<Ring>::identity(ctx.dimension());
        for (std::size_t p = 0; p < na; ++p)
            if (A[p] > 0) op = op * ctx.root_vector(orderE.sequence()[p]).power(A[p]);
        for (std::size_t p = 0; p < nb; ++p)
            if (B[p] > 0) op = op * ctx.k_power(cartan_indices[p], B[p]);
        for (std::size_t p = 0; p < nc; ++p)
            if (C[p] > 0) op = op * ctx.root_vector(orderF.sequence()[p].negated()).power(C[p]);
        ++rep.count;
        solver.insert(op);
    }
    rep.rank = solver.rank();
    rep.pass = rep.rank == rep.count && rep.count == rep.expected;
    return rep;
}

/// Ordered monomials in the divided powers: divided raising block, Cartan
/// binomial block with the omitted index forced to zero, divided lowering
/// block, total degree at most d.  The candidate family has exactly as many
/// members as the algebra has dimensions.
template <class Ring>
ConjectureReport conjecture_divided_triple(AlgebraContext<Ring>& ctx, int i0 = 1) {
    const int n = ctx.n();
    const int d = ctx.d();
    if (i0 < 1 || i0 > n) throw std::invalid_argument("conjecture_divided_triple: omitted index out of range");
    auto orderE = RootOrder::box(n);
    auto orderF = RootOrder::box(n);
    const std::size_t na = orderE.size(), nb = static_cast<std::size_t>(n - 1), nc = orderF.size();

    ConjectureReport rep;
    rep.kind = Ring::tag == RingTag::Classical ? "eHf" : "EKF";
    rep.n = n;
    rep.d = d;
    rep.ring = ring_name(Ring::tag);
    rep.i0 = i0;
    rep.expected = expected_dimension(n, d);

    std::vector<int> cartan_indices;
    for (int i = 1; i <= n; ++i)
        if (i != i0) cartan_indices.push_back(i);

    LinearSolver<Ring> solver(false);
    std::vector<int> A, B, C;
    for (const auto& flat : detail::exponent_vectors(na + nb + nc, 0, d)) {
        detail::split_abc(flat, na, nb, A, B, C);
        auto op = ExactOperator<Ring>::identity(ctx.dimension());
        for (std::size_t p = 0; p < na; ++p)
            if (A[p] > 0) op = op * ctx.divided_power(orderE.sequence()[p], A[p]);
        Composition full(static_cast<std::size_t>(n), 0);
        for (std::size_t p = 0; p < nb; ++p) full[static_cast<std::size_t>(cartan_indices[p] - 1)] = B[p];
        op = op * ctx.cartan_monomial(full);
        for (std::size_t p = 0; p < nc; ++p)
            if (C[p] > 0) op = op * ctx.divided_power(orderF.sequence()[p].negated(), C[p]);
        ++rep.count;
        solver.insert(op);
    }
    rep.rank = solver.rank();
    rep.pass = rep.rank == rep.count && rep.count == rep.expected;
    return rep;
}

/// Closes the unital subring generated by all divided root powers under
/// multiplication, then asks whether every Cartan binomial of order up to d
/// lies inside.  `count` tallies the membership probes, `rank` the ones
/// that succeed; the note records the closure dimension.
template <class Ring>
ConjectureReport conjecture_cartan_subring(AlgebraContext<Ring>& ctx) {
    const int n = ctx.n();
    const int d = ctx.d();

    ConjectureReport rep;
    rep.kind = "cartan-subring";
    rep.n = n;
    rep.d = d;
    rep.ring = ring_name(Ring::tag);

    std::vector<ExactOperator<Ring>> gens;
    for (const auto& alpha : positive_roots(n))
        for (int m = 1; m <= d; ++m) {
            gens.push_back(ctx.divided_power(alpha, m));
            gens.push_back(ctx.divided_power(alpha.negated(), m));
        }

    LinearSolver<Ring> solver(false);
    std::vector<ExactOperator<Ring>> frontier;
    auto id = ExactOperator<Ring>::identity(ctx.dimension());
    solver.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<ExactOperator<Ring>> next;
        for (const auto& f : frontier)
            for (const auto& g : gens) {
                auto p = f * g;
                if (p.is_zero()) continue;
                if (solver.insert(p)) next.push_back(p);
            }
        frontier = std::move(next);
    }
    rep.note = "closure-rank=" + std::to_string(solver.rank());

    for (int i = 1; i <= n; ++i)
        for (int m = 1; m <= d; ++m) {
            ++rep.count;
            if (solver.in_span(ctx.cartan_binomial(i, 0, m))) ++rep.rank;
        }
    rep.expected = rep.count;
    rep.pass = rep.rank == rep.count;
    return rep;
}

/// Products of a divided raising block and a Cartan binomial block with the
/// omitted index forced to zero, total degree at most d, tested as a basis
/// of the nonnegative part of the algebra.
template <class Ring>
ConjectureReport conjecture_borel(AlgebraContext<Ring>& ctx, int i0 = 1) {
    const int n = ctx.n();
    const int d = ctx.d();
    if (i0 < 1 || i0 > n) throw std::invalid_argument("conjecture_borel: omitted index out of range");
    auto orderE = RootOrder::box(n);
    const std::size_t na = orderE.size(), nb = static_cast<std::size_t>(n - 1);

    ConjectureReport rep;
    rep.kind = "borel";
    rep.n = n;
    rep.d = d;
    rep.ring = ring_name(Ring::tag);
    rep.i0 = i0;
    rep.expected = static_cast<std::size_t>(
        static_cast<long>(binomial(static_cast<long>(na) + n - 1 + d, d)));

    std::vector<int> cartan_indices;
    for (int i = 1; i <= n; ++i)
        if (i != i0) cartan_indices.push_back(i);

    LinearSolver<Ring> solver(false);
    std::vector<int> A, B, C;
    for (const auto& flat : detail::exponent_vectors(na + nb, 0, d)) {
        detail::split_abc(flat, na, nb, A, B, C);
        auto op = ExactOperator<Ring>::identity(ctx.dimension());
        for (std::size_t p = 0; p < na; ++p)
            if (A[p] > 0) op = op * ctx.divided_power(orderE.sequence()[p], A[p]);
        Composition full(static_cast<std::size_t>(n), 0);
        for (std::size_t p = 0; p < nb; ++p) full[static_cast<std::size_t>(cartan_indices[p] - 1)] = B[p];
        op = op * ctx.cartan_monomial(full);
        ++rep.count;
        solver.insert(op);
    }
    rep.rank = solver.rank();

    auto ge0 = borel_idempotent_basis(ctx, orderE);
    rep.note = "nonnegative-part-rank=" + std::to_string(ge0.rank);
    rep.pass = rep.rank == rep.count && rep.count == rep.expected && rep.rank == ge0.rank;
    return rep;
}

/// Dispatches one of the five experimental checks by name.
template <class Ring>
ConjectureReport conjecture_report(AlgebraContext<Ring>& ctx, const std::string& kind, int i0 = 1) {
    if (kind == "pbw") return conjecture_pbw(ctx, i0);
    if (kind == "eHf" || kind == "EKF") return conjecture_divided_triple(ctx, i0);
    if (kind == "cartan-subring") return conjecture_cartan_subring(ctx);
    if (kind == "borel") return conjecture_borel(ctx, i0);
    throw std::invalid_argument("conjecture_report: unknown kind " + kind);
}

}  // namespace schur
