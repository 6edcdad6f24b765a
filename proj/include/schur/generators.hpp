#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "schur/operator.hpp"
#include "schur/scalar_ring.hpp"
#include "schur/tensorspace.hpp"

namespace schur {

/// The defining generators of the algebra acting on d-fold tensor space,
/// realized as exact matrices.  Classical sets carry the diagonal weight
/// operators h; quantum sets carry the invertible diagonals k, k_inv.
template <class Ring>
struct GeneratorSet {
    int n = 0;
    int d = 0;
    TensorBasis basis{1, 1};
    std::vector<ExactOperator<Ring>> e;      // indices 1..n-1
    std::vector<ExactOperator<Ring>> f;      // indices 1..n-1
    std::vector<ExactOperator<Ring>> h;      // classical only, indices 1..n
    std::vector<ExactOperator<Ring>> k;      // quantum only, indices 1..n
    std::vector<ExactOperator<Ring>> k_inv;  // quantum only, indices 1..n
    std::string convention;                  // which tensor slots the E/F twists act on

    const ExactOperator<Ring>& raise(int i) const { return e.at(static_cast<std::size_t>(i) - 1); }
    const ExactOperator<Ring>& lower(int i) const { return f.at(static_cast<std::size_t>(i) - 1); }
    const ExactOperator<Ring>& weight(int i) const { return h.at(static_cast<std::size_t>(i) - 1); }
    const ExactOperator<Ring>& kappa(int i) const { return k.at(static_cast<std::size_t>(i) - 1); }
    const ExactOperator<Ring>& kappa_inv(int i) const {
        return k_inv.at(static_cast<std::size_t>(i) - 1);
    }
};

inline GeneratorSet<ClassicalRing> build_classical_generators(int n, int d) {
    GeneratorSet<ClassicalRing> gen;
    gen.n = n;
    gen.d = d;
    gen.basis = TensorBasis(n, d);
    gen.convention = "derivation";
    const int dim = gen.basis.dimension();

    for (int i = 1; i < n; ++i) {
        ExactOperator<ClassicalRing> ei(dim), fi(dim);
        for (int col = 0; col < dim; ++col) {
            const auto& w = gen.basis.word(col);
            for (int p = 0; p < d; ++p) {
                if (w[static_cast<std::size_t>(p)] == i + 1) {
                    auto w2 = w;
                    w2[static_cast<std::size_t>(p)] = i;
                    ei.add_entry(gen.basis.index(w2), col, BigRational(1));
                }
                if (w[static_cast<std::size_t>(p)] == i) {
                    auto w2 = w;
                    w2[static_cast<std::size_t>(p)] = i + 1;
                    fi.add_entry(gen.basis.index(w2), col, BigRational(1));
                }
            }
        }
        gen.e.push_back(std::move(ei));
        gen.f.push_back(std::move(fi));
    }
    for (int i = 1; i <= n; ++i) {
        ExactOperator<ClassicalRing> hi(dim);
        for (int col = 0; col < dim; ++col)
            hi.set_entry(col, col, BigRational(gen.basis.weight(col)[static_cast<std::size_t>(i) - 1]));
        gen.h.push_back(std::move(hi));
    }
    return gen;
}

namespace detail {

inline int count_letter(const std::vector<int>& w, int letter, int from, int to) {
    int c = 0;
    for (int p = from; p < to; ++p)
        if (w[static_cast<std::size_t>(p)] == letter) ++c;
    return c;
}

/// Builds E_i, F_i under one of the two tensor-twist placements.  With
/// "suffix", E_i reads the slots after the changed one and F_i the slots
/// before it; "prefix" swaps the two readings.
inline void build_quantum_ef(GeneratorSet<QuantumRing>& gen, const std::string& convention) {
    const int n = gen.n;
    const int d = gen.d;
    const int dim = gen.basis.dimension();
    gen.e.clear();
    gen.f.clear();
    gen.convention = convention;
    const bool suffix = convention == "suffix";

    for (int i = 1; i < n; ++i) {
        ExactOperator<QuantumRing> ei(dim), fi(dim);
        for (int col = 0; col < dim; ++col) {
            const auto& w = gen.basis.word(col);
            for (int p = 0; p < d; ++p) {
                if (w[static_cast<std::size_t>(p)] == i + 1) {
                    auto w2 = w;
                    w2[static_cast<std::size_t>(p)] = i;
                    int exp = suffix ? count_letter(w, i, p + 1, d) - count_letter(w, i + 1, p + 1, d)
                                     : count_letter(w, i, 0, p) - count_letter(w, i + 1, 0, p);
                    ei.add_entry(gen.basis.index(w2), col, RationalFunction::v_power(exp));
                }
                if (w[static_cast<std::size_t>(p)] == i) {
                    auto w2 = w;
                    w2[static_cast<std::size_t>(p)] = i + 1;
                    int exp = suffix ? count_letter(w, i + 1, 0, p) - count_letter(w, i, 0, p)
                                     : count_letter(w, i + 1, p + 1, d) - count_letter(w, i, p + 1, d);
                    fi.add_entry(gen.basis.index(w2), col, RationalFunction::v_power(exp));
                }
            }
        }
        gen.e.push_back(std::move(ei));
        gen.f.push_back(std::move(fi));
    }
}

/// E_i F_j - F_j E_i must equal delta_ij (K_i K_{i+1}^-1 - K_i^-1 K_{i+1})
/// divided by (v - v^-1).
inline bool commutator_relation_holds(const GeneratorSet<QuantumRing>& gen) {
    const int n = gen.n;
    RationalFunction vdiff = RationalFunction::v_power(1) - RationalFunction::v_power(-1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            auto lhs = gen.raise(i) * gen.lower(j) - gen.lower(j) * gen.raise(i);
            if (i == j) {
                auto rhs = (gen.kappa(i) * gen.kappa_inv(i + 1) - gen.kappa_inv(i) * gen.kappa(i + 1))
                               .scaled(vdiff.inverse());
                if (lhs != rhs) return false;
            } else if (!lhs.is_zero()) {
                return false;
            }
        }
    return true;
}

}  // namespace detail

inline GeneratorSet<QuantumRing> build_quantum_generators(int n, int d) {
    GeneratorSet<QuantumRing> gen;
    gen.n = n;
    gen.d = d;
    gen.basis = TensorBasis(n, d);
    const int dim = gen.basis.dimension();

    for (int i = 1; i <= n; ++i) {
        ExactOperator<QuantumRing> ki(dim), ki_inv(dim);
        for (int col = 0; col < dim; ++col) {
            int c = gen.basis.weight(col)[static_cast<std::size_t>(i) - 1];
            ki.set_entry(col, col, RationalFunction::v_power(c));
            ki_inv.set_entry(col, col, RationalFunction::v_power(-c));
        }
        gen.k.push_back(std::move(ki));
        gen.k_inv.push_back(std::move(ki_inv));
    }

    detail::build_quantum_ef(gen, "suffix");
    if (!detail::commutator_relation_holds(gen)) {
        detail::build_quantum_ef(gen, "prefix");
        if (!detail::commutator_relation_holds(gen))
            throw std::logic_error("build_quantum_generators: no twist placement satisfies the commutator relation");
    }
    return gen;
}

}  // namespace schur
