#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schur/generators.hpp"
#include "schur/kostant.hpp"
#include "schur/linalg.hpp"
#include "schur/operator.hpp"
#include "schur/qint.hpp"
#include "schur/rootdata.hpp"

namespace schur {

/// Working context for one algebra instance: the generator matrices plus
/// memoized derived operators (root vectors, divided powers, idempotents,
/// Cartan binomials) and evaluation of factor products.
template <class Ring>
class AlgebraContext {
public:
    using Scalar = typename Ring::Scalar;
    using Op = ExactOperator<Ring>;

    explicit AlgebraContext(GeneratorSet<Ring> gen) : gen_(std::move(gen)) {}

    int n() const { return gen_.n; }
    int d() const { return gen_.d; }
    int dimension() const { return gen_.basis.dimension(); }
    const GeneratorSet<Ring>& generators() const { return gen_; }
    const TensorBasis& basis() const { return gen_.basis; }
    std::vector<Composition> weights() const { return enumerate_compositions(gen_.n, gen_.d); }

    /// Root vector for eps_a - eps_b, built from the simple generators by
    /// the standard bracket recursion.  In the quantum case the positive
    /// recursion is X = v^-1 E_i X' - X' E_i and the negative one is
    /// X = v X' F_i - F_i X'.
    const Op& root_vector(const Root& alpha) {
        auto it = root_cache_.find(alpha);
        if (it != root_cache_.end()) return it->second;
        Op result(dimension());
        if (alpha.is_positive()) {
            int i = alpha.a, j = alpha.b;
            if (j - i == 1) {
                result = gen_.raise(i);
            } else {
                const Op& inner = root_vector(Root(i + 1, j));
                if constexpr (Ring::tag == RingTag::Quantum)
                    result = (gen_.raise(i) * inner).scaled(Ring::v_power(-1)) - inner * gen_.raise(i);
                else
                    result = gen_.raise(i) * inner - inner * gen_.raise(i);
            }
        } else {
            int i = alpha.b, j = alpha.a;  // alpha = -(eps_i - eps_j), i < j
            if (j - i == 1) {
                result = gen_.lower(i);
            } else {
                const Op& inner = root_vector(Root(j, i + 1));
                if constexpr (Ring::tag == RingTag::Quantum)
                    result = (inner * gen_.lower(i)).scaled(Ring::v_power(1)) - gen_.lower(i) * inner;
                else
                    result = inner * gen_.lower(i) - gen_.lower(i) * inner;
            }
        }
        return root_cache_.emplace(alpha, std::move(result)).first->second;
    }

    /// m-th divided power of the root vector: the plain power divided by
    /// the (quantum) factorial of m.
    const Op& divided_power(const Root& alpha, int m) {
        if (m < 0) throw std::invalid_argument("divided_power: negative exponent");
        auto key = std::make_pair(alpha, m);
        auto it = divided_cache_.find(key);
        if (it != divided_cache_.end()) return it->second;
        Op result(dimension());
        if (m == 0) {
            result = Op::identity(dimension());
        } else {
            result = root_vector(alpha).power(m).scaled(Ring::one() / Ring::factorial_scalar(m));
        }
        return divided_cache_.emplace(std::move(key), std::move(result)).first->second;
    }

    /// Projection onto the weight-lambda subspace of tensor space.  Weights
    /// outside the composition set give the zero operator.
    const Op& idempotent(const Composition& lambda) {
        auto it = idem_cache_.find(lambda);
        if (it != idem_cache_.end()) return it->second;
        Op proj(dimension());
        if (static_cast<int>(lambda.size()) == gen_.n && composition_sum(lambda) == gen_.d) {
            bool ok = true;
            for (int x : lambda)
                if (x < 0) ok = false;
            if (ok)
                for (int col = 0; col < dimension(); ++col)
                    if (gen_.basis.weight(col) == lambda) proj.set_entry(col, col, Ring::one());
        }
        return idem_cache_.emplace(lambda, std::move(proj)).first->second;
    }

    /// Binomial in the i-th Cartan element, shifted by c: classically the
    /// binomial coefficient of H_i + c choose t, quantumly the balanced
    /// product [K_i; c, t].  Both are diagonal in the word basis.
    Op cartan_binomial(int i, long c, int t) const {
        Op out(dimension());
        for (int col = 0; col < dimension(); ++col) {
            long w = gen_.basis.weight(col)[static_cast<std::size_t>(i) - 1];
            Scalar val = Ring::binomial_scalar(w + c, t);
            out.set_entry(col, col, val);
        }
        return out;
    }

    /// Same binomial in the difference of two Cartan elements, i.e. in
    /// H_a - H_b classically and in K_a K_b^-1 quantumly.
    Op root_k_binomial(const Root& r, long c, int t) const {
        Op out(dimension());
        for (int col = 0; col < dimension(); ++col) {
            const auto& mu = gen_.basis.weight(col);
            long w = mu[static_cast<std::size_t>(r.a) - 1] - mu[static_cast<std::size_t>(r.b) - 1];
            out.set_entry(col, col, Ring::binomial_scalar(w + c, t));
        }
        return out;
    }

    Op k_power(int i, int e) const {
        Op out(dimension());
        for (int col = 0; col < dimension(); ++col) {
            long w = gen_.basis.weight(col)[static_cast<std::size_t>(i) - 1];
            if constexpr (Ring::tag == RingTag::Quantum) {
                out.set_entry(col, col, Ring::v_power(static_cast<int>(e * w)));
            } else {
                if (e < 0) throw std::invalid_argument("k_power: classical weights are not invertible");
                BigRational val = 1;
                for (int s = 0; s < e; ++s) val *= w;
                out.set_entry(col, col, val);
            }
        }
        return out;
    }

    /// Product of the per-coordinate Cartan binomials with sizes B_i.  For
    /// B = lambda this reproduces the weight idempotent.
    Op cartan_monomial(const Composition& B) const {
        Op out = Op::identity(dimension());
        for (std::size_t i = 0; i < B.size(); ++i)
            if (B[i] != 0) out = out * cartan_binomial(static_cast<int>(i) + 1, 0, B[i]);
        return out;
    }

    Op factor_operator(const KostantFactor& f) {
        switch (f.kind) {
            case FactorKind::DividedRootPower: return divided_power(f.root, f.m);
            case FactorKind::CartanBinomial: return cartan_binomial(f.index, f.c, f.t);
            case FactorKind::KPower: return k_power(f.index, f.exp);
            case FactorKind::RootKBinomial: return root_k_binomial(f.root, f.c, f.t);
            case FactorKind::Idempotent: return idempotent(f.lambda);
        }
        throw std::logic_error("factor_operator: unknown kind");
    }

    Op evaluate(const KostantMonomial& mono) {
        Op acc = Op::identity(dimension());
        for (const auto& f : mono) acc = acc * factor_operator(f);
        return acc;
    }

    /// Monic minimal polynomial of op, coefficients listed from the constant
    /// term upward.
    std::vector<Scalar> minimal_polynomial(const Op& op) const {
        LinearSolver<Ring> solver(true);
        Op pw = Op::identity(dimension());
        while (true) {
            if (!solver.insert(pw)) {
                auto coords = solver.express(operator_to_vector(pw));
                std::size_t deg = solver.generator_count() - 1;
                std::vector<Scalar> coeffs(deg + 1, Ring::zero());
                coeffs[deg] = Ring::one();
                if (coords)
                    for (const auto& [g, c] : *coords) coeffs[g] = Ring::zero() - c;
                return coeffs;
            }
            pw = pw * op;
            if (solver.generator_count() > static_cast<std::size_t>(dimension()) + 1)
                throw std::logic_error("minimal_polynomial: no dependency found");
        }
    }

    /// Checks that the Cartan elements are recovered from the weight
    /// idempotents: the diagonal generator equals the weighted sum of the
    /// projections, and the Cartan monomial at lambda equals 1_lambda.
    bool reconstruct_cartan() {
        auto lams = weights();
        for (const auto& lam : lams)
            if (cartan_monomial(lam) != idempotent(lam)) return false;
        for (int i = 1; i <= gen_.n; ++i) {
            Op sum(dimension());
            for (const auto& lam : lams) {
                Scalar c;
                if constexpr (Ring::tag == RingTag::Quantum)
                    c = Ring::v_power(lam[static_cast<std::size_t>(i) - 1]);
                else
                    c = Ring::from_long(lam[static_cast<std::size_t>(i) - 1]);
                sum += idempotent(lam).scaled(c);
            }
            if constexpr (Ring::tag == RingTag::Quantum) {
                if (sum != gen_.kappa(i)) return false;
            } else {
                if (sum != gen_.weight(i)) return false;
            }
        }
        return true;
    }

private:
    GeneratorSet<Ring> gen_;
    std::map<Root, Op> root_cache_;
    std::map<std::pair<Root, int>, Op> divided_cache_;
    std::map<Composition, Op> idem_cache_;
};

inline AlgebraContext<ClassicalRing> build_classical_context(int n, int d) {
    return AlgebraContext<ClassicalRing>(build_classical_generators(n, d));
}

inline AlgebraContext<QuantumRing> build_quantum_context(int n, int d) {
    return AlgebraContext<QuantumRing>(build_quantum_generators(n, d));
}

template <class Ring>
AlgebraContext<Ring> build_context(int n, int d) {
    if constexpr (Ring::tag == RingTag::Quantum)
        return build_quantum_context(n, d);
    else
        return build_classical_context(n, d);
}

}  // namespace schur
