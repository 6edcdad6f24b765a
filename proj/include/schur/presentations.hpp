#pragma once

#include <cstdlib>
#include <string>

#include "schur/algebra.hpp"
#include "schur/report.hpp"

namespace schur {

template <class Ring>
using Scalar_t = typename Ring::Scalar;

namespace detail {

template <class Ring>
std::string pair_detail(const char* rel, int i, int j) {
    return std::string(rel) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
}

}  // namespace detail

/// Checks the defining relations of the algebra on a generator set.  The
/// set is taken as given, so deliberately perturbed generators report their
/// failures here.
template <class Ring>
VerificationReport verify_presentation(const GeneratorSet<Ring>& gen) {
    using Op = ExactOperator<Ring>;
    VerificationReport rep;
    rep.suite = "presentation";
    rep.n = gen.n;
    rep.d = gen.d;
    rep.ring = ring_name(Ring::tag);
    const int n = gen.n;
    const int d = gen.d;
    const int dim = gen.basis.dimension();
    const Op id = Op::identity(dim);

    auto cartan = [&](int i) -> const Op& {
        if constexpr (Ring::tag == RingTag::Quantum)
            return gen.kappa(i);
        else
            return gen.weight(i);
    };

    // Cartan elements commute; quantumly K_i K_i^-1 = 1 as well.
    {
        bool ok = true;
        std::string wit;
        for (int i = 1; i <= n && ok; ++i)
            for (int j = i + 1; j <= n && ok; ++j)
                if (cartan(i) * cartan(j) != cartan(j) * cartan(i)) {
                    ok = false;
                    wit = detail::pair_detail<Ring>("commute", i, j);
                }
        if constexpr (Ring::tag == RingTag::Quantum) {
            for (int i = 1; i <= n && ok; ++i)
                if (gen.kappa(i) * gen.kappa_inv(i) != id) {
                    ok = false;
                    wit = "K K^-1 != 1 at i=" + std::to_string(i);
                }
        }
        rep.add("cartan-commute", ok, wit);
    }

    // Commutator of raising and lowering generators.
    {
        bool ok = true;
        std::string wit;
        for (int i = 1; i < n && ok; ++i)
            for (int j = 1; j < n && ok; ++j) {
                Op lhs = gen.raise(i) * gen.lower(j) - gen.lower(j) * gen.raise(i);
                Op rhs(dim);
                if (i == j) {
                    if constexpr (Ring::tag == RingTag::Quantum) {
                        auto vdiff = Ring::v_power(1) - Ring::v_power(-1);
                        rhs = (gen.kappa(j) * gen.kappa_inv(j + 1) - gen.kappa_inv(j) * gen.kappa(j + 1))
                                  .scaled(Ring::one() / vdiff);
                    } else {
                        rhs = gen.weight(j) - gen.weight(j + 1);
                    }
                }
                if (lhs != rhs) {
                    ok = false;
                    wit = detail::pair_detail<Ring>("ef-commutator", i, j);
                }
            }
        rep.add("ef-commutator", ok, wit);
    }

    // Cartan action on the raising and lowering generators.
    {
        bool ok = true;
        std::string wit;
        for (int i = 1; i <= n && ok; ++i)
            for (int j = 1; j < n && ok; ++j) {
                int pairing = eps_alpha_pairing(i, j);
                if constexpr (Ring::tag == RingTag::Quantum) {
                    if (gen.kappa(i) * gen.raise(j) != (gen.raise(j) * gen.kappa(i)).scaled(Ring::v_power(pairing)) ||
                        gen.kappa(i) * gen.lower(j) != (gen.lower(j) * gen.kappa(i)).scaled(Ring::v_power(-pairing))) {
                        ok = false;
                        wit = detail::pair_detail<Ring>("cartan-action", i, j);
                    }
                } else {
                    Op lhs_e = gen.weight(i) * gen.raise(j) - gen.raise(j) * gen.weight(i);
                    Op lhs_f = gen.weight(i) * gen.lower(j) - gen.lower(j) * gen.weight(i);
                    if (lhs_e != gen.raise(j).scaled(Ring::from_long(pairing)) ||
                        lhs_f != gen.lower(j).scaled(Ring::from_long(-pairing))) {
                        ok = false;
                        wit = detail::pair_detail<Ring>("cartan-action", i, j);
                    }
                }
            }
        rep.add("cartan-action", ok, wit);
    }

    // Serre relations among the raising generators and among the lowering
    // generators; distant pairs commute.
    {
        bool ok = true;
        std::string wit;
        Scalar_t<Ring> mid;
        if constexpr (Ring::tag == RingTag::Quantum)
            mid = Ring::v_power(1) + Ring::v_power(-1);
        else
            mid = Ring::from_long(2);
        for (int i = 1; i < n && ok; ++i)
            for (int j = 1; j < n && ok; ++j) {
                if (i == j) continue;
                const Op& x = gen.raise(i);
                const Op& y = gen.raise(j);
                const Op& xf = gen.lower(i);
                const Op& yf = gen.lower(j);
                if (std::abs(i - j) == 1) {
                    Op se = x * x * y - (x * y * x).scaled(mid) + y * x * x;
                    Op sf = xf * xf * yf - (xf * yf * xf).scaled(mid) + yf * xf * xf;
                    if (!se.is_zero() || !sf.is_zero()) {
                        ok = false;
                        wit = detail::pair_detail<Ring>("serre", i, j);
                    }
                } else {
                    if (x * y != y * x || xf * yf != yf * xf) {
                        ok = false;
                        wit = detail::pair_detail<Ring>("distant-commute", i, j);
                    }
                }
            }
        rep.add("serre", ok, wit);
    }

    // The Cartan product over all coordinates is the degree constant.
    {
        Op prod = id;
        bool ok;
        if constexpr (Ring::tag == RingTag::Quantum) {
            for (int i = 1; i <= n; ++i) prod = prod * gen.kappa(i);
            ok = prod == Op::scalar(dim, Ring::v_power(d));
        } else {
            prod = Op(dim);
            for (int i = 1; i <= n; ++i) prod += gen.weight(i);
            ok = prod == Op::scalar(dim, Ring::from_long(d));
        }
        rep.add("cartan-degree", ok, ok ? "" : "sum/product of Cartan elements != degree constant");
    }

    // Each Cartan element satisfies the expected degree d+1 polynomial and
    // nothing smaller.
    {
        bool ok = true;
        std::string wit;
        AlgebraContext<Ring> ctx(gen);
        for (int i = 1; i <= n && ok; ++i) {
            Op prod = id;
            for (int s = 0; s <= d; ++s) {
                if constexpr (Ring::tag == RingTag::Quantum)
                    prod = prod * (gen.kappa(i) - Op::scalar(dim, Ring::v_power(s)));
                else
                    prod = prod * (gen.weight(i) - Op::scalar(dim, Ring::from_long(s)));
            }
            if (!prod.is_zero()) {
                ok = false;
                wit = "annihilating product fails at i=" + std::to_string(i);
                break;
            }
            auto minpoly = ctx.minimal_polynomial(cartan(i));
            if (minpoly.size() != static_cast<std::size_t>(d) + 2) {
                ok = false;
                wit = "minimal polynomial degree " + std::to_string(minpoly.size() - 1) + " != " +
                      std::to_string(d + 1) + " at i=" + std::to_string(i);
            }
        }
        rep.add("cartan-minimal-polynomial", ok, wit);
    }

    return rep;
}

/// Checks the weight-idempotent form of the relations on a built context:
/// orthogonal idempotents summing to one, the shift rules past E_i and F_i,
/// the commutator resolved into weight components, and the Serre relations.
template <class Ring>
VerificationReport verify_idempotent_presentation(AlgebraContext<Ring>& ctx) {
    using Op = ExactOperator<Ring>;
    VerificationReport rep;
    rep.suite = "idempotent";
    rep.n = ctx.n();
    rep.d = ctx.d();
    rep.ring = ring_name(Ring::tag);
    const int n = ctx.n();
    const int dim = ctx.dimension();
    const auto& gen = ctx.generators();
    const auto lams = ctx.weights();

    {
        bool ok = true;
        std::string wit;
        Op sum(dim);
        for (const auto& lam : lams) {
            sum += ctx.idempotent(lam);
            for (const auto& mu : lams) {
                Op prod = ctx.idempotent(lam) * ctx.idempotent(mu);
                Op expect = lam == mu ? ctx.idempotent(lam) : Op(dim);
                if (prod != expect) {
                    ok = false;
                    wit = "orthogonality fails at " + composition_to_string(lam) + "," + composition_to_string(mu);
                }
            }
        }
        if (sum != Op::identity(dim)) {
            ok = false;
            wit = "idempotents do not sum to the identity";
        }
        rep.add("idempotent-orthogonality", ok, wit);
    }

    {
        bool ok = true;
        std::string wit;
        for (const auto& lam : lams)
            for (int i = 1; i < n && ok; ++i) {
                Root alpha(i, i + 1);
                auto up = shift_composition(lam, alpha, 1);
                auto down = shift_composition(lam, alpha, -1);
                Op up_idem = up ? ctx.idempotent(*up) : Op(dim);
                Op down_idem = down ? ctx.idempotent(*down) : Op(dim);
                if (gen.raise(i) * ctx.idempotent(lam) != up_idem * gen.raise(i) ||
                    gen.lower(i) * ctx.idempotent(lam) != down_idem * gen.lower(i) ||
                    ctx.idempotent(lam) * gen.raise(i) != gen.raise(i) * down_idem ||
                    ctx.idempotent(lam) * gen.lower(i) != gen.lower(i) * up_idem) {
                    ok = false;
                    wit = "shift rule fails at lambda=" + composition_to_string(lam) + " i=" + std::to_string(i);
                }
            }
        rep.add("idempotent-shift", ok, wit);
    }

    {
        bool ok = true;
        std::string wit;
        for (int i = 1; i < n && ok; ++i)
            for (int j = 1; j < n && ok; ++j) {
                Op lhs = gen.raise(i) * gen.lower(j) - gen.lower(j) * gen.raise(i);
                Op rhs(dim);
                if (i == j)
                    for (const auto& lam : lams) {
                        long gap = lam[static_cast<std::size_t>(j) - 1] - lam[static_cast<std::size_t>(j)];
                        rhs += ctx.idempotent(lam).scaled(Ring::integer(gap));
                    }
                if (lhs != rhs) {
                    ok = false;
                    wit = detail::pair_detail<Ring>("weighted-commutator", i, j);
                }
            }
        rep.add("idempotent-commutator", ok, wit);
    }

    {
        bool ok = true;
        std::string wit;
        Scalar_t<Ring> mid;
        if constexpr (Ring::tag == RingTag::Quantum)
            mid = Ring::v_power(1) + Ring::v_power(-1);
        else
            mid = Ring::from_long(2);
        for (int i = 1; i < n && ok; ++i)
            for (int j = 1; j < n && ok; ++j) {
                if (i == j) continue;
                const Op& x = gen.raise(i);
                const Op& y = gen.raise(j);
                const Op& xf = gen.lower(i);
                const Op& yf = gen.lower(j);
                bool good;
                if (std::abs(i - j) == 1)
                    good = (x * x * y - (x * y * x).scaled(mid) + y * x * x).is_zero() &&
                           (xf * xf * yf - (xf * yf * xf).scaled(mid) + yf * xf * xf).is_zero();
                else
                    good = x * y == y * x && xf * yf == yf * xf;
                if (!good) {
                    ok = false;
                    wit = detail::pair_detail<Ring>("serre", i, j);
                }
            }
        rep.add("idempotent-serre", ok, wit);
    }

    rep.add("cartan-reconstruction", ctx.reconstruct_cartan());
    return rep;
}

}  // namespace schur
