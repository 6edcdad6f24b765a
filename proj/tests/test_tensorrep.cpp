#include <catch2/catch_amalgamated.hpp>

#include "schur/generators.hpp"
#include "schur/operator.hpp"
#include "schur/scalar_ring.hpp"
#include "schur/tensorspace.hpp"

using namespace schur;

TEST_CASE("tensor words index the product basis", "[tensorspace]") {
    TensorBasis basis(3, 2);
    CHECK(basis.n() == 3);
    CHECK(basis.d() == 2);
    REQUIRE(basis.dimension() == 9);

    // Row-major: the first slot is the most significant digit.
    CHECK(basis.word(0) == std::vector<int>{1, 1});
    CHECK(basis.word(1) == std::vector<int>{1, 2});
    CHECK(basis.word(3) == std::vector<int>{2, 1});
    CHECK(basis.word(8) == std::vector<int>{3, 3});
    for (int i = 0; i < basis.dimension(); ++i) CHECK(basis.index(basis.word(i)) == i);

    CHECK(basis.weight(0) == Composition{2, 0, 0});
    CHECK(basis.weight(basis.index({2, 3})) == Composition{0, 1, 1});
    CHECK(basis.weight(basis.index({3, 3})) == Composition{0, 0, 2});

    CHECK_THROWS_AS(basis.index({1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(basis.index({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(TensorBasis(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(TensorBasis(2, 21), std::invalid_argument);
}

TEST_CASE("classical generators act by place permutation", "[tensorrep]") {
    auto gen = build_classical_generators(2, 2);
    CHECK(gen.convention == "derivation");
    const auto& basis = gen.basis;
    const auto& e1 = gen.raise(1);
    const auto& f1 = gen.lower(1);

    const int i11 = basis.index({1, 1});
    const int i12 = basis.index({1, 2});
    const int i21 = basis.index({2, 1});
    const int i22 = basis.index({2, 2});

    // e_1 turns one letter 2 into a 1 per summand, coefficient 1 each.
    CHECK(e1.entry(i12, i22) == BigRational(1));
    CHECK(e1.entry(i21, i22) == BigRational(1));
    CHECK(e1.column(i22).size() == 2);
    CHECK(e1.entry(i11, i12) == BigRational(1));
    CHECK(e1.column(i11).empty());

    CHECK(f1.entry(i12, i11) == BigRational(1));
    CHECK(f1.entry(i21, i11) == BigRational(1));
    CHECK(f1.column(i22).empty());

    // Diagonal weights count letters.
    CHECK(gen.weight(1).entry(i12, i12) == BigRational(1));
    CHECK(gen.weight(1).entry(i11, i11) == BigRational(2));
    CHECK(gen.weight(2).entry(i22, i22) == BigRational(2));

    // [e_1, f_1] = h_1 - h_2 on the nose.
    CHECK(e1 * f1 - f1 * e1 == gen.weight(1) - gen.weight(2));
}

TEST_CASE("quantum generators pick the twist placement that closes the relations",
          "[tensorrep]") {
    auto gen = build_quantum_generators(2, 2);
    CHECK(gen.convention == "suffix");
    const auto& basis = gen.basis;
    const auto& E1 = gen.raise(1);
    const auto& F1 = gen.lower(1);

    const int i11 = basis.index({1, 1});
    const int i12 = basis.index({1, 2});
    const int i21 = basis.index({2, 1});
    const int i22 = basis.index({2, 2});

    // Raising twists by the tail of the word, lowering by the head.
    CHECK(E1.entry(i12, i22) == RationalFunction::v_power(-1));
    CHECK(E1.entry(i21, i22) == RationalFunction::one());
    CHECK(F1.entry(i21, i11) == RationalFunction::one());
    CHECK(F1.entry(i12, i11) == RationalFunction::v_power(-1));

    // K_i is diagonal with entries v^(weight coordinate).
    CHECK(gen.kappa(1).entry(i11, i11) == RationalFunction::v_power(2));
    CHECK(gen.kappa(1).entry(i12, i12) == RationalFunction::v_power(1));
    CHECK(gen.kappa(2).entry(i22, i22) == RationalFunction::v_power(2));
    CHECK(gen.kappa_inv(1) * gen.kappa(1) ==
          ExactOperator<QuantumRing>::identity(basis.dimension()));

    // The commutator closes onto the Cartan difference quotient.
    auto vdiff = RationalFunction::v_power(1) - RationalFunction::v_power(-1);
    auto rhs = (gen.kappa(1) * gen.kappa_inv(2) - gen.kappa_inv(1) * gen.kappa(2))
                   .scaled(vdiff.inverse());
    CHECK(E1 * F1 - F1 * E1 == rhs);
}

TEST_CASE("quantum generators scale consistently with size", "[tensorrep]") {
    auto gen = build_quantum_generators(3, 2);
    CHECK((gen.convention == "suffix" || gen.convention == "prefix"));
    REQUIRE(gen.e.size() == 2);
    REQUIRE(gen.k.size() == 3);

    // Distinct simple pairs commute when their indices are distant; here
    // indices 1, 2 are adjacent, so check the Cartan action instead.
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 2; ++j) {
            int pairing = eps_alpha_pairing(i, j);
            CHECK(gen.kappa(i) * gen.raise(j) ==
                  (gen.raise(j) * gen.kappa(i)).scaled(RationalFunction::v_power(pairing)));
        }

    // At v = 1 the raising matrices agree entrywise with the classical ones.
    auto cgen = build_classical_generators(3, 2);
    for (int i = 1; i <= 2; ++i) {
        const auto& q = gen.raise(i);
        const auto& c = cgen.raise(i);
        for (int col = 0; col < gen.basis.dimension(); ++col)
            for (const auto& [row, val] : q.column(col)) {
                auto at_one = val.evaluate_at_one();
                REQUIRE(at_one.has_value());
                CHECK(*at_one == c.entry(row, col));
            }
    }
}
