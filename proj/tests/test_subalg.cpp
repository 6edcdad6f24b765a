#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "schur/basis.hpp"
#include "schur/subalg.hpp"

using namespace schur;

namespace {

/// Corner piece of a family over the all-ones weight: elements whose raising
/// and lowering blocks displace the weight by the same vector.
std::vector<std::string> corner_strings(const BasisFamily& fam) {
    std::vector<std::string> out;
    const int n = fam.n;
    Composition omega(static_cast<std::size_t>(n), 1);
    const auto& seqE = fam.orderE.sequence();
    const auto& seqF = fam.orderF.sequence();
    for (const auto& el : fam.elements) {
        if (el.weight != omega) continue;
        ContentVector shiftA(static_cast<std::size_t>(n), 0), shiftC(shiftA);
        for (std::size_t k = 0; k < seqE.size(); ++k) {
            shiftA[static_cast<std::size_t>(seqE[k].a) - 1] += el.A[k];
            shiftA[static_cast<std::size_t>(seqE[k].b) - 1] -= el.A[k];
        }
        for (std::size_t k = 0; k < seqF.size(); ++k) {
            shiftC[static_cast<std::size_t>(seqF[k].a) - 1] += el.C[k];
            shiftC[static_cast<std::size_t>(seqF[k].b) - 1] -= el.C[k];
        }
        if (shiftA == shiftC) out.push_back(element_to_string(fam, el));
    }
    return out;
}

}  // namespace

TEMPLATE_TEST_CASE("one-sided products above the degree vanish", "[subalg]",
                   ClassicalRing, QuantumRing) {
    for (auto [n, d] : {std::pair{2, 2}, std::pair{3, 2}}) {
        auto ctx = build_context<TestType>(n, d);
        auto rep = borel_vanishing_check(ctx);
        INFO("n=" << n << " d=" << d);
        REQUIRE(rep.checks.size() == 4);
        for (const auto& chk : rep.checks) {
            INFO(chk.name << " " << chk.detail);
            CHECK(chk.pass);
        }
    }
}

TEST_CASE("the vanishing bound is sharp at the degree", "[subalg]") {
    auto ctx = build_classical_context(2, 2);
    CHECK_FALSE(ctx.divided_power(Root(1, 2), 2).is_zero());
    CHECK(ctx.divided_power(Root(1, 2), 3).is_zero());
}

TEMPLATE_TEST_CASE("divided raising products span the raising part", "[subalg]",
                   ClassicalRing, QuantumRing) {
    auto ctx2 = build_context<TestType>(2, 2);
    auto chk2 = borel_plus_basis(ctx2, RootOrder::box(2));
    CHECK(chk2.count == 3);
    CHECK(chk2.rank == 3);
    CHECK(chk2.expected == 3);
    CHECK(chk2.pass);

    auto ctx3 = build_context<TestType>(3, 2);
    auto chk3 = borel_plus_basis(ctx3, RootOrder::box(3));
    CHECK(chk3.count == 10);
    CHECK(chk3.rank == 10);
    CHECK(chk3.pass);

    // Independence does not hinge on the chosen factor order.
    auto rev = borel_plus_basis(ctx3, RootOrder::reverse_box(3));
    CHECK(rev.rank == 10);
    CHECK(rev.pass);
}

TEMPLATE_TEST_CASE("raising products cut by fitting idempotents stay independent",
                   "[subalg]", ClassicalRing, QuantumRing) {
    auto ctx2 = build_context<TestType>(2, 2);
    auto chk2 = borel_idempotent_basis(ctx2, RootOrder::box(2));
    CHECK(chk2.count == 6);
    CHECK(chk2.rank == 6);
    CHECK(chk2.pass);

    auto ctx3 = build_context<TestType>(3, 2);
    auto chk3 = borel_idempotent_basis(ctx3, RootOrder::box(3));
    CHECK(chk3.count == 21);
    CHECK(chk3.rank == 21);
    CHECK(chk3.pass);
}

TEMPLATE_TEST_CASE("the corner algebra at the all-ones weight", "[subalg]",
                   ClassicalRing, QuantumRing) {
    SECTION("two strands") {
        auto ctx = build_context<TestType>(2, 2);
        auto h = hecke_build(ctx);
        REQUIRE(h.t.size() == 1);
        CHECK(h.unit * h.unit == h.unit);

        auto rep = hecke_relation_check(ctx, h);
        for (const auto& chk : rep.checks) {
            INFO(chk.name << " " << chk.detail);
            CHECK(chk.pass);
        }

        auto fam = enumerate_basis(2, 2, Side::Plus, Placement::Right);
        auto corner = hecke_basis_check(ctx, fam);
        CHECK(corner.count == 2);
        CHECK(corner.rank == 2);
        CHECK(corner.expected == 2);
        CHECK(corner.pass);
        CHECK(corner_strings(fam) ==
              std::vector<std::string>{"1[1,1]", "E(1,2) F(1,2) 1[1,1]"});
    }

    SECTION("three strands") {
        auto ctx = build_context<TestType>(3, 3);
        auto h = hecke_build(ctx);
        REQUIRE(h.t.size() == 2);

        auto rep = hecke_relation_check(ctx, h);
        for (const auto& chk : rep.checks) {
            INFO(chk.name << " " << chk.detail);
            CHECK(chk.pass);
        }

        auto fam = enumerate_basis(3, 3, Side::Plus, Placement::Right);
        auto corner = hecke_basis_check(ctx, fam);
        CHECK(corner.count == 6);
        CHECK(corner.rank == 6);
        CHECK(corner.expected == 6);
        CHECK(corner.pass);
        CHECK(corner_strings(fam) ==
              std::vector<std::string>{
                  "1[1,1,1]",
                  "E(1,2) F(1,2) 1[1,1,1]",
                  "E(1,3) F(1,3) 1[1,1,1]",
                  "E(2,3) F(2,3) 1[1,1,1]",
                  "E(1,2) E(2,3) F(1,3) 1[1,1,1]",
                  "E(1,3) F(1,2) F(2,3) 1[1,1,1]",
              });
    }

    SECTION("the corner needs the all-ones weight") {
        auto ctx = build_context<TestType>(3, 2);
        CHECK_THROWS_AS(hecke_build(ctx), std::invalid_argument);
    }
}

TEST_CASE("corner generators satisfy the quadratic relation with quantum two",
          "[subalg]") {
    auto ctx = build_quantum_context(2, 2);
    auto h = hecke_build(ctx);
    const auto& t1 = h.t[0];
    auto two = QuantumRing::v_power(1) + QuantumRing::v_power(-1);
    CHECK(t1 * t1 == t1.scaled(two));
    // The same element halves into an idempotent.
    auto e = t1.scaled(QuantumRing::one() / two);
    CHECK(e * e == e);
}
