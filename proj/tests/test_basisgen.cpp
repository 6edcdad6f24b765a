#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "schur/basis.hpp"

using namespace schur;

namespace {

std::vector<std::string> piece_strings(const BasisFamily& fam, const Composition& weight) {
    std::vector<std::string> out;
    for (const auto& el : fam.elements)
        if (el.weight == weight) out.push_back(element_to_string(fam, el));
    return out;
}

}  // namespace

TEST_CASE("algebra dimension counts compositions of d into n^2 parts", "[basis]") {
    CHECK(expected_dimension(2, 2) == 10);
    CHECK(expected_dimension(2, 3) == 20);
    CHECK(expected_dimension(3, 2) == 45);
    CHECK(expected_dimension(3, 3) == 165);
    CHECK(expected_dimension(4, 2) == 136);
}

TEST_CASE("the smallest sorted family lists its ten elements in order", "[basis]") {
    auto fam = enumerate_basis(2, 2, Side::Plus, Placement::Right);
    REQUIRE(fam.elements.size() == 10);

    CHECK(piece_strings(fam, {2, 0}) ==
          std::vector<std::string>{"1[2,0]", "F(1,2) 1[2,0]", "F(1,2)^(2) 1[2,0]"});
    CHECK(piece_strings(fam, {1, 1}) ==
          std::vector<std::string>{"1[1,1]", "E(1,2) 1[1,1]", "F(1,2) 1[1,1]",
                                   "E(1,2) F(1,2) 1[1,1]"});
    CHECK(piece_strings(fam, {0, 2}) ==
          std::vector<std::string>{"1[0,2]", "E(1,2) 1[0,2]", "E(1,2)^(2) 1[0,2]"});

    auto pieces = fam.pieces();
    REQUIRE(pieces.size() == 3);
    CHECK(pieces[0].second.second - pieces[0].second.first == 3);
    CHECK(pieces[1].second.second - pieces[1].second.first == 4);
    CHECK(pieces[2].second.second - pieces[2].second.first == 3);
}

TEST_CASE("piece sizes depend only on the weight orbit", "[basis]") {
    auto fam = enumerate_basis(3, 3, Side::Plus, Placement::Right);
    REQUIRE(fam.elements.size() == 165);
    auto pieces = fam.pieces();
    REQUIRE(pieces.size() == 10);

    std::vector<std::size_t> sizes;
    for (const auto& p : pieces) sizes.push_back(p.second.second - p.second.first);
    CHECK(sizes == std::vector<std::size_t>{10, 18, 18, 18, 27, 18, 10, 18, 18, 10});
    // Three weights of each sorted shape (3,0,0) and one of (1,1,1):
    // 3*10 + 6*18 + 27 = 165.
    std::size_t total = 0;
    for (auto s : sizes) total += s;
    CHECK(total == 165);
}

TEST_CASE("every side and placement yields a family of full size", "[basis]") {
    for (Side side : {Side::Plus, Side::Minus})
        for (Placement placement : {Placement::Left, Placement::Middle, Placement::Right}) {
            auto fam = enumerate_basis(2, 2, side, placement);
            INFO(side_name(side) << "/" << placement_name(placement));
            CHECK(fam.elements.size() == 10);
        }
    CHECK(enumerate_basis(3, 2).elements.size() == 45);
    CHECK(enumerate_basis(2, 3).elements.size() == 20);
}

TEST_CASE("block order and idempotent position follow the family flavor", "[basis]") {
    auto pick = [](const BasisFamily& fam, const Composition& weight) -> const BasisElement& {
        for (const auto& el : fam.elements)
            if (el.degree() == 2 && el.raising_degree() == 1 && el.weight == weight) return el;
        throw std::logic_error("element not found");
    };
    auto plus_left = enumerate_basis(2, 2, Side::Plus, Placement::Left);
    CHECK(element_to_string(plus_left, pick(plus_left, {1, 1})) == "1[1,1] E(1,2) F(1,2)");
    // Middle placement charges both blocks to the larger index, so the mixed
    // degree-2 element lives over (0,2) rather than (1,1).
    auto plus_mid = enumerate_basis(2, 2, Side::Plus, Placement::Middle);
    CHECK(element_to_string(plus_mid, pick(plus_mid, {0, 2})) == "E(1,2) 1[0,2] F(1,2)");
    auto minus_right = enumerate_basis(2, 2, Side::Minus, Placement::Right);
    CHECK(element_to_string(minus_right, pick(minus_right, {1, 1})) == "F(1,2) E(1,2) 1[1,1]");
}

TEMPLATE_TEST_CASE("sorted families realize bases of the full operator algebra",
                   "[basis]", ClassicalRing, QuantumRing) {
    auto ctx = build_context<TestType>(2, 2);
    for (Placement placement : {Placement::Left, Placement::Middle, Placement::Right}) {
        auto real = realize_basis(ctx, enumerate_basis(2, 2, Side::Plus, placement));
        auto chk = verify_basis(real);
        INFO(placement_name(placement));
        CHECK(chk.count == 10);
        CHECK(chk.rank == 10);
        CHECK(chk.pass);
    }
    auto minus = realize_basis(ctx, enumerate_basis(2, 2, Side::Minus, Placement::Middle));
    CHECK(verify_basis(minus).pass);

    auto ctx32 = build_context<TestType>(3, 2);
    auto real32 = realize_basis(ctx32, enumerate_basis(3, 2, Side::Plus, Placement::Right));
    auto chk32 = verify_basis(real32);
    CHECK(chk32.count == 45);
    CHECK(chk32.rank == 45);
    CHECK(chk32.pass);
}

TEST_CASE("independent operators get exact integral coordinates", "[basis]") {
    auto ctx = build_quantum_context(2, 2);
    auto real = realize_basis(ctx, enumerate_basis(2, 2, Side::Plus, Placement::Right));

    auto op = ctx.evaluate(parse_monomial("F(1,2) E(1,2)"));
    auto cv = express_in_basis(real, op);
    REQUIRE(cv.has_value());
    CHECK(cv->integral);
    CHECK_FALSE(cv->coords.empty());

    // Reassemble the combination and compare against the original operator.
    ExactOperator<QuantumRing> rebuilt(ctx.dimension());
    for (const auto& [idx, c] : cv->coords) rebuilt += real.ops[idx].scaled(c);
    CHECK(rebuilt == op);

    // A target outside the algebra has no coordinates: the algebra at d=2
    // never moves a word by an odd total amount, so a rank-one operator
    // sending v11 to v12 cannot lie in the span.
    ExactOperator<QuantumRing> outside(ctx.dimension());
    outside.set_entry(ctx.basis().index({1, 2}), ctx.basis().index({1, 1}),
                      QuantumRing::one());
    CHECK_FALSE(express_in_basis(real, outside).has_value());
}

TEST_CASE("triple products with a Cartan block map onto the sorted family", "[basis]") {
    auto box2 = RootOrder::box(2);
    auto rep = card_bijection(2, 2, 1, box2, box2);
    CHECK(rep.count == 10);
    CHECK(rep.expected == 10);
    CHECK(rep.forward_in_basis);
    CHECK(rep.injective);
    CHECK(rep.roundtrip);
    CHECK(rep.pass);

    auto box3 = RootOrder::box(3);
    for (int i0 = 1; i0 <= 3; ++i0) {
        auto r = card_bijection(3, 2, i0, box3, box3);
        INFO("i0=" << i0);
        CHECK(r.count == 45);
        CHECK(r.pass);
    }
    CHECK_THROWS_AS(card_bijection(2, 2, 3, box2, box2), std::invalid_argument);
}
