#include <catch2/catch_amalgamated.hpp>

#include "schur/rootdata.hpp"

using namespace schur;

TEST_CASE("roots store written index pairs", "[rootdata]") {
    Root a(1, 3);
    CHECK(a.is_positive());
    CHECK(a.negated() == Root(3, 1));
    CHECK(Root(3, 1).positive_part() == a);
    CHECK(a.positive_part() == a);
    CHECK(a.to_string() == "(1,3)");
    CHECK_THROWS_AS(Root(2, 2), std::invalid_argument);
}

TEST_CASE("positive roots come out in box order", "[rootdata]") {
    auto r3 = positive_roots(3);
    REQUIRE(r3.size() == 3);
    CHECK(r3[0] == Root(1, 2));
    CHECK(r3[1] == Root(1, 3));
    CHECK(r3[2] == Root(2, 3));
    CHECK(positive_roots(2).size() == 1);
    CHECK(positive_roots(4).size() == 6);

    // The box comparison sorts by second index, then first.
    CHECK(box_greater(Root(1, 2), Root(1, 3)));
    CHECK(box_greater(Root(1, 2), Root(2, 3)));
    CHECK(box_greater(Root(1, 3), Root(2, 3)));
    CHECK_FALSE(box_greater(Root(2, 3), Root(1, 3)));
    CHECK(box_compare(Root(1, 2), Root(1, 2)) == 0);
    CHECK(box_compare(Root(2, 3), Root(1, 2)) == -1);

    for (std::size_t i = 0; i + 1 < r3.size(); ++i) CHECK(box_greater(r3[i], r3[i + 1]));
}

TEST_CASE("root orders validate their sequence", "[rootdata]") {
    auto box = RootOrder::box(3);
    REQUIRE(box.size() == 3);
    CHECK(box.position(Root(1, 2)) == 0);
    CHECK(box.position(Root(2, 3)) == 2);

    auto rev = RootOrder::reverse_box(3);
    CHECK(rev.sequence().front() == Root(2, 3));
    CHECK(rev.sequence().back() == Root(1, 2));
    CHECK(rev.position(Root(1, 2)) == 2);
    CHECK_FALSE(box == rev);

    // A custom order must be a permutation of the positive roots.
    std::vector<Root> perm{Root(2, 3), Root(1, 2), Root(1, 3)};
    CHECK_NOTHROW(RootOrder(3, perm));
    std::vector<Root> bad{Root(1, 2), Root(1, 3), Root(1, 3)};
    CHECK_THROWS_AS(RootOrder(3, bad), std::invalid_argument);
    std::vector<Root> negative{Root(1, 2), Root(1, 3), Root(3, 2)};
    CHECK_THROWS_AS(RootOrder(3, negative), std::invalid_argument);
    CHECK_THROWS_AS(box.position(Root(1, 4)), std::invalid_argument);
}

TEST_CASE("compositions enumerate in descending lexicographic order", "[rootdata]") {
    auto c22 = enumerate_compositions(2, 2);
    REQUIRE(c22.size() == 3);
    CHECK(c22[0] == Composition{2, 0});
    CHECK(c22[1] == Composition{1, 1});
    CHECK(c22[2] == Composition{0, 2});

    auto c32 = enumerate_compositions(3, 2);
    REQUIRE(c32.size() == 6);
    CHECK(c32.front() == Composition{2, 0, 0});
    CHECK(c32[1] == Composition{1, 1, 0});
    CHECK(c32.back() == Composition{0, 0, 2});
    for (const auto& lam : c32) CHECK(composition_sum(lam) == 2);
    for (std::size_t i = 0; i + 1 < c32.size(); ++i) CHECK(c32[i] > c32[i + 1]);

    CHECK(enumerate_compositions(3, 3).size() == 10);
    CHECK(composition_to_string(Composition{1, 0, 2}) == "(1,0,2)");
}

TEST_CASE("weight shifts stay inside the composition set or vanish", "[rootdata]") {
    Composition lam{1, 1, 0};
    auto up = shift_composition(lam, Root(1, 2));
    REQUIRE(up.has_value());
    CHECK(*up == Composition{2, 0, 0});

    auto down = shift_composition(lam, Root(1, 2), -1);
    REQUIRE(down.has_value());
    CHECK(*down == Composition{0, 2, 0});

    CHECK_FALSE(shift_composition(Composition{2, 0}, Root(1, 2)).has_value());
    CHECK_FALSE(shift_composition(Composition{0, 2}, Root(1, 2), -1).has_value());

    auto two = shift_composition(Composition{0, 2}, Root(1, 2), 2);
    REQUIRE(two.has_value());
    CHECK(*two == Composition{2, 0});
}

TEST_CASE("componentwise dominance and content sums", "[rootdata]") {
    CHECK(componentwise_leq({0, 1}, {1, 1}));
    CHECK(componentwise_leq({1, 1}, {1, 1}));
    CHECK_FALSE(componentwise_leq({2, 0}, {1, 1}));
    CHECK_THROWS_AS(componentwise_leq({1}, {1, 1}), std::invalid_argument);
    CHECK(add_content({1, 0, 2}, {0, 3, 1}) == ContentVector{1, 3, 3});
}

TEST_CASE("coordinate pairing against simple roots", "[rootdata]") {
    // (eps_i, alpha_j) with alpha_j supported on coordinates j, j+1.
    CHECK(eps_alpha_pairing(1, 1) == 1);
    CHECK(eps_alpha_pairing(2, 1) == -1);
    CHECK(eps_alpha_pairing(3, 1) == 0);
    CHECK(eps_alpha_pairing(2, 2) == 1);
    CHECK(eps_alpha_pairing(1, 2) == 0);
    CHECK(eps_alpha_pairing(3, 2) == -1);
}
