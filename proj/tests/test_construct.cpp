#include <doctest.h>

#include <algorithm>
#include <vector>

#include "safenum/construct.hpp"
#include "safenum/error.hpp"
#include "safenum/safe_number.hpp"
#include "safenum/safety.hpp"

using namespace safenum;

TEST_SUITE_BEGIN("construct");

TEST_CASE("recipe names are stable") {
    CHECK(recipe_name(Recipe::trivial_m1) == "trivial-m1");
    CHECK(recipe_name(Recipe::row_m2) == "row-m2");
    CHECK(recipe_name(Recipe::two_block_plus_one) == "two-block-plus-one");
    CHECK(recipe_name(Recipe::two_block_minus_nu) == "two-block-minus-nu");
    CHECK(recipe_name(Recipe::half_cut) == "half-cut");
}

TEST_CASE("the 3x3 minimum witness is the corner cross") {
    Construction c = construct_min(3, 3);
    CHECK(c.recipe == Recipe::two_block_plus_one);
    CHECK(c.size() == 5);
    ProductGraph p(3, 3);
    CHECK(c.set == p.set_of({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}}));

    // Independent cross-check of the value: the L-shaped witness is another
    // connected safe set of the same size.
    VertexSet ell = p.set_of({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}});
    CHECK(verify_safe_set(p.graph(), ell).is_connected_safe);
    CHECK(ell.size() == c.size());
}

TEST_CASE("single-row products take the first half of the row") {
    Construction c = construct_min(1, 5);
    CHECK(c.recipe == Recipe::trivial_m1);
    CHECK(c.size() == 3);
    CHECK(c.set.members() == std::vector<int>{0, 1, 2});
    CHECK(construct_min(1, 1).set.members() == std::vector<int>{0});
    CHECK(construct_min(1, 4).set.members() == std::vector<int>{0, 1});
}

TEST_CASE("two-row products take one full row") {
    Construction c = construct_min(2, 5);
    CHECK(c.recipe == Recipe::row_m2);
    CHECK(c.size() == 5);
    CHECK(c.set.members() == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("the 3x4 minimum witness spends its deficit on one corner cell") {
    Construction c = construct_min(3, 4);
    CHECK(c.recipe == Recipe::two_block_minus_nu);
    CHECK(c.size() == 6);
    ProductGraph p(3, 4);
    CHECK(c.set == p.set_of({{1, 1}, {1, 4}, {2, 4}, {3, 1}, {3, 2}, {3, 3}}));
    SafetyReport rep = verify_safe_set(p.graph(), c.set);
    REQUIRE(rep.components_of_rest.size() == 2);
    CHECK(rep.components_of_rest[0].size() == 5);
    CHECK(rep.components_of_rest[1].size() == 1);
}

TEST_CASE("the 5x5 minimum witness is the frame plus one full column sliver") {
    Construction c = construct_min(5, 5);
    CHECK(c.recipe == Recipe::two_block_minus_nu);
    CHECK(c.size() == 12);
    ProductGraph p(5, 5);
    CHECK(c.set == p.set_of({{1, 1}, {2, 1}, {3, 1}, {4, 1},      // sliver: first column of block 1
                             {1, 5}, {2, 5}, {3, 5}, {4, 5},      // right frame
                             {5, 1}, {5, 2}, {5, 3}, {5, 4}}));   // bottom frame
}

TEST_CASE("minimum constructions verify and hit the computed minimum across a sweep") {
    for (int m = 1; m <= 14; ++m)
        for (int n = m; n <= 14; ++n) {
            Construction c = construct_min(m, n);
            CHECK(c.size() == safe_number(m, n));
            ProductGraph p(m, n);
            CHECK(verify_safe_set(p.graph(), c.set).is_connected_safe);
        }
}

TEST_CASE("construct_min validates its domain") {
    CHECK_THROWS_AS(construct_min(0, 1), invalid_input_error);
    CHECK_THROWS_AS(construct_min(3, 2), invalid_input_error);
}

TEST_CASE("the 3x4 half cut removes a near-half block and an opposite corner") {
    Construction c = construct_half_cut(3, 4);
    CHECK(c.recipe == Recipe::half_cut);
    CHECK(c.size() == 6);
    ProductGraph p(3, 4);
    CHECK(c.set == p.set_of({{1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {3, 1}}));
    SafetyReport rep = verify_safe_set(p.graph(), c.set);
    CHECK(rep.is_connected_safe);
    REQUIRE(rep.components_of_rest.size() == 2);
    CHECK(rep.components_of_rest[0].size() == 1);  // the corner (1,1)
    CHECK(rep.components_of_rest[1].size() == 5);
}

TEST_CASE("the 4x4 half cut has size 8 and leaves components of sizes 1 and 7") {
    Construction c = construct_half_cut(4, 4);
    CHECK(c.size() == 8);
    ProductGraph p(4, 4);
    CHECK(c.set == p.set_of({{1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {4, 1}}));
    SafetyReport rep = verify_safe_set(p.graph(), c.set);
    CHECK(rep.is_connected_safe);
    REQUIRE(rep.components_of_rest.size() == 2);
    CHECK(rep.components_of_rest[0].size() == 1);
    CHECK(rep.components_of_rest[1].size() == 7);
}

TEST_CASE("half cuts verify, cut, and split as 1 plus floor((mn-1)/2) across a sweep") {
    for (int m = 3; m <= 14; ++m)
        for (int n = m; n <= 14; ++n) {
            if (m == 3 && n == 3) continue;
            Construction c = construct_half_cut(m, n);
            const long long total = 1ll * m * n;
            CHECK(c.size() == (total - 1 + 1) / 2);  // ceil((mn-1)/2)
            ProductGraph p(m, n);
            SafetyReport rep = verify_safe_set(p.graph(), c.set);
            CHECK(rep.is_connected_safe);
            REQUIRE(rep.components_of_rest.size() == 2);  // a vertex cut with two parts
            std::vector<long long> sizes{rep.components_of_rest[0].size(),
                                         rep.components_of_rest[1].size()};
            std::sort(sizes.begin(), sizes.end());
            CHECK(sizes == std::vector<long long>{1, (total - 1) / 2});
        }
}

TEST_CASE("the half cut refuses the 3x3 grid and anything narrower than 3") {
    CHECK_THROWS_AS(construct_half_cut(3, 3), unsupported_input_error);
    CHECK_THROWS_AS(construct_half_cut(2, 5), unsupported_input_error);
    CHECK_THROWS_AS(construct_half_cut(4, 3), unsupported_input_error);
}

TEST_SUITE_END();
