#include <catch2/catch_amalgamated.hpp>

#include "iotacalc/group.hpp"

using namespace iotacalc;

TEST_CASE("negation on the C(n) family") {
    CHECK(to_string(param_negate(parse_params("+,-1,+,-4"))) == "-,1,-,4");
    CHECK(param_negate(StandardParams{}) == StandardParams{});
}

TEST_CASE("simplified sums concatenate in order") {
    CHECK(to_string(simplified_sum_params({{+1, 3}, {+1, 2}})) == "+,-1,+,-3,+,-1,+,-2");
    CHECK(to_string(simplified_sum_params({{+1, 3}, {-1, 2}})) == "+,-1,+,-3,-,1,-,2");
    CHECK(to_string(simplified_sum_params({{+1, 2}, {-1, 2}})) == "()");
    CHECK(to_string(simplified_sum_params({{-1, 2}, {+1, 3}, {-1, 3}, {-1, 4}})) == "-,1,-,4,-,1,-,2");
    CHECK(to_string(simplified_sum_params({})) == "()");
    CHECK_THROWS_AS(simplified_sum_params({{+1, 1}}), std::invalid_argument);
}

TEST_CASE("sum simplification is idempotent") {
    std::vector<std::vector<SignedCnTerm>> cases = {
        {{+1, 3}, {+1, 2}}, {{+1, 3}, {-1, 2}}, {{-1, 4}, {-1, 4}, {+1, 2}}};
    for (auto& terms : cases) {
        auto params = simplified_sum_params(terms);
        // decompose back into blocks of two steps and re-simplify
        std::vector<SignedCnTerm> decomposed;
        for (size_t i = 0; i + 1 < params.steps.size(); i += 2) {
            REQUIRE(std::abs(params.steps[i].b) == 1);
            decomposed.push_back(
                SignedCnTerm{params.steps[i].sign, std::abs(params.steps[i + 1].b)});
        }
        CHECK(simplified_sum_params(decomposed) == params);
    }
}

TEST_CASE("SF membership") {
    CHECK_FALSE(sf_member(parse_params("+,-1,+,-2")));
    CHECK(sf_member(StandardParams{}));
    CHECK(sf_member(parse_params("-,1,-,1")));
    CHECK(sf_member(parse_params("+,-3,-,2,+,-1")));
    CHECK_FALSE(sf_member(parse_params("+,1")));  // sign condition fails
}

TEST_CASE("SF membership is negation-invariant on the C(n) span") {
    for (int n1 = 2; n1 <= 6; ++n1)
        for (int n2 = 2; n2 <= n1; ++n2)
            for (int s1 : {+1, -1})
                for (int s2 : {+1, -1}) {
                    auto p = simplified_sum_params({{s1, n1}, {s2, n2}});
                    CHECK(sf_member(p) == sf_member(param_negate(p)));
                }
    CHECK(sf_member(param_negate(StandardParams{})));
}

TEST_CASE("small independence report") {
    auto rep = independence_report({2}, 1);
    REQUIRE(rep.combos.size() == 2);
    CHECK(rep.all_outside_sf);
    CHECK(rep.cross_checks_agree);
    REQUIRE(rep.cross_checks.size() == 2);
    for (auto& cc : rep.cross_checks) CHECK(cc.searched);

    auto empty = independence_report({}, 1);
    CHECK(empty.all_outside_sf);
    CHECK(empty.combos.empty());

    CHECK_THROWS_AS(independence_report({2, 2}, 1), std::invalid_argument);
    CHECK_THROWS_AS(independence_report({2}, 0), std::invalid_argument);
}

TEST_CASE("oracle equivalence for single terms") {
    for (int n : {2, 3}) {
        for (int sign : {+1, -1}) {
            std::vector<SignedCnTerm> terms = {{sign, n}};
            auto predicted = simplified_sum_params(terms);
            auto tensor = tensor_of_cn_terms(terms);
            auto found = standard_rep_search(tensor, SearchBounds{2, n});
            REQUIRE(found);
            CHECK(*found == predicted);
        }
    }
}
