#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "prym/derivation.hpp"

using namespace prym;

TEST_CASE("expected F-curve counts at the frozen spots") {
    CHECK(expected_f_count(5, 2, FCurveVariant::delta_i, Parity::even) == 112);
    CHECK(expected_f_count(5, 2, FCurveVariant::delta_g_minus_i, Parity::even) == 144);
    CHECK(expected_f_count(5, 1, FCurveVariant::delta_i, Parity::even) == 0);
    CHECK(expected_f_count(5, 2, FCurveVariant::delta_i, Parity::odd) == 224);
    CHECK(expected_f_count(5, 2, FCurveVariant::delta_mixed, Parity::even) == 176);
    CHECK_THROWS_AS(expected_f_count(5, 3, FCurveVariant::delta_i, Parity::even),
                    std::invalid_argument);
    CHECK_THROWS_AS(expected_f_count(2, 1, FCurveVariant::delta_i, Parity::even),
                    std::invalid_argument);
}

TEST_CASE("each parity's F-curve counts split the total") {
    for (int g = 3; g <= 8; ++g)
        for (int i = 1; i <= g / 2; ++i)
            for (FCurveVariant v : {FCurveVariant::delta_i, FCurveVariant::delta_g_minus_i,
                                    FCurveVariant::delta_mixed}) {
                const Rational total = expected_f_count(g, i, v, Parity::even) +
                                       expected_f_count(g, i, v, Parity::odd);
                CHECK(total >= 0);
                // the total is (g-i-1) * count_odd(side) * count_odd(other side)
                // summed over the parity split; spot the delta_i variant:
                if (v == FCurveVariant::delta_i) {
                    const Integer full = (g - i - 1) * count_odd(g - i) * count_odd(i);
                    CHECK(total == Rational(full));
                }
            }
}

TEST_CASE("three-step derivation reproduces the closed form with zero residues") {
    for (int g = 3; g <= 8; ++g) {
        const DerivationReport r = derive_classes(g);
        CHECK(r.genus == g);
        CHECK(r.matches_closed_form);
        CHECK(r.residues_zero());
        CHECK(r.even_class == theorem_a_class(g, Parity::even));
        CHECK(r.odd_class == theorem_a_class(g, Parity::odd));
        CHECK(r.assumptions.size() == 3);
        for (const EquationRecord& e : r.equations) {
            CHECK(e.residue() == 0);
            CHECK((e.step >= 1 && e.step <= 3));
        }
    }
}

TEST_CASE("the derivation records the consumed and implied equations") {
    const DerivationReport r = derive_classes(5);
    // 1 lambda + 12 F-curve (2 parities x 3 slots x 2 columns) + 6 nodal-pencil
    CHECK(r.equations.size() == 19);
    auto has = [&](const std::string& name) {
        return std::any_of(r.equations.begin(), r.equations.end(),
                           [&](const EquationRecord& e) { return e.name == name; });
    };
    CHECK(has("lambda pushforward, even degree"));
    CHECK(has("F(i=2) delta_2 even"));
    CHECK(has("F(i=2) delta_3 odd"));
    CHECK(has("F(i=1) delta_{1:4} odd"));
    CHECK(has("Wirtinger lift, odd"));
    CHECK(has("Wirtinger lift, even"));
    CHECK(has("non-admissible lift, odd"));
    CHECK(has("non-admissible lift, even"));
    CHECK(has("delta_0 pushforward, odd degree"));
    CHECK(has("delta_0 pushforward, even degree"));

    // even genus: the folded slot gets a second-labeling equation instead of
    // a separate odd-side one
    const DerivationReport r4 = derive_classes(4);
    CHECK(std::any_of(r4.equations.begin(), r4.equations.end(), [](const EquationRecord& e) {
        return e.name == "F(i=2) delta_2 even (second labeling)";
    }));
}

TEST_CASE("wirtinger equation right-hand side is the nodal-pencil degree") {
    for (int g = 3; g <= 10; ++g) {
        const DerivationReport r = derive_classes(g);
        const auto it = std::find_if(r.equations.begin(), r.equations.end(),
                                     [](const EquationRecord& e) {
                                         return e.name == "Wirtinger lift, odd";
                                     });
        REQUIRE(it != r.equations.end());
        const Integer expected = ipow2(g - 3) * ((g - 3) * ipow2(g - 2) + 1);
        CHECK(it->rhs == Rational(expected));
    }
}

TEST_CASE("range verification") {
    const RangeSummary s = verify_range(3, 10);
    CHECK(s.g_min == 3);
    CHECK(s.g_max == 10);
    CHECK(s.per_genus.size() == 8);
    CHECK(s.all_pass);
    for (const GenusVerdict& v : s.per_genus) {
        CHECK(v.match);
        CHECK(v.residues_zero);
    }
    CHECK_THROWS_AS(verify_range(2, 10), std::invalid_argument);
    CHECK_THROWS_AS(verify_range(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(derive_classes(2), std::invalid_argument);
}

TEST_CASE("derivation report serializes") {
    const DerivationReport r = derive_classes(4);
    const nlohmann::json j = to_json(r);
    CHECK(j["genus"] == 4);
    CHECK(j["matches_closed_form"] == true);
    CHECK(j["residues_zero"] == true);
    CHECK(j["equations"].size() == r.equations.size());
    CHECK(j["even"]["parity"] == "even");
    for (const auto& e : j["equations"]) CHECK(e["residue"] == "0");

    const nlohmann::json js = to_json(verify_range(3, 5));
    CHECK(js["all_pass"] == true);
    CHECK(js["per_genus"].size() == 3);
}
