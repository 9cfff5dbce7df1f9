#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "prym/picard.hpp"

using namespace prym;

namespace {

// label text -> stored table value, for readable whole-class comparisons
std::map<std::string, std::string> table(const RBarClass& c) {
    std::map<std::string, std::string> out;
    for (const RBasisLabel& l : rbar_basis(c.genus)) out[l.text(c.genus)] = to_string(c.coeff(l));
    return out;
}

using Table = std::map<std::string, std::string>;

}  // namespace

TEST_CASE("source-locus class at small genus") {
    const MBarClass t3 = teixidor_class(3);
    CHECK(t3.lambda == 9);
    CHECK(t3.delta0 == -1);
    CHECK(t3.delta_i(1) == -3);

    const MBarClass t5 = teixidor_class(5);
    CHECK(t5.lambda == 132);
    CHECK(t5.delta0 == -16);
    CHECK(t5.delta_i(1) == -60);
    CHECK(t5.delta_i(2) == -84);
}

TEST_CASE("closed-form tables, genus 3 (fractional boundary entries)") {
    CHECK(table(theorem_a_class(3, Parity::even)) ==
          Table{{"lambda", "5"},
                {"delta_0'", "1/2"},
                {"delta_0''", "0"},
                {"delta_0^ram", "5/4"},
                {"delta_1", "0"},
                {"delta_2", "1"},
                {"delta_{1:2}", "2"}});
    CHECK(table(theorem_a_class(3, Parity::odd)) ==
          Table{{"lambda", "4"},
                {"delta_0'", "1/2"},
                {"delta_0''", "1"},
                {"delta_0^ram", "3/4"},
                {"delta_1", "3"},
                {"delta_2", "2"},
                {"delta_{1:2}", "1"}});
}

TEST_CASE("closed-form tables, genus 4 (even genus: folded side slot)") {
    CHECK(table(theorem_a_class(4, Parity::even)) ==
          Table{{"lambda", "18"},
                {"delta_0'", "2"},
                {"delta_0''", "0"},
                {"delta_0^ram", "9/2"},
                {"delta_1", "0"},
                {"delta_2", "6"},
                {"delta_3", "6"},
                {"delta_{1:3}", "8"},
                {"delta_{2:2}", "10"}});
    CHECK(table(theorem_a_class(4, Parity::odd)) ==
          Table{{"lambda", "16"},
                {"delta_0'", "2"},
                {"delta_0''", "4"},
                {"delta_0^ram", "7/2"},
                {"delta_1", "14"},
                {"delta_2", "12"},
                {"delta_3", "8"},
                {"delta_{1:3}", "6"},
                {"delta_{2:2}", "8"}});
}

TEST_CASE("closed-form tables, genus 5") {
    CHECK(table(theorem_a_class(5, Parity::even)) ==
          Table{{"lambda", "68"},
                {"delta_0'", "8"},
                {"delta_0''", "0"},
                {"delta_0^ram", "17"},
                {"delta_1", "0"},
                {"delta_2", "28"},
                {"delta_3", "36"},
                {"delta_4", "28"},
                {"delta_{1:4}", "32"},
                {"delta_{2:3}", "44"}});
    CHECK(table(theorem_a_class(5, Parity::odd)) ==
          Table{{"lambda", "64"},
                {"delta_0'", "8"},
                {"delta_0''", "16"},
                {"delta_0^ram", "15"},
                {"delta_1", "60"},
                {"delta_2", "56"},
                {"delta_3", "48"},
                {"delta_4", "32"},
                {"delta_{1:4}", "28"},
                {"delta_{2:3}", "40"}});
}

TEST_CASE("even and odd tables sum to the pulled-back source class") {
    for (int g = 3; g <= 9; ++g) {
        const RBarClass even = theorem_a_class(g, Parity::even);
        const RBarClass odd = theorem_a_class(g, Parity::odd);
        const RBarClass pulled = pullback(teixidor_class(g));
        for (const RBasisLabel& l : rbar_basis(g))
            CHECK(even.coeff(l) + odd.coeff(l) == pulled.coeff(l));
    }
}

TEST_CASE("pullback splits boundary classes with the right multiplicities") {
    MBarClass d0(4);
    d0.delta0 = -1;  // a pure boundary class
    const RBarClass p = pullback(d0);
    CHECK(p.a == 0);
    CHECK(p.b0_prime == 1);
    CHECK(p.b0_double_prime == 1);
    CHECK(p.b0_ram == 2);

    MBarClass d2(4);
    d2.delta_i(2) = -1;  // the folded column: each slot hit once
    const RBarClass q = pullback(d2);
    CHECK(q.side(2) == 1);
    CHECK(q.mixed(2) == 1);
    CHECK(q.side(1) == 0);
    CHECK(q.side(3) == 0);
    CHECK(q.mixed(1) == 0);
}

TEST_CASE("pushforward inverts pullback up to the covering degree") {
    for (int g : {3, 4, 5, 6, 10}) {
        const Integer degree = ipow2(2 * g) - 1;
        MBarClass probe(g);
        probe.lambda = 3;
        probe.delta0 = Rational(-7, 2);
        for (int i = 1; i <= g / 2; ++i) probe.delta_i(i) = i;
        const MBarClass back = pushforward(pullback(probe));
        CHECK(back.lambda == Rational(degree) * probe.lambda);
        CHECK(back.delta0 == Rational(degree) * probe.delta0);
        for (int i = 1; i <= g / 2; ++i)
            CHECK(back.delta_i(i) == Rational(degree) * probe.delta_i(i));
    }
}

TEST_CASE("basis labels and display order") {
    const std::vector<RBasisLabel> basis = rbar_basis(5);
    REQUIRE(basis.size() == 10);
    CHECK(basis[0].text(5) == "lambda");
    CHECK(basis[1].text(5) == "delta_0'");
    CHECK(basis[2].text(5) == "delta_0''");
    CHECK(basis[3].text(5) == "delta_0^ram");
    CHECK(basis[4].text(5) == "delta_1");
    CHECK(basis[5].text(5) == "delta_4");
    CHECK(basis[6].text(5) == "delta_{1:4}");
    CHECK(basis[7].text(5) == "delta_2");
    CHECK(basis[8].text(5) == "delta_3");
    CHECK(basis[9].text(5) == "delta_{2:3}");
    CHECK(basis[3].latex(5) == "\\delta_0^{\\mathrm{ram}}");
    CHECK(basis[6].latex(5) == "\\delta_{1:4}");

    CHECK(rbar_basis(4).size() == 9);  // delta_2 appears once
}

TEST_CASE("test-curve rows carry the documented entries") {
    const TestCurveRow f = f_curve_row(5, 2, FCurveVariant::delta_i);
    CHECK(f.lambda == 0);
    CHECK(f.side_k(2) == -4);  // -2(g-i-1)
    CHECK(f.side_k(1) == 0);
    CHECK(f.mixed_i(2) == 0);

    const TestCurveRow fm = f_curve_row(5, 2, FCurveVariant::delta_mixed);
    CHECK(fm.mixed_i(2) == -4);

    const TestCurveRow w = g_curve_row(5, GCurveVariant::wirtinger);
    CHECK(w.d0_double_prime == -8);  // 2 - 2g
    CHECK(w.side_k(1) == 1);
    CHECK(w.d0_prime == 0);

    const TestCurveRow n = g_curve_row(5, GCurveVariant::nonadmissible);
    CHECK(n.d0_prime == -4080);  // 2(2-2g)(2^{2g-2}-1)
    CHECK(n.side_k(4) == 255);
    CHECK(n.mixed_i(1) == 255);
    CHECK(n.d0_double_prime == 0);
}

TEST_CASE("intersection numbers frozen at genus 5") {
    const RBarClass even = theorem_a_class(5, Parity::even);
    const RBarClass odd = theorem_a_class(5, Parity::odd);
    CHECK(intersect(f_curve_row(5, 2, FCurveVariant::delta_i), even) == 112);
    CHECK(intersect(g_curve_row(5, GCurveVariant::wirtinger), odd) == 68);
    CHECK(intersect(g_curve_row(5, GCurveVariant::wirtinger), even) == 0);
    // the non-admissible lift meets both parities in the same degree
    const Rational balanced = Rational(255) * 68;
    CHECK(intersect(g_curve_row(5, GCurveVariant::nonadmissible), even) == balanced);
    CHECK(intersect(g_curve_row(5, GCurveVariant::nonadmissible), odd) == balanced);
}

TEST_CASE("json serialization round-trips both ledgers") {
    const RBarClass even = theorem_a_class(4, Parity::even);
    const nlohmann::json j = to_json(even);
    CHECK(j["genus"] == 4);
    CHECK(j["parity"] == "even");
    CHECK(j["basis"].size() == rbar_basis(4).size());
    CHECK(rbar_from_json(j) == even);

    RBarClass untagged(3);
    untagged.side(2) = Rational(-5, 3);
    CHECK(rbar_from_json(to_json(untagged)) == untagged);

    const MBarClass t = teixidor_class(6);
    CHECK(mbar_from_json(to_json(t)) == t);
}

TEST_CASE("json deserialization rejects malformed input") {
    const nlohmann::json good = to_json(theorem_a_class(3, Parity::odd));

    nlohmann::json missing = good;
    missing["basis"].erase(0);
    CHECK_THROWS_AS(rbar_from_json(missing), std::invalid_argument);

    nlohmann::json duplicated = good;
    duplicated["basis"].push_back(duplicated["basis"][0]);
    CHECK_THROWS_AS(rbar_from_json(duplicated), std::invalid_argument);

    nlohmann::json bad_parity = good;
    bad_parity["parity"] = "mixed";
    CHECK_THROWS_AS(rbar_from_json(bad_parity), std::invalid_argument);

    nlohmann::json no_genus = good;
    no_genus.erase("genus");
    CHECK_THROWS_AS(rbar_from_json(no_genus), std::invalid_argument);

    nlohmann::json zero_den = good;
    zero_den["basis"][0]["coefficient"] = "1/0";
    CHECK_THROWS_AS(rbar_from_json(zero_den), std::invalid_argument);
}

TEST_CASE("construction and accessor validation") {
    CHECK_THROWS_AS(MBarClass(2), std::invalid_argument);
    CHECK_THROWS_AS(RBarClass(1), std::invalid_argument);
    CHECK_THROWS_AS(teixidor_class(2), std::invalid_argument);
    CHECK_THROWS_AS(theorem_a_class(0, Parity::even), std::invalid_argument);
    CHECK_THROWS_AS(f_curve_row(5, 3, FCurveVariant::delta_i), std::invalid_argument);
    CHECK_THROWS_AS(f_curve_row(5, 0, FCurveVariant::delta_i), std::invalid_argument);

    RBarClass c(5);
    CHECK_THROWS_AS(c.side(0), std::invalid_argument);
    CHECK_THROWS_AS(c.side(5), std::invalid_argument);
    CHECK_THROWS_AS(c.mixed(3), std::invalid_argument);
    MBarClass m(5);
    CHECK_THROWS_AS(m.delta_i(3), std::invalid_argument);

    // rows and classes of different genus cannot be paired
    CHECK_THROWS_AS(intersect(g_curve_row(4, GCurveVariant::wirtinger),
                              theorem_a_class(5, Parity::odd)),
                    std::invalid_argument);
}
