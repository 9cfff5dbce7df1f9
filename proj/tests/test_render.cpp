#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "prym/render.hpp"

using namespace prym;

namespace {

std::vector<RBarClass> pair_for(int g) {
    return {theorem_a_class(g, Parity::even), theorem_a_class(g, Parity::odd)};
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("format names round-trip") {
    for (OutputFormat f :
         {OutputFormat::json, OutputFormat::csv, OutputFormat::latex, OutputFormat::plain})
        CHECK(parse_format(format_name(f)) == f);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
    CHECK_THROWS_AS(parse_format(""), std::invalid_argument);
}

TEST_CASE("latex escaping") {
    CHECK(latex_escape("a_b%c") == "a\\_b\\%c");
    CHECK(latex_escape("x^2 & {y}") == "x\\textasciicircum{}2 \\& \\{y\\}");
    CHECK(latex_escape("\\") == "\\textbackslash{}");
    CHECK(latex_escape("plain words") == "plain words");
}

TEST_CASE("json rendering round-trips through the parser") {
    const RBarClass even = theorem_a_class(4, Parity::even);
    const std::string one = render_classes({even}, OutputFormat::json);
    const nlohmann::json j = nlohmann::json::parse(one);
    CHECK(j.is_object());
    CHECK(j["genus"] == 4);
    CHECK(rbar_from_json(j) == even);

    const std::string two = render_classes(pair_for(5), OutputFormat::json);
    const nlohmann::json ja = nlohmann::json::parse(two);
    REQUIRE(ja.is_array());
    REQUIRE(ja.size() == 2);
    CHECK(rbar_from_json(ja[0]) == theorem_a_class(5, Parity::even));
    CHECK(rbar_from_json(ja[1]) == theorem_a_class(5, Parity::odd));
}

TEST_CASE("csv rendering") {
    const std::string csv = render_classes(pair_for(5), OutputFormat::csv);
    CHECK(csv.rfind("label,even,odd\n", 0) == 0);
    CHECK(count_lines(csv) == 11);  // header + ten basis slots at genus 5
    CHECK(csv.find("delta_0^ram,17,15\n") != std::string::npos);
    CHECK(csv.find("delta_{2:3},44,40\n") != std::string::npos);

    // a single untagged class gets a generic column
    RBarClass c(3);
    c.a = Rational(1, 2);
    CHECK(render_classes({c}, OutputFormat::csv).rfind("label,value\n", 0) == 0);
}

TEST_CASE("latex rendering") {
    const std::string tex = render_classes(pair_for(3), OutputFormat::latex);
    CHECK(tex.find("% genus 3: class = a\\lambda - \\sum_x b_x\\delta_x") != std::string::npos);
    CHECK(tex.find("\\begin{array}{rlrl}") != std::string::npos);
    CHECK(tex.find("\\end{array}") != std::string::npos);
    CHECK(tex.find("a &= 5") != std::string::npos);
    CHECK(tex.find("c &= 4") != std::string::npos);
    CHECK(tex.find("b_0^{\\mathrm{ram}} &= \\frac{5}{4}") != std::string::npos);
    CHECK(tex.find("d_0^{\\mathrm{ram}} &= \\frac{3}{4}") != std::string::npos);
    CHECK(tex.find("b_{1:2}") != std::string::npos);
}

TEST_CASE("plain rendering marks non-integral coefficients") {
    const std::string g3 = render_classes(pair_for(3), OutputFormat::plain);
    CHECK(g3.find("genus 3") != std::string::npos);
    CHECK(g3.find("5/4*") != std::string::npos);
    CHECK(g3.find("non-integral coefficient") != std::string::npos);

    // at genus 5 every displayed coefficient is an integer; only the header
    // line (which spells out "a*lambda") may contain an asterisk
    const std::string g5 = render_classes(pair_for(5), OutputFormat::plain);
    CHECK(g5.find('*', g5.find('\n')) == std::string::npos);
    CHECK(g5.find("non-integral") == std::string::npos);
    CHECK(g5.find("even") != std::string::npos);
    CHECK(g5.find("odd") != std::string::npos);
}

TEST_CASE("rendering rejects bad input") {
    CHECK_THROWS_AS(render_classes({}, OutputFormat::plain), std::invalid_argument);
    CHECK_THROWS_AS(
        render_classes({theorem_a_class(3, Parity::even), theorem_a_class(4, Parity::odd)},
                       OutputFormat::plain),
        std::invalid_argument);
}

TEST_CASE("derivation rendering") {
    const DerivationReport r = derive_classes(4);

    const std::string csv = render_derivation(r, OutputFormat::csv);
    CHECK(csv.rfind("step,name,lhs,rhs,residue\n", 0) == 0);
    CHECK(count_lines(csv) == static_cast<int>(r.equations.size()) + 1);
    CHECK(csv.find(",0\n") != std::string::npos);  // zero residues

    const nlohmann::json j = nlohmann::json::parse(render_derivation(r, OutputFormat::json));
    CHECK(j["residues_zero"] == true);
    CHECK(j["matches_closed_form"] == true);

    const std::string plain = render_derivation(r, OutputFormat::plain);
    CHECK(plain.find("three-step derivation, genus 4") != std::string::npos);
    CHECK(plain.find("assumptions:") != std::string::npos);
    CHECK(plain.find("[step 1]") != std::string::npos);
    CHECK(plain.find("matches closed form: yes") != std::string::npos);
    CHECK(plain.find("residues all zero:   yes") != std::string::npos);

    const std::string tex = render_derivation(r, OutputFormat::latex);
    CHECK(tex.find("matches the closed form") != std::string::npos);
    CHECK(tex.find("residues all zero") != std::string::npos);
    CHECK(tex.find("\\begin{array}") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
    for (OutputFormat f :
         {OutputFormat::json, OutputFormat::csv, OutputFormat::latex, OutputFormat::plain})
        CHECK(render_classes(pair_for(6), f) == render_classes(pair_for(6), f));
}
