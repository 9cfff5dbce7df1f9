#include "prym/picard.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace prym {

namespace {

void check_class_genus(int g) {
    // the divisor classes and the boundary taxonomy below need g >= 3
    if (g < 3) throw std::invalid_argument("divisor classes require genus >= 3, got " +
                                           std::to_string(g));
}

void check_same_genus(int a, int b) {
    if (a != b)
        throw std::invalid_argument("genus mismatch: " + std::to_string(a) + " vs " +
                                    std::to_string(b));
}

Rational& index_into(std::vector<Rational>& v, int i, const char* what) {
    if (i < 1 || i > static_cast<int>(v.size()))
        throw std::invalid_argument(std::string(what) + " index " + std::to_string(i) +
                                    " out of range 1.." + std::to_string(v.size()));
    return v[i - 1];
}

}  // namespace

// ---- MBarClass ----------------------------------------------------------

MBarClass::MBarClass(int g) : genus(g), delta(static_cast<std::size_t>(g / 2)) {
    check_class_genus(g);
}

Rational& MBarClass::delta_i(int i) { return index_into(delta, i, "delta"); }
const Rational& MBarClass::delta_i(int i) const {
    return index_into(const_cast<std::vector<Rational>&>(delta), i, "delta");
}

// ---- labels -------------------------------------------------------------

std::string RBasisLabel::text(int genus) const {
    switch (kind) {
        case Kind::lambda: return "lambda";
        case Kind::delta0_prime: return "delta_0'";
        case Kind::delta0_double_prime: return "delta_0''";
        case Kind::delta0_ram: return "delta_0^ram";
        case Kind::delta_side: return "delta_" + std::to_string(index);
        case Kind::delta_mixed:
            return "delta_{" + std::to_string(index) + ":" + std::to_string(genus - index) + "}";
    }
    throw std::logic_error("unreachable label kind");
}

std::string RBasisLabel::latex(int genus) const {
    switch (kind) {
        case Kind::lambda: return "\\lambda";
        case Kind::delta0_prime: return "\\delta_0'";
        case Kind::delta0_double_prime: return "\\delta_0''";
        case Kind::delta0_ram: return "\\delta_0^{\\mathrm{ram}}";
        case Kind::delta_side: return "\\delta_{" + std::to_string(index) + "}";
        case Kind::delta_mixed:
            return "\\delta_{" + std::to_string(index) + ":" + std::to_string(genus - index) + "}";
    }
    throw std::logic_error("unreachable label kind");
}

std::vector<RBasisLabel> rbar_basis(int g) {
    check_class_genus(g);
    using K = RBasisLabel::Kind;
    std::vector<RBasisLabel> out{{K::lambda, 0},
                                 {K::delta0_prime, 0},
                                 {K::delta0_double_prime, 0},
                                 {K::delta0_ram, 0}};
    for (int i = 1; i <= g / 2; ++i) {
        out.push_back({K::delta_side, i});
        if (g - i != i) out.push_back({K::delta_side, g - i});
        out.push_back({K::delta_mixed, i});
    }
    return out;
}

// ---- RBarClass ----------------------------------------------------------

RBarClass::RBarClass(int g)
    : genus(g),
      b_side(static_cast<std::size_t>(g - 1)),
      b_mixed(static_cast<std::size_t>(g / 2)) {
    check_class_genus(g);
}

Rational& RBarClass::side(int k) { return index_into(b_side, k, "delta_side"); }
const Rational& RBarClass::side(int k) const {
    return index_into(const_cast<std::vector<Rational>&>(b_side), k, "delta_side");
}
Rational& RBarClass::mixed(int i) { return index_into(b_mixed, i, "delta_mixed"); }
const Rational& RBarClass::mixed(int i) const {
    return index_into(const_cast<std::vector<Rational>&>(b_mixed), i, "delta_mixed");
}

Rational& RBarClass::coeff(const RBasisLabel& label) {
    using K = RBasisLabel::Kind;
    switch (label.kind) {
        case K::lambda: return a;
        case K::delta0_prime: return b0_prime;
        case K::delta0_double_prime: return b0_double_prime;
        case K::delta0_ram: return b0_ram;
        case K::delta_side: return side(label.index);
        case K::delta_mixed: return mixed(label.index);
    }
    throw std::logic_error("unreachable label kind");
}

const Rational& RBarClass::coeff(const RBasisLabel& label) const {
    return const_cast<RBarClass*>(this)->coeff(label);
}

// ---- TestCurveRow -------------------------------------------------------

TestCurveRow::TestCurveRow(std::string name_, int g)
    : name(std::move(name_)),
      genus(g),
      side(static_cast<std::size_t>(g - 1)),
      mixed(static_cast<std::size_t>(g / 2)) {
    check_class_genus(g);
}

Rational& TestCurveRow::side_k(int k) { return index_into(side, k, "delta_side"); }
const Rational& TestCurveRow::side_k(int k) const {
    return index_into(const_cast<std::vector<Rational>&>(side), k, "delta_side");
}
Rational& TestCurveRow::mixed_i(int i) { return index_into(mixed, i, "delta_mixed"); }
const Rational& TestCurveRow::mixed_i(int i) const {
    return index_into(const_cast<std::vector<Rational>&>(mixed), i, "delta_mixed");
}

// ---- classes and maps ---------------------------------------------------

MBarClass teixidor_class(int g) {
    check_class_genus(g);
    MBarClass c(g);
    const Rational f = pow2(g - 3);
    c.lambda = f * (ipow2(g) + 1);
    c.delta0 = -f * pow2(g - 3);
    for (int i = 1; i <= g / 2; ++i) c.delta_i(i) = -f * (ipow2(g - i) - 1) * (ipow2(i) - 1);
    return c;
}

RBarClass theorem_a_class(int g, Parity p) {
    check_class_genus(g);
    RBarClass c(g);
    c.parity_tag = p;
    const Rational f = pow2(g - 3);
    if (p == Parity::even) {
        c.a = f * (ipow2(g - 1) + 1);
        c.b0_prime = pow2(2 * g - 7);
        c.b0_double_prime = 0;
        c.b0_ram = pow2(g - 5) * (ipow2(g - 1) + 1);
        for (int k = 1; k <= g - 1; ++k) {
            // side k <= g/2 plays the role of i, side k > g/2 that of g-i
            if (k <= g / 2)
                c.side(k) = f * (ipow2(g - k) - 1) * (ipow2(k - 1) - 1);
            else
                c.side(k) = f * (ipow2(k - 1) - 1) * (ipow2(g - k) - 1);
        }
        for (int i = 1; i <= g / 2; ++i)
            c.mixed(i) = f * (ipow2(g - 1) - ipow2(i - 1) - ipow2(g - i - 1) + 1);
    } else {
        c.a = pow2(2 * g - 4);
        c.b0_prime = pow2(2 * g - 7);
        c.b0_double_prime = pow2(2 * g - 6);
        c.b0_ram = pow2(g - 5) * (ipow2(g - 1) - 1);
        for (int k = 1; k <= g - 1; ++k) {
            if (k <= g / 2)
                c.side(k) = pow2(g + k - 4) * (ipow2(g - k) - 1);
            else
                c.side(k) = pow2(2 * g - (g - k) - 4) * (ipow2(g - k) - 1);
        }
        for (int i = 1; i <= g / 2; ++i)
            c.mixed(i) = f * (ipow2(g - 1) - ipow2(g - i - 1) - ipow2(i - 1));
    }
    return c;
}

RBarClass pullback(const MBarClass& m) {
    RBarClass c(m.genus);
    const int g = m.genus;
    // boundary coefficients land in the b-convention, hence the negations
    c.a = m.lambda;
    c.b0_prime = -m.delta0;
    c.b0_double_prime = -m.delta0;
    c.b0_ram = -2 * m.delta0;
    for (int i = 1; i <= g / 2; ++i) {
        c.side(i) += -m.delta_i(i);
        if (g - i != i) c.side(g - i) += -m.delta_i(i);  // folded slot is hit once at i = g/2
        c.mixed(i) += -m.delta_i(i);
    }
    return c;
}

MBarClass pushforward(const RBarClass& c) {
    const int g = c.genus;
    MBarClass m(g);
    m.lambda = (ipow2(2 * g) - 1) * c.a;
    m.delta0 = -(2 * (ipow2(2 * g - 2) - 1) * c.b0_prime + c.b0_double_prime +
                 ipow2(2 * g - 2) * c.b0_ram);
    for (int i = 1; i <= g / 2; ++i) {
        Rational acc;
        if (g - i != i) {
            acc += (ipow2(2 * i) - 1) * c.side(i);
            acc += (ipow2(2 * (g - i)) - 1) * c.side(g - i);
        } else {
            // the folded slot carries the two one-sided choices of eta on a
            // curve with equal halves: degree (2^{2i}-1) + (2^{2(g-i)}-1)
            acc += 2 * (ipow2(g) - 1) * c.side(i);
        }
        acc += (ipow2(2 * i) - 1) * (ipow2(2 * (g - i)) - 1) * c.mixed(i);
        m.delta_i(i) = -acc;
    }
    return m;
}

TestCurveRow f_curve_row(int g, int i, FCurveVariant variant) {
    check_class_genus(g);
    if (i < 1 || i > g / 2)
        throw std::invalid_argument("f_curve_row: need 1 <= i <= g/2");
    if (g - i - 1 < 1) throw std::invalid_argument("f_curve_row: degenerate family, g-i-1 = 0");
    std::string name = "F(i=" + std::to_string(i) + ") in ";
    const Rational entry = -2 * (g - i - 1);
    switch (variant) {
        case FCurveVariant::delta_i: {
            TestCurveRow row(name + "delta_" + std::to_string(i), g);
            row.side_k(i) = entry;
            return row;
        }
        case FCurveVariant::delta_g_minus_i: {
            TestCurveRow row(name + "delta_" + std::to_string(g - i), g);
            row.side_k(g - i) = entry;
            return row;
        }
        case FCurveVariant::delta_mixed: {
            TestCurveRow row(
                name + "delta_{" + std::to_string(i) + ":" + std::to_string(g - i) + "}", g);
            row.mixed_i(i) = entry;
            return row;
        }
    }
    throw std::logic_error("unreachable F-curve variant");
}

TestCurveRow g_curve_row(int g, GCurveVariant variant) {
    check_class_genus(g);
    if (variant == GCurveVariant::wirtinger) {
        TestCurveRow row("G across Wirtinger covers", g);
        row.d0_double_prime = 2 - 2 * g;
        row.side_k(1) = 1;
        return row;
    }
    TestCurveRow row("G across non-admissible covers", g);
    const Integer k = ipow2(2 * g - 2) - 1;
    row.d0_prime = Rational(2 * (2 - 2 * g)) * k;
    row.side_k(g - 1) = Rational(k);
    row.mixed_i(1) = Rational(k);
    return row;
}

Rational intersect(const TestCurveRow& row, const RBarClass& c) {
    check_same_genus(row.genus, c.genus);
    const int g = row.genus;
    Rational acc = c.a * row.lambda;
    acc -= c.b0_prime * row.d0_prime;
    acc -= c.b0_double_prime * row.d0_double_prime;
    acc -= c.b0_ram * row.d0_ram;
    for (int k = 1; k <= g - 1; ++k) acc -= c.side(k) * row.side_k(k);
    for (int i = 1; i <= g / 2; ++i) acc -= c.mixed(i) * row.mixed_i(i);
    return acc;
}

// ---- serialization ------------------------------------------------------

namespace {

std::vector<std::string> mbar_labels(int g) {
    std::vector<std::string> out{"lambda", "delta_0"};
    for (int i = 1; i <= g / 2; ++i) out.push_back("delta_" + std::to_string(i));
    return out;
}

nlohmann::json basis_entry(const std::string& label, const Rational& value) {
    return {{"label", label}, {"coefficient", to_string(value)}};
}

int genus_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("genus") || !j["genus"].is_number_integer())
        throw std::invalid_argument("class JSON: missing integer \"genus\"");
    return j["genus"].get<int>();
}

// label -> coefficient, insisting on the exact basis label set
std::map<std::string, Rational> coefficients_from_json(const nlohmann::json& j,
                                                       const std::vector<std::string>& labels) {
    if (!j.contains("basis") || !j["basis"].is_array())
        throw std::invalid_argument("class JSON: missing \"basis\" array");
    std::map<std::string, Rational> out;
    for (const auto& entry : j["basis"]) {
        if (!entry.is_object() || !entry.contains("label") || !entry.contains("coefficient"))
            throw std::invalid_argument("class JSON: basis entries need label and coefficient");
        const std::string label = entry["label"].get<std::string>();
        if (out.count(label)) throw std::invalid_argument("class JSON: duplicate label " + label);
        out.emplace(label, rational_from_string(entry["coefficient"].get<std::string>()));
    }
    for (const std::string& l : labels)
        if (!out.count(l)) throw std::invalid_argument("class JSON: missing label " + l);
    if (out.size() != labels.size())
        throw std::invalid_argument("class JSON: unexpected extra labels");
    return out;
}

}  // namespace

nlohmann::json to_json(const MBarClass& c) {
    nlohmann::json basis = nlohmann::json::array();
    basis.push_back(basis_entry("lambda", c.lambda));
    basis.push_back(basis_entry("delta_0", c.delta0));
    for (int i = 1; i <= c.genus / 2; ++i)
        basis.push_back(basis_entry("delta_" + std::to_string(i), c.delta_i(i)));
    return {{"genus", c.genus}, {"basis", std::move(basis)}};
}

nlohmann::json to_json(const RBarClass& c) {
    nlohmann::json j;
    j["genus"] = c.genus;
    if (c.parity_tag) j["parity"] = parity_name(*c.parity_tag);
    nlohmann::json basis = nlohmann::json::array();
    for (const RBasisLabel& label : rbar_basis(c.genus))
        basis.push_back(basis_entry(label.text(c.genus), c.coeff(label)));
    j["basis"] = std::move(basis);
    return j;
}

MBarClass mbar_from_json(const nlohmann::json& j) {
    const int g = genus_from_json(j);
    MBarClass c(g);
    auto coeffs = coefficients_from_json(j, mbar_labels(g));
    c.lambda = coeffs.at("lambda");
    c.delta0 = coeffs.at("delta_0");
    for (int i = 1; i <= g / 2; ++i) c.delta_i(i) = coeffs.at("delta_" + std::to_string(i));
    return c;
}

RBarClass rbar_from_json(const nlohmann::json& j) {
    const int g = genus_from_json(j);
    RBarClass c(g);
    if (j.contains("parity")) {
        const std::string p = j["parity"].get<std::string>();
        if (p == "even")
            c.parity_tag = Parity::even;
        else if (p == "odd")
            c.parity_tag = Parity::odd;
        else
            throw std::invalid_argument("class JSON: parity must be \"even\" or \"odd\"");
    }
    std::vector<std::string> labels;
    for (const RBasisLabel& label : rbar_basis(g)) labels.push_back(label.text(g));
    auto coeffs = coefficients_from_json(j, labels);
    for (const RBasisLabel& label : rbar_basis(g)) c.coeff(label) = coeffs.at(label.text(g));
    return c;
}

}  // namespace prym
