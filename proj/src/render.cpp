#include "prym/render.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace prym {

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "latex") return OutputFormat::latex;
    if (s == "plain") return OutputFormat::plain;
    throw std::invalid_argument("unknown format \"" + s + "\" (json, csv, latex, plain)");
}

const char* format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        case OutputFormat::latex: return "latex";
        case OutputFormat::plain: return "plain";
    }
    throw std::logic_error("unreachable format");
}

std::string latex_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\textbackslash{}"; break;
            case '&': case '%': case '$': case '#': case '_': case '{': case '}':
                out += '\\';
                out += c;
                break;
            case '~': out += "\\textasciitilde{}"; break;
            case '^': out += "\\textasciicircum{}"; break;
            default: out += c;
        }
    }
    return out;
}

namespace {

void check_classes(const std::vector<RBarClass>& classes) {
    if (classes.empty()) throw std::invalid_argument("render_classes: no classes given");
    for (const RBarClass& c : classes)
        if (c.genus != classes.front().genus)
            throw std::invalid_argument("render_classes: classes of different genus");
}

std::string column_name(const RBarClass& c, std::size_t index, std::size_t total) {
    if (c.parity_tag) return parity_name(*c.parity_tag);
    return total == 1 ? std::string("value") : "class_" + std::to_string(index + 1);
}

// Theorem-A coefficient letters: (a, b_x) for the even class, (c, d_x) for
// the odd one; untagged classes fall back by column position.
std::pair<char, char> coefficient_letters(const RBarClass& c, std::size_t index) {
    const bool second = c.parity_tag ? *c.parity_tag == Parity::odd : index == 1;
    return second ? std::pair{'c', 'd'} : std::pair{'a', 'b'};
}

std::string coefficient_latex(const RBarClass& c, std::size_t index, const RBasisLabel& label) {
    const auto [lam, bnd] = coefficient_letters(c, index);
    using K = RBasisLabel::Kind;
    switch (label.kind) {
        case K::lambda: return std::string(1, lam);
        case K::delta0_prime: return std::string(1, bnd) + "_0'";
        case K::delta0_double_prime: return std::string(1, bnd) + "_0''";
        case K::delta0_ram: return std::string(1, bnd) + "_0^{\\mathrm{ram}}";
        case K::delta_side: return std::string(1, bnd) + "_{" + std::to_string(label.index) + "}";
        case K::delta_mixed:
            return std::string(1, bnd) + "_{" + std::to_string(label.index) + ":" +
                   std::to_string(c.genus - label.index) + "}";
    }
    throw std::logic_error("unreachable label kind");
}

std::string latex_value(const Rational& v) {
    if (is_integral(v)) return to_string(v);
    Rational a = v;
    std::string sign;
    if (a < 0) {
        sign = "-";
        a = -a;
    }
    return sign + "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

std::string pad(const std::string& s, std::size_t width, bool right_align) {
    if (s.size() >= width) return s;
    const std::string fill(width - s.size(), ' ');
    return right_align ? fill + s : s + fill;
}

std::string plain_value(const Rational& v, bool* saw_fraction) {
    std::string s = to_string(v);
    if (!is_integral(v)) {
        s += '*';
        *saw_fraction = true;
    }
    return s;
}

std::string plain_table(const std::vector<RBarClass>& classes) {
    const int g = classes.front().genus;
    const std::vector<RBasisLabel> basis = rbar_basis(g);
    std::vector<std::string> labels{"slot"};
    for (const RBasisLabel& l : basis) labels.push_back(l.text(g));

    bool saw_fraction = false;
    std::vector<std::vector<std::string>> columns;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        std::vector<std::string> col{column_name(classes[j], j, classes.size())};
        for (const RBasisLabel& l : basis)
            col.push_back(plain_value(classes[j].coeff(l), &saw_fraction));
        columns.push_back(std::move(col));
    }

    std::size_t label_width = 0;
    for (const std::string& s : labels) label_width = std::max(label_width, s.size());
    std::vector<std::size_t> widths(columns.size(), 0);
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const std::string& s : columns[j]) widths[j] = std::max(widths[j], s.size());

    std::ostringstream out;
    out << "genus " << g << "  (class = a*lambda - sum_x b_x delta_x; table shows a and the b_x)\n";
    for (std::size_t row = 0; row < labels.size(); ++row) {
        out << pad(labels[row], label_width, false);
        for (std::size_t j = 0; j < columns.size(); ++j)
            out << "  " << pad(columns[j][row], widths[j], true);
        out << '\n';
    }
    if (saw_fraction)
        out << "* non-integral coefficient (the class lives in the rational Picard group)\n";
    return out.str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_table(const std::vector<RBarClass>& classes) {
    const int g = classes.front().genus;
    std::ostringstream out;
    out << "label";
    for (std::size_t j = 0; j < classes.size(); ++j)
        out << ',' << csv_field(column_name(classes[j], j, classes.size()));
    out << '\n';
    for (const RBasisLabel& l : rbar_basis(g)) {
        out << csv_field(l.text(g));
        for (const RBarClass& c : classes) out << ',' << to_string(c.coeff(l));
        out << '\n';
    }
    return out.str();
}

std::string latex_table(const std::vector<RBarClass>& classes) {
    const int g = classes.front().genus;
    const std::vector<RBasisLabel> basis = rbar_basis(g);
    std::ostringstream out;
    out << "% genus " << g << ": class = a\\lambda - \\sum_x b_x\\delta_x\n";
    out << "\\[\n\\begin{array}{";
    for (std::size_t j = 0; j < classes.size(); ++j) out << "rl";
    out << "}\n";
    for (std::size_t row = 0; row < basis.size(); ++row) {
        for (std::size_t j = 0; j < classes.size(); ++j) {
            if (j) out << " & ";
            out << coefficient_latex(classes[j], j, basis[row]) << " &= "
                << latex_value(classes[j].coeff(basis[row]));
            if (j + 1 < classes.size()) out << ',';
        }
        if (row + 1 < basis.size()) out << " \\\\";
        out << '\n';
    }
    out << "\\end{array}\n\\]\n";
    return out.str();
}

}  // namespace

std::string render_classes(const std::vector<RBarClass>& classes, OutputFormat f) {
    check_classes(classes);
    switch (f) {
        case OutputFormat::json: {
            if (classes.size() == 1) return to_json(classes.front()).dump(2) + "\n";
            nlohmann::json arr = nlohmann::json::array();
            for (const RBarClass& c : classes) arr.push_back(to_json(c));
            return arr.dump(2) + "\n";
        }
        case OutputFormat::csv: return csv_table(classes);
        case OutputFormat::latex: return latex_table(classes);
        case OutputFormat::plain: return plain_table(classes);
    }
    throw std::logic_error("unreachable format");
}

std::string render_derivation(const DerivationReport& r, OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return to_json(r).dump(2) + "\n";
        case OutputFormat::csv: {
            std::ostringstream out;
            out << "step,name,lhs,rhs,residue\n";
            for (const EquationRecord& e : r.equations)
                out << e.step << ',' << csv_field(e.name) << ',' << to_string(e.lhs) << ','
                    << to_string(e.rhs) << ',' << to_string(e.residue()) << '\n';
            return out.str();
        }
        case OutputFormat::latex: {
            std::ostringstream out;
            out << "% derivation at genus " << r.genus << ": "
                << (r.matches_closed_form ? "matches the closed form" : "DOES NOT MATCH")
                << ", residues " << (r.residues_zero() ? "all zero" : "NONZERO") << '\n';
            out << latex_table({r.even_class, r.odd_class});
            return out.str();
        }
        case OutputFormat::plain: {
            std::ostringstream out;
            out << "three-step derivation, genus " << r.genus << "\n\nassumptions:\n";
            for (const std::string& a : r.assumptions) out << "  - " << a << '\n';
            out << "\nequations (lhs from the solved classes, rhs from counting):\n";
            std::size_t name_width = 0;
            for (const EquationRecord& e : r.equations)
                name_width = std::max(name_width, e.name.size());
            for (const EquationRecord& e : r.equations)
                out << "  [step " << e.step << "] " << pad(e.name, name_width, false) << "  lhs "
                    << to_string(e.lhs) << "  rhs " << to_string(e.rhs) << "  residue "
                    << to_string(e.residue()) << '\n';
            out << '\n' << plain_table({r.even_class, r.odd_class});
            out << "\nmatches closed form: " << (r.matches_closed_form ? "yes" : "no")
                << "\nresidues all zero:   " << (r.residues_zero() ? "yes" : "no") << '\n';
            return out.str();
        }
    }
    throw std::logic_error("unreachable format");
}

}  // namespace prym
