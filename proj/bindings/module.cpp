#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>

#include "prym/checks.hpp"
#include "prym/derivation.hpp"
#include "prym/f2.hpp"
#include "prym/hyperelliptic.hpp"
#include "prym/picard.hpp"
#include "prym/render.hpp"

namespace py = pybind11;

// GMP integers cross the boundary as python ints, rationals as
// fractions.Fraction (both exact in both directions)
namespace pybind11::detail {

template <>
struct type_caster<prym::Integer> {
    PYBIND11_TYPE_CASTER(prym::Integer, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        const std::string digits = py::cast<std::string>(py::str(src));
        return value.set_str(digits, 10) == 0;
    }

    static handle cast(const prym::Integer& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

template <>
struct type_caster<prym::Rational> {
    PYBIND11_TYPE_CASTER(prym::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        mpz_class num, den;
        if (PyLong_Check(src.ptr())) {
            if (num.set_str(py::cast<std::string>(py::str(src)), 10) != 0) return false;
            den = 1;
        } else {
            if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
            const py::object n = src.attr("numerator"), d = src.attr("denominator");
            if (!PyLong_Check(n.ptr()) || !PyLong_Check(d.ptr())) return false;
            if (num.set_str(py::cast<std::string>(py::str(n)), 10) != 0) return false;
            if (den.set_str(py::cast<std::string>(py::str(d)), 10) != 0) return false;
            if (den == 0) return false;
        }
        value = prym::Rational(num, den);
        value.canonicalize();
        return true;
    }

    static handle cast(const prym::Rational& v, return_value_policy, handle) {
        const py::object fraction = py::module_::import("fractions").attr("Fraction");
        const py::object num = py::reinterpret_steal<py::object>(
            PyLong_FromString(v.get_num().get_str().c_str(), nullptr, 10));
        const py::object den = py::reinterpret_steal<py::object>(
            PyLong_FromString(v.get_den().get_str().c_str(), nullptr, 10));
        return fraction(num, den).release();
    }
};

}  // namespace pybind11::detail

namespace {

prym::Parity parse_parity(const std::string& s) {
    if (s == "even") return prym::Parity::even;
    if (s == "odd") return prym::Parity::odd;
    throw std::invalid_argument("parity must be \"even\" or \"odd\", got \"" + s + "\"");
}

const prym::Rational& coefficient_by_text(const prym::RBarClass& c, const std::string& label) {
    for (const prym::RBasisLabel& l : prym::rbar_basis(c.genus))
        if (l.text(c.genus) == label) return c.coeff(l);
    throw std::invalid_argument("unknown basis label \"" + label + "\"");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    using namespace prym;

    m.doc() =
        "Divisor classes of the even/odd semicanonical-pencil loci in Prym moduli: "
        "closed forms, the three-step derivation, theta-characteristic counting in two "
        "models, and the verification batteries.";

    // ---- parities and counts -------------------------------------------
    py::enum_<Parity>(m, "Parity")
        .value("even", Parity::even)
        .value("odd", Parity::odd);
    m.def("parity_name", &parity_name);
    m.def("enumeration_cap", &enumeration_cap,
          "ceiling for the exhaustive enumerations (PRYMSC_ENUM_CAP, default 8)");

    m.def("count_even", &count_even, py::arg("genus"),
          "even theta-characteristics: 2^{g-1}(2^g+1)");
    m.def("count_odd", &count_odd, py::arg("genus"),
          "odd theta-characteristics: 2^{g-1}(2^g-1)");
    m.def("count_odd_preserving", py::overload_cast<int>(&count_odd_preserving),
          py::arg("genus"), "odd forms staying odd under any fixed nonzero twist");
    m.def("count_odd_preserving",
          py::overload_cast<int, const F2Vector&>(&count_odd_preserving), py::arg("genus"),
          py::arg("eta"));
    py::enum_<PairKind>(m, "PairKind").value("ee", PairKind::ee).value("oo", PairKind::oo);
    m.def("count_boundary_pairs", &count_boundary_pairs, py::arg("genus"), py::arg("i"),
          py::arg("kind"));
    m.def("degree_over_teixidor", &degree_over_teixidor, py::arg("genus"), py::arg("parity"));
    m.def("degree_over_teixidor",
          [](int g, const std::string& p) { return degree_over_teixidor(g, parse_parity(p)); });

    // ---- symplectic F2 model --------------------------------------------
    py::class_<F2Vector>(m, "F2Vector")
        .def(py::init<int, std::uint64_t>(), py::arg("genus"), py::arg("bits"))
        .def_static("zero", &F2Vector::zero)
        .def_static("basis_e", &F2Vector::basis_e)
        .def_static("basis_f", &F2Vector::basis_f)
        .def_readonly("genus", &F2Vector::genus)
        .def_readonly("bits", &F2Vector::bits)
        .def("e_part", &F2Vector::e_part)
        .def("f_part", &F2Vector::f_part)
        .def("is_zero", &F2Vector::is_zero)
        .def(py::self + py::self)
        .def(py::self == py::self)
        .def("__repr__", [](const F2Vector& v) {
            return "F2Vector(genus=" + std::to_string(v.genus) +
                   ", bits=" + std::to_string(v.bits) + ")";
        });
    m.def("weil_pairing", &weil_pairing);

    py::class_<QuadraticForm>(m, "QuadraticForm")
        .def(py::init<int, std::uint64_t>(), py::arg("genus"), py::arg("values_on_basis"))
        .def_static("zero", &QuadraticForm::zero)
        .def_readonly("genus", &QuadraticForm::genus)
        .def_readonly("values", &QuadraticForm::values)
        .def(py::self == py::self)
        .def("__repr__", [](const QuadraticForm& q) {
            return "QuadraticForm(genus=" + std::to_string(q.genus) +
                   ", values=" + std::to_string(q.values) + ")";
        });
    m.def("evaluate", &evaluate, py::arg("form"), py::arg("v"));
    m.def("arf", &arf);
    m.def("twist", &twist, py::arg("form"), py::arg("eta"));
    m.def("enumerate_forms", &enumerate_forms);

    py::class_<ParityCensus>(m, "ParityCensus")
        .def_readonly("even", &ParityCensus::even)
        .def_readonly("odd", &ParityCensus::odd)
        .def("__repr__", [](const ParityCensus& c) {
            return "ParityCensus(even=" + to_string(c.even) + ", odd=" + to_string(c.odd) + ")";
        });
    m.def("brute_arf_census", &brute_arf_census);
    m.def("brute_count_odd_preserving", &brute_count_odd_preserving);
    m.def("brute_parity_flip_count", &brute_parity_flip_count);
    m.def("brute_twist_census", &brute_twist_census);

    // ---- hyperelliptic subset model --------------------------------------
    m.def("canonical_subset", &canonical_subset);
    py::class_<TwoTorsionSubset>(m, "TwoTorsionSubset")
        .def(py::init<int, std::uint32_t>(), py::arg("genus"), py::arg("raw_mask"))
        .def_static("zero", &TwoTorsionSubset::zero)
        .def_static("from_indices", &TwoTorsionSubset::from_indices)
        .def_readonly("genus", &TwoTorsionSubset::genus)
        .def_readonly("mask", &TwoTorsionSubset::mask)
        .def("indices", &TwoTorsionSubset::indices)
        .def("is_zero", &TwoTorsionSubset::is_zero)
        .def(py::self == py::self)
        .def("__repr__", [](const TwoTorsionSubset& u) {
            std::string out = "TwoTorsionSubset(genus=" + std::to_string(u.genus) + ", {";
            const std::vector<int> idx = u.indices();
            for (std::size_t i = 0; i < idx.size(); ++i)
                out += (i ? "," : "") + std::to_string(idx[i]);
            return out + "})";
        });
    py::class_<ThetaSubset>(m, "ThetaSubset")
        .def(py::init<int, std::uint32_t>(), py::arg("genus"), py::arg("raw_mask"))
        .def_static("empty_class", &ThetaSubset::empty_class)
        .def_static("from_indices", &ThetaSubset::from_indices)
        .def_readonly("genus", &ThetaSubset::genus)
        .def_readonly("mask", &ThetaSubset::mask)
        .def("indices", &ThetaSubset::indices)
        .def(py::self == py::self)
        .def("__repr__", [](const ThetaSubset& t) {
            std::string out = "ThetaSubset(genus=" + std::to_string(t.genus) + ", {";
            const std::vector<int> idx = t.indices();
            for (std::size_t i = 0; i < idx.size(); ++i)
                out += (i ? "," : "") + std::to_string(idx[i]);
            return out + "})";
        });
    m.def("add", &add);
    m.def("pairing", &pairing);
    m.def("h0", &h0);
    m.def("parity", &parity);
    m.def("twist_theta", &twist_theta);
    py::class_<SubsetForm>(m, "SubsetForm")
        .def_readonly("base", &SubsetForm::base)
        .def("__call__", &SubsetForm::operator())
        .def("arf_parity", &SubsetForm::arf_parity);
    m.def("form_from_subset", &form_from_subset);
    m.def("enumerate_theta_classes", &enumerate_theta_classes);
    m.def("enumerate_torsion_classes", &enumerate_torsion_classes);
    py::enum_<DivisorMembership>(m, "DivisorMembership")
        .value("even_divisor", DivisorMembership::even_divisor)
        .value("odd_divisor", DivisorMembership::odd_divisor);
    m.def("divisor_membership_name", &divisor_membership_name);
    m.def("classify_genus3", &classify_genus3);
    m.def("semicanonical_pencils", &semicanonical_pencils);

    // ---- divisor-class ledger ---------------------------------------------
    py::class_<MBarClass>(m, "MBarClass")
        .def(py::init<int>(), py::arg("genus"))
        .def_readonly("genus", &MBarClass::genus)
        .def_readwrite("lambda_", &MBarClass::lambda)
        .def_readwrite("delta0", &MBarClass::delta0)
        .def("delta", [](const MBarClass& c, int i) { return c.delta_i(i); }, py::arg("i"))
        .def(py::self == py::self)
        .def("to_json", [](const MBarClass& c) { return to_json(c).dump(); })
        .def("__repr__", [](const MBarClass& c) {
            return "MBarClass(genus=" + std::to_string(c.genus) + ")";
        });
    py::class_<RBarClass>(m, "RBarClass")
        .def(py::init<int>(), py::arg("genus"))
        .def_readonly("genus", &RBarClass::genus)
        .def_readonly("parity_tag", &RBarClass::parity_tag)
        .def_property_readonly("a", [](const RBarClass& c) { return c.a; })
        .def("coefficient", &coefficient_by_text, py::arg("label"),
             "stored table value at a basis label: the lambda coefficient for \"lambda\", "
             "MINUS the actual delta coefficient otherwise (the class is "
             "a*lambda - sum_x b_x delta_x)")
        .def("labels",
             [](const RBarClass& c) {
                 std::vector<std::string> out;
                 for (const RBasisLabel& l : rbar_basis(c.genus)) out.push_back(l.text(c.genus));
                 return out;
             })
        .def("as_dict",
             [](const RBarClass& c) {
                 py::dict d;
                 for (const RBasisLabel& l : rbar_basis(c.genus))
                     d[py::str(l.text(c.genus))] = py::cast(c.coeff(l));
                 return d;
             })
        .def(py::self == py::self)
        .def("to_json", [](const RBarClass& c) { return to_json(c).dump(); })
        .def("__repr__", [](const RBarClass& c) {
            std::string tag = c.parity_tag ? std::string(parity_name(*c.parity_tag)) : "untagged";
            return "RBarClass(genus=" + std::to_string(c.genus) + ", " + tag + ")";
        });

    m.def("teixidor_class", &teixidor_class, py::arg("genus"),
          "class of the semicanonical-pencil locus in curve moduli (signed coefficients)");
    m.def("theorem_a_class", &theorem_a_class, py::arg("genus"), py::arg("parity"));
    m.def("theorem_a_class",
          [](int g, const std::string& p) { return theorem_a_class(g, parse_parity(p)); },
          py::arg("genus"), py::arg("parity"));
    m.def("pullback", &pullback);
    m.def("pushforward", &pushforward);

    py::enum_<FCurveVariant>(m, "FCurveVariant")
        .value("delta_i", FCurveVariant::delta_i)
        .value("delta_g_minus_i", FCurveVariant::delta_g_minus_i)
        .value("delta_mixed", FCurveVariant::delta_mixed);
    py::enum_<GCurveVariant>(m, "GCurveVariant")
        .value("wirtinger", GCurveVariant::wirtinger)
        .value("nonadmissible", GCurveVariant::nonadmissible);
    py::class_<TestCurveRow>(m, "TestCurveRow")
        .def_readonly("name", &TestCurveRow::name)
        .def_readonly("genus", &TestCurveRow::genus)
        .def("__repr__",
             [](const TestCurveRow& r) { return "TestCurveRow(" + r.name + ")"; });
    m.def("f_curve_row", &f_curve_row, py::arg("genus"), py::arg("i"), py::arg("variant"));
    m.def("g_curve_row", &g_curve_row, py::arg("genus"), py::arg("variant"));
    m.def("intersect", &intersect, py::arg("row"), py::arg("cls"));

    // ---- derivation ---------------------------------------------------------
    m.def("expected_f_count", &expected_f_count, py::arg("genus"), py::arg("i"),
          py::arg("variant"), py::arg("parity"));
    py::class_<EquationRecord>(m, "EquationRecord")
        .def_readonly("step", &EquationRecord::step)
        .def_readonly("name", &EquationRecord::name)
        .def_readonly("lhs", &EquationRecord::lhs)
        .def_readonly("rhs", &EquationRecord::rhs)
        .def("residue", &EquationRecord::residue)
        .def("__repr__", [](const EquationRecord& e) {
            return "EquationRecord(step=" + std::to_string(e.step) + ", " + e.name + ")";
        });
    py::class_<DerivationReport>(m, "DerivationReport")
        .def_readonly("genus", &DerivationReport::genus)
        .def_readonly("even", &DerivationReport::even_class)
        .def_readonly("odd", &DerivationReport::odd_class)
        .def_readonly("equations", &DerivationReport::equations)
        .def_readonly("assumptions", &DerivationReport::assumptions)
        .def_readonly("matches_closed_form", &DerivationReport::matches_closed_form)
        .def("residues_zero", &DerivationReport::residues_zero)
        .def("to_json", [](const DerivationReport& r) { return to_json(r).dump(); })
        .def("__repr__", [](const DerivationReport& r) {
            return "DerivationReport(genus=" + std::to_string(r.genus) + ")";
        });
    m.def("derive_classes", &derive_classes, py::arg("genus"));
    py::class_<GenusVerdict>(m, "GenusVerdict")
        .def_readonly("genus", &GenusVerdict::genus)
        .def_readonly("match", &GenusVerdict::match)
        .def_readonly("residues_zero", &GenusVerdict::residues_zero);
    py::class_<RangeSummary>(m, "RangeSummary")
        .def_readonly("g_min", &RangeSummary::g_min)
        .def_readonly("g_max", &RangeSummary::g_max)
        .def_readonly("per_genus", &RangeSummary::per_genus)
        .def_readonly("all_pass", &RangeSummary::all_pass)
        .def("to_json", [](const RangeSummary& s) { return to_json(s).dump(); });
    m.def("verify_range", &verify_range, py::arg("g_min"), py::arg("g_max"));

    // ---- rendering and checks ----------------------------------------------
    m.def("render_classes",
          [](const std::vector<RBarClass>& classes, const std::string& format) {
              return render_classes(classes, parse_format(format));
          },
          py::arg("classes"), py::arg("format") = "plain");
    m.def("render_derivation",
          [](const DerivationReport& r, const std::string& format) {
              return render_derivation(r, parse_format(format));
          },
          py::arg("report"), py::arg("format") = "plain");

    py::class_<checks::CheckResult>(m, "CheckResult")
        .def_readonly("name", &checks::CheckResult::name)
        .def_readonly("pass_", &checks::CheckResult::pass)
        .def_readonly("detail", &checks::CheckResult::detail)
        .def_readonly("seconds", &checks::CheckResult::seconds)
        .def("__repr__", [](const checks::CheckResult& r) {
            return std::string(r.pass ? "PASS " : "FAIL ") + r.name;
        });
    m.def("acceptance_suite", &checks::acceptance_suite,
          "the ten acceptance checks at their contractual scales");
    m.def("verify_suite", &checks::verify_suite, py::arg("max_genus"),
          py::arg("seed") = checks::kDefaultSeed);
    m.attr("DEFAULT_SEED") = py::int_(checks::kDefaultSeed);
}
