#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "prym/f2.hpp"
#include "prym/rational.hpp"

namespace prym {

// ---- Pic_Q of the curve moduli space -----------------------------------

// basis {lambda, delta_0, delta_1 .. delta_{g/2}}; coefficients are stored
// signed (the class IS sum coeff * basis element)
struct MBarClass {
    int genus;
    Rational lambda;
    Rational delta0;
    std::vector<Rational> delta;  // slot i-1 <-> delta_i, i = 1..g/2

    explicit MBarClass(int g);  // zero class; requires g >= 3

    Rational& delta_i(int i);
    const Rational& delta_i(int i) const;

    friend bool operator==(const MBarClass&, const MBarClass&) = default;
};

// ---- Pic_Q of the Prym moduli space -------------------------------------

// Basis slots. Boundary slots over reducible curves are indexed by the side
// k = 1..g-1 that carries the nontrivial 2-torsion, so for even g the slot
// delta_{g/2} occurs exactly once (the i = g/2 column's labels delta_i and
// delta_{g-i} name the same slot); delta_{i:g-i} is indexed by i = 1..g/2.
struct RBasisLabel {
    enum class Kind {
        lambda,
        delta0_prime,         // non-admissible covers of irreducible nodal curves
        delta0_double_prime,  // Wirtinger covers
        delta0_ram,           // admissible covers ramified over the node
        delta_side,           // delta_k, k = 1..g-1
        delta_mixed,          // delta_{i:g-i}, i = 1..g/2
    };

    Kind kind;
    int index;  // k for delta_side, i for delta_mixed, 0 otherwise

    std::string text(int genus) const;   // "lambda", "delta_0'", "delta_3", "delta_{1:4}", ...
    std::string latex(int genus) const;  // "\lambda", "\delta_0^{ram}", "\delta_{1:4}", ...

    friend bool operator==(const RBasisLabel&, const RBasisLabel&) = default;
};

// display order: lambda, the three delta_0 slots, then per i = 1..g/2 the
// group delta_i, delta_{g-i} (absent when g-i == i), delta_{i:g-i}
std::vector<RBasisLabel> rbar_basis(int g);

// A divisor class in Theorem-A display convention: the stored numbers are
// (a; b_0', b_0'', b_0^ram; b_k; b_{i:g-i}) with the class equal to
//     a*lambda - sum_x b_x * delta_x,
// i.e. each boundary field holds MINUS the actual basis coefficient.
struct RBarClass {
    int genus;
    std::optional<Parity> parity_tag;  // set on the even/odd divisor classes
    Rational a;                        // lambda coefficient
    Rational b0_prime;
    Rational b0_double_prime;
    Rational b0_ram;
    std::vector<Rational> b_side;   // slot k-1 <-> delta_k, k = 1..g-1
    std::vector<Rational> b_mixed;  // slot i-1 <-> delta_{i:g-i}, i = 1..g/2

    explicit RBarClass(int g);  // zero class; requires g >= 3

    Rational& side(int k);
    const Rational& side(int k) const;
    Rational& mixed(int i);
    const Rational& mixed(int i) const;
    Rational& coeff(const RBasisLabel& label);
    const Rational& coeff(const RBasisLabel& label) const;

    friend bool operator==(const RBarClass&, const RBarClass&) = default;
};

// named intersection-number row over the same slots; entries are the actual
// numbers row . delta_x (signed, NOT the b-convention)
struct TestCurveRow {
    std::string name;
    int genus;
    Rational lambda;
    Rational d0_prime;
    Rational d0_double_prime;
    Rational d0_ram;
    std::vector<Rational> side;   // k = 1..g-1
    std::vector<Rational> mixed;  // i = 1..g/2

    TestCurveRow(std::string name, int g);  // zero row

    Rational& side_k(int k);
    const Rational& side_k(int k) const;
    Rational& mixed_i(int i);
    const Rational& mixed_i(int i) const;
};

// ---- the classes and maps of the derivation ----------------------------

// class of the semicanonical-pencil locus in curve moduli:
//   2^{g-3}((2^g+1) lambda - 2^{g-3} delta_0 - sum_i (2^{g-i}-1)(2^i-1) delta_i)
MBarClass teixidor_class(int g);

// the even/odd Prym semicanonical-pencil divisor classes, by closed form:
//   a      = 2^{g-3}(2^{g-1}+1)        c      = 2^{2g-4}
//   b_0'   = 2^{2g-7}                  d_0'   = 2^{2g-7}
//   b_0''  = 0                         d_0''  = 2^{2g-6}
//   b_0^r  = 2^{g-5}(2^{g-1}+1)        d_0^r  = 2^{g-5}(2^{g-1}-1)
//   b_i    = 2^{g-3}(2^{g-i}-1)(2^{i-1}-1)      d_i    = 2^{g+i-4}(2^{g-i}-1)
//   b_{g-i}= 2^{g-3}(2^{g-i-1}-1)(2^i-1)        d_{g-i}= 2^{2g-i-4}(2^i-1)
//   b_{i:g-i} = 2^{g-3}(2^{g-1}-2^{i-1}-2^{g-i-1}+1)
//   d_{i:g-i} = 2^{g-3}(2^{g-1}-2^{g-i-1}-2^{i-1})
RBarClass theorem_a_class(int g, Parity p);

// pullback along the degree-(2^{2g}-1) covering:
//   lambda -> lambda, delta_0 -> delta_0' + delta_0'' + 2 delta_0^ram,
//   delta_i -> delta_i + delta_{g-i} + delta_{i:g-i}
// (at i = g/2 the two side labels are one slot, hit once)
RBarClass pullback(const MBarClass& c);

// pushforward: lambda -> (2^{2g}-1) lambda; delta_0' -> 2(2^{2g-2}-1) delta_0,
// delta_0'' -> delta_0, delta_0^ram -> 2^{2g-2} delta_0; delta_k -> (2^{2k}-1)
// delta_{min(k,g-k)} except the folded slot k = g/2 which carries both
// one-sided choices and has degree 2(2^g-1); delta_{i:g-i} ->
// (2^{2i}-1)(2^{2(g-i)}-1) delta_i.  Per i the degrees sum to 2^{2g}-1.
MBarClass pushforward(const RBarClass& c);

enum class FCurveVariant { delta_i, delta_g_minus_i, delta_mixed };

// row of the lifted F-curve (fixed genus-i tail, moving point on the
// genus-(g-i) side): single nonzero entry -2(g-i-1) at the slot the chosen
// lift lies in; lambda entry 0
TestCurveRow f_curve_row(int g, int i, FCurveVariant variant);

enum class GCurveVariant { wirtinger, nonadmissible };

// rows of the two lifts of the pencil G of irreducible nodal curves:
//   wirtinger:     delta_0'' = 2-2g, delta_1 = 1
//   nonadmissible: delta_0'  = 2(2-2g)(2^{2g-2}-1),
//                  delta_{g-1} = delta_{1:g-1} = 2^{2g-2}-1
TestCurveRow g_curve_row(int g, GCurveVariant variant);

// a*row(lambda) - sum_x b_x*row(delta_x)
Rational intersect(const TestCurveRow& row, const RBarClass& c);

// ---- serialization ------------------------------------------------------

// {"genus": g, "parity"?: "even"|"odd", "basis": [{"label", "coefficient"}]}
// with coefficients as canonical fraction strings (RBarClass entries are the
// stored Theorem-A values, MBarClass entries the signed coefficients)
nlohmann::json to_json(const MBarClass& c);
nlohmann::json to_json(const RBarClass& c);
MBarClass mbar_from_json(const nlohmann::json& j);
RBarClass rbar_from_json(const nlohmann::json& j);

}  // namespace prym
