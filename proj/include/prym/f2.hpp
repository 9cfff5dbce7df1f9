#pragma once

#include <cstdint>
#include <vector>

#include "prym/rational.hpp"

namespace prym {

// parity of a theta-characteristic = Arf invariant of its quadratic form
enum class Parity { even = 0, odd = 1 };

const char* parity_name(Parity p);  // "even" / "odd"

// ceiling for the exhaustive enumerations (2^{2g} forms / subset classes
// each); default 8, overridable with the PRYMSC_ENUM_CAP environment
// variable (accepted range 1..12).
int enumeration_cap();

// point of order two in a genus-g symplectic F2-space, written in a fixed
// symplectic basis e_1..e_g, f_1..f_g with <e_i, f_j> = [i == j].
// bit i-1 of `bits` is the e_i coordinate, bit g+i-1 the f_i coordinate.
struct F2Vector {
    int genus;
    std::uint64_t bits;

    F2Vector(int g, std::uint64_t coords);
    static F2Vector zero(int g) { return {g, 0}; }
    static F2Vector basis_e(int g, int i);  // i = 1..g
    static F2Vector basis_f(int g, int i);

    std::uint64_t e_part() const { return bits & ((std::uint64_t{1} << genus) - 1); }
    std::uint64_t f_part() const { return bits >> genus; }
    bool is_zero() const { return bits == 0; }

    friend bool operator==(const F2Vector&, const F2Vector&) = default;
};

// coordinatewise sum (symmetric difference of supports)
F2Vector operator+(const F2Vector& u, const F2Vector& v);

// sum_i (u_{e_i} v_{f_i} + u_{f_i} v_{e_i}) mod 2; bilinear, alternating
int weil_pairing(const F2Vector& u, const F2Vector& v);

// quadratic refinement of the Weil pairing -- the abstract model of a
// theta-characteristic.  Stored by its 2g values on the basis, same bit
// layout as F2Vector: bit i-1 = q(e_i), bit g+i-1 = q(f_i).
struct QuadraticForm {
    int genus;
    std::uint64_t values;

    QuadraticForm(int g, std::uint64_t values_on_basis);
    static QuadraticForm zero(int g) { return {g, 0}; }

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

// value of the quadratic extension at v = (a, b):
//   q(v) = sum a_i q(e_i) + sum b_i q(f_i) + sum a_i b_i,
// the unique extension with q(u+v) = q(u) + q(v) + <u,v>.
int evaluate(const QuadraticForm& q, const F2Vector& v);

// Arf invariant sum_i q(e_i) q(f_i); 0 = even, 1 = odd
Parity arf(const QuadraticForm& q);

// the refinement q' with q'(x) = q(x) + <x, eta>; an involution for fixed
// eta, and a group action in eta
QuadraticForm twist(const QuadraticForm& q, const F2Vector& eta);

// ---- closed-form counts (no enumeration) ------------------------------

Integer count_even(int g);  // 2^{g-1}(2^g+1)
Integer count_odd(int g);   // 2^{g-1}(2^g-1)

// odd forms whose twist by a fixed eta != 0 stays odd: 2^{g-1}(2^{g-1}-1),
// independent of eta.  The eta overload rejects eta = 0 (that count would
// be count_odd, not this one).
Integer count_odd_preserving(int g);
Integer count_odd_preserving(int g, const F2Vector& eta);

enum class PairKind { ee, oo };

// parities of theta-characteristic pairs on the two sides of a reducible
// curve of type (i, g-i):
//   ee -> 2^{g-2}(2^i+1)(2^{g-i}+1),  oo -> 2^{g-2}(2^i-1)(2^{g-i}-1);
// ee + oo - 1 = degree_over_teixidor(g, even) for every 1 <= i <= g-1.
Integer count_boundary_pairs(int g, int i, PairKind kind);

// degree of the even/odd Prym divisor over the semicanonical-pencil locus:
// even -> 2^{g-1}(2^g+1)-1, odd -> 2^{g-1}(2^g-1)
Integer degree_over_teixidor(int g, Parity parity);

// ---- enumeration-scale oracles (require g <= enumeration_cap()) -------

// all 2^{2g} forms, in increasing order of the `values` bit pattern
std::vector<QuadraticForm> enumerate_forms(int g);

struct ParityCensus {
    Integer even;
    Integer odd;
};

ParityCensus brute_arf_census(int g);
Integer brute_count_odd_preserving(int g, const F2Vector& eta);  // eta != 0
Integer brute_parity_flip_count(int g, const F2Vector& eta);     // #{q : arf changes}
ParityCensus brute_twist_census(const QuadraticForm& q0);        // parities of twist(q0, eta), eta != 0

}  // namespace prym
