#pragma once

#include <cstdint>
#include <vector>

#include "prym/f2.hpp"

namespace prym {

// Weierstrass-subset calculus on a genus-g hyperelliptic curve.  Subsets of
// the 2g+2 ramification indices {1..2g+2} represent divisor classes modulo
// the relation U ~ U^c.  Canonical representative: the smaller member of
// {U, U^c}; on a size tie (both g+1) the member containing index 1.
// Bit k-1 of a mask = index k.

std::uint32_t canonical_subset(int g, std::uint32_t mask);

// the 2-torsion group JC[2]: even-size subsets modulo complement
struct TwoTorsionSubset {
    int genus;
    std::uint32_t mask;  // canonical

    TwoTorsionSubset(int g, std::uint32_t raw_mask);  // |raw| must be even
    static TwoTorsionSubset zero(int g) { return {g, 0}; }
    static TwoTorsionSubset from_indices(int g, const std::vector<int>& indices);

    std::vector<int> indices() const;  // canonical member, sorted, 1-based
    bool is_zero() const { return mask == 0; }

    friend bool operator==(const TwoTorsionSubset&, const TwoTorsionSubset&) = default;
};

// theta-characteristics: subsets T with |T| == g+1 (mod 2), modulo
// complement.  The canonical member S (|S| = g-1-2r) is the fixed part of
// the normal form r*g12 + S, r = h0 - 1.
struct ThetaSubset {
    int genus;
    std::uint32_t mask;  // canonical

    ThetaSubset(int g, std::uint32_t raw_mask);
    static ThetaSubset empty_class(int g);  // requires g odd (|T| = 0 must match g+1 mod 2)
    static ThetaSubset from_indices(int g, const std::vector<int>& indices);

    std::vector<int> indices() const;

    friend bool operator==(const ThetaSubset&, const ThetaSubset&) = default;
};

// group law: symmetric difference, reduced to canonical form
TwoTorsionSubset add(const TwoTorsionSubset& u, const TwoTorsionSubset& v);

// Weil pairing in this model: |U /\ V| mod 2 (well defined modulo
// complement because |U| is even)
int pairing(const TwoTorsionSubset& u, const TwoTorsionSubset& v);

// h0 of the theta-characteristic: (g+1 - min(|T|, 2g+2-|T|)) / 2
int h0(const ThetaSubset& t);
Parity parity(const ThetaSubset& t);

// T |-> T delta U.  For U = {i,j} the parity flips iff |{i,j} /\ S| != 1
// (both points in the fixed part S, or neither); that rule is verified
// against this computation by the test suites, not assumed here.
ThetaSubset twist_theta(const ThetaSubset& t, const TwoTorsionSubset& u);

// bridge to the abstract model: q_T(U) = h0(T delta U) + h0(T) mod 2 is a
// quadratic refinement of `pairing`, with the same even/odd census as the
// QuadraticForm model.
struct SubsetForm {
    ThetaSubset base;

    int operator()(const TwoTorsionSubset& u) const;
    Parity arf_parity() const;  // by counting zeros over all of JC[2]
};

SubsetForm form_from_subset(const ThetaSubset& t);

// all 2^{2g} classes of each kind, in increasing canonical-mask order;
// enumerate_torsion_classes includes the zero class
std::vector<ThetaSubset> enumerate_theta_classes(int g);
std::vector<TwoTorsionSubset> enumerate_torsion_classes(int g);

enum class DivisorMembership { even_divisor, odd_divisor };

const char* divisor_membership_name(DivisorMembership m);

// genus-3 dichotomy of nontrivial eta: canonical |U| = 2 lies in the odd
// divisor, |U| = 4 in the even one (equivalently: the parity of the
// twisted pencil, empty-class delta U)
DivisorMembership classify_genus3(const TwoTorsionSubset& u);

// classes with h0 even and >= 2: the semicanonical pencils
std::vector<ThetaSubset> semicanonical_pencils(int g);

}  // namespace prym
