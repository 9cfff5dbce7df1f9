#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "prym/picard.hpp"

namespace prym {

// one equation of the three-step solve: lhs is recomputed from the solved
// classes (an intersection number or pushforward coefficient), rhs is the
// counting-side prediction; residue = lhs - rhs must vanish
struct EquationRecord {
    int step;  // 1 = pushforward, 2 = F-curves, 3 = G-curve lifts
    std::string name;
    Rational lhs;
    Rational rhs;

    Rational residue() const { return lhs - rhs; }
};

struct DerivationReport {
    int genus;
    RBarClass even_class;
    RBarClass odd_class;
    std::vector<EquationRecord> equations;  // in solve order
    std::vector<std::string> assumptions;   // hypotheses the solve cannot check
    bool matches_closed_form;

    bool residues_zero() const;
};

// counting side of the lifted-F-curve equations, assembled from the
// f2-theta-core counts.  Writing Noo(k) = count_odd_preserving(k) and
// Noe(k) = count_odd(k) - Noo(k) = 2^{2k-2}:
//   delta_i / even:       (g-i-1) * count_odd(g-i) * Noo(i)
//   delta_{g-i} / even:   (g-i-1) * count_odd(i) * Noo(g-i)
//   delta_{i:g-i} / even: (g-i-1) * (Noo(i) Noo(g-i) + Noe(i) Noe(g-i))
// odd variants swap the parity-matching condition (Noo <-> Noe on the
// twisted side, mixed cross terms for delta_{i:g-i}).
Rational expected_f_count(int g, int i, FCurveVariant variant, Parity p);

// Re-runs the three-step derivation at fixed g:
//   (1) a from pushforward of lambda, c by complement;
//   (2) b_i, b_{g-i}, b_{i:g-i} from the F-curve equations, d's by
//       complement against pullback(teixidor_class(g));
//   (3) d_0'' from the Wirtinger row, d_0' from the non-admissible row
//       (total split equally between the parities), d_0^ram from the
//       delta_0 pushforward relation, b_0-family by complement.
// Every consumed and implied equation is then re-evaluated on the solved
// classes and recorded; matches_closed_form compares against
// theorem_a_class coefficient by coefficient.
DerivationReport derive_classes(int g);

struct GenusVerdict {
    int genus;
    bool match;
    bool residues_zero;
};

struct RangeSummary {
    int g_min;
    int g_max;
    std::vector<GenusVerdict> per_genus;
    bool all_pass;  // every genus matched with zero residues
};

RangeSummary verify_range(int g_min, int g_max);  // requires 3 <= g_min <= g_max

nlohmann::json to_json(const EquationRecord& e);
nlohmann::json to_json(const DerivationReport& r);
nlohmann::json to_json(const RangeSummary& s);

}  // namespace prym
