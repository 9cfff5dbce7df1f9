#include "prym/checks.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "prym/derivation.hpp"
#include "prym/f2.hpp"
#include "prym/hyperelliptic.hpp"
#include "prym/picard.hpp"

namespace prym::checks {

namespace {

using Clock = std::chrono::steady_clock;

// empty string from the body = pass; anything else (or a throw) pinpoints
// the first failure
CheckResult run(std::string name, std::string scale, const std::function<std::string()>& body) {
    const auto t0 = Clock::now();
    std::string fail;
    try {
        fail = body();
    } catch (const std::exception& e) {
        fail = e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool pass = fail.empty();
    return {std::move(name), pass, pass ? std::move(scale) : std::move(fail), seconds};
}

std::string format_genera(const std::vector<int>& genera) {
    std::ostringstream out;
    out << "g = ";
    for (std::size_t i = 0; i < genera.size();) {
        std::size_t j = i;
        while (j + 1 < genera.size() && genera[j + 1] == genera[j] + 1) ++j;
        if (i) out << ", ";
        if (j - i >= 2)
            out << genera[i] << ".." << genera[j];
        else
            for (std::size_t k = i; k <= j; ++k) out << genera[k] << (k < j ? ", " : "");
        i = j + 1;
    }
    return out.str();
}

std::string where(int g, const std::string& what) {
    return "genus " + std::to_string(g) + ": " + what;
}

}  // namespace

CheckResult theorem_a_reproduction(const std::vector<int>& genera) {
    return run("closed-form reproduction", format_genera(genera) + ", exact arithmetic", [&]() {
        for (int g : genera) {
            const DerivationReport r = derive_classes(g);
            for (const EquationRecord& e : r.equations)
                if (e.residue() != 0)
                    return where(g, "nonzero residue in \"" + e.name + "\" (lhs " +
                                        to_string(e.lhs) + ", rhs " + to_string(e.rhs) + ")");
            if (!r.matches_closed_form)
                return where(g, "derived coefficients differ from the closed form");
        }
        return std::string();
    });
}

CheckResult sum_identity(int g_lo, int g_hi) {
    std::string scale = "even + odd = pullback of source class, g = " + std::to_string(g_lo) +
                        ".." + std::to_string(g_hi);
    return run("even-odd sum identity", std::move(scale), [=]() {
        for (int g = g_lo; g <= g_hi; ++g) {
            const RBarClass even = theorem_a_class(g, Parity::even);
            const RBarClass odd = theorem_a_class(g, Parity::odd);
            const RBarClass pulled = pullback(teixidor_class(g));
            for (const RBasisLabel& l : rbar_basis(g))
                if (even.coeff(l) + odd.coeff(l) != pulled.coeff(l))
                    return where(g, "sum differs from pullback at " + l.text(g));
        }
        return std::string();
    });
}

CheckResult theta_census(int g_lo, int g_hi) {
    std::string scale = "both models exhaustive, g = " + std::to_string(g_lo) + ".." +
                        std::to_string(g_hi);
    return run("theta census", std::move(scale), [=]() {
        for (int g = g_lo; g <= g_hi; ++g) {
            const ParityCensus census = brute_arf_census(g);
            if (census.even != count_even(g) || census.odd != count_odd(g))
                return where(g, "quadratic-form census " + to_string(census.even) + "/" +
                                    to_string(census.odd) + " differs from closed form");
            Integer subset_even = 0, subset_total = 0;
            for (const ThetaSubset& t : enumerate_theta_classes(g)) {
                ++subset_total;
                if (parity(t) == Parity::even) ++subset_even;
            }
            if (subset_total != ipow2(2 * g) || subset_even != count_even(g))
                return where(g, "subset-model census differs from closed form");
        }
        return std::string();
    });
}

CheckResult odd_preserving_oracle(int g_exhaustive_hi, int g_sampled, int samples,
                                  std::uint64_t seed) {
    std::ostringstream scale;
    scale << "every eta for g = 2.." << g_exhaustive_hi;
    if (g_sampled > 0 && samples > 0)
        scale << ", " << samples << " seeded eta at g = " << g_sampled << " (seed " << seed << ")";
    return run("odd-preserving twist count", scale.str(), [=]() {
        for (int g = 2; g <= g_exhaustive_hi; ++g) {
            const Integer expected = count_odd_preserving(g);
            const std::uint64_t n = std::uint64_t{1} << (2 * g);
            for (std::uint64_t bits = 1; bits < n; ++bits) {
                const F2Vector eta(g, bits);
                if (count_odd_preserving(g, eta) != expected)
                    return where(g, "closed-form accessor depends on eta");
                if (brute_count_odd_preserving(g, eta) != expected)
                    return where(g, "brute count at eta bits " + std::to_string(bits) +
                                        " differs from " + to_string(expected));
            }
        }
        if (g_sampled > 0 && samples > 0) {
            const int g = g_sampled;
            const Integer expected = count_odd_preserving(g);
            const std::uint64_t n = std::uint64_t{1} << (2 * g);
            std::mt19937_64 rng(seed);
            for (int s = 0; s < samples; ++s) {
                const F2Vector eta(g, 1 + rng() % (n - 1));
                if (brute_count_odd_preserving(g, eta) != expected)
                    return where(g, "brute count at sampled eta bits " +
                                        std::to_string(eta.bits) + " differs from " +
                                        to_string(expected));
            }
        }
        return std::string();
    });
}

CheckResult genus3_classification() {
    return run("genus-3 classification", "63 classes: 28 odd-divisor, 35 even-divisor", []() {
        const ThetaSubset pencil = ThetaSubset::empty_class(3);
        int odd_count = 0, even_count = 0, total = 0;
        for (const TwoTorsionSubset& u : enumerate_torsion_classes(3)) {
            if (u.is_zero()) continue;
            ++total;
            const DivisorMembership m = classify_genus3(u);
            (m == DivisorMembership::odd_divisor ? odd_count : even_count) += 1;
            const Parity p = parity(twist_theta(pencil, u));
            const DivisorMembership by_parity = p == Parity::odd
                                                    ? DivisorMembership::odd_divisor
                                                    : DivisorMembership::even_divisor;
            if (m != by_parity)
                return "class mask " + std::to_string(u.mask) +
                       ": classification disagrees with the twisted-pencil parity";
        }
        if (total != 63 || odd_count != 28 || even_count != 35)
            return "tally " + std::to_string(total) + " = " + std::to_string(odd_count) + " + " +
                   std::to_string(even_count) + " differs from 63 = 28 + 35";
        return std::string();
    });
}

CheckResult hyperelliptic_bridge(int g_hi) {
    std::string scale = "refinement identity + census, g = 1.." + std::to_string(g_hi);
    return run("subset-form bridge", std::move(scale), [=]() {
        for (int g = 1; g <= g_hi; ++g) {
            const std::vector<TwoTorsionSubset> torsion = enumerate_torsion_classes(g);
            Integer even_total = 0;
            for (const ThetaSubset& t : enumerate_theta_classes(g)) {
                const SubsetForm q = form_from_subset(t);
                std::vector<int> values(torsion.size());
                for (std::size_t i = 0; i < torsion.size(); ++i) values[i] = q(torsion[i]);
                for (std::size_t i = 0; i < torsion.size(); ++i)
                    for (std::size_t j = 0; j < torsion.size(); ++j) {
                        const int lhs = q(add(torsion[i], torsion[j]));
                        const int rhs = values[i] ^ values[j] ^ pairing(torsion[i], torsion[j]);
                        if (lhs != rhs)
                            return where(g, "q_T is not a quadratic refinement at T mask " +
                                                std::to_string(t.mask));
                    }
                if (q.arf_parity() != parity(t))
                    return where(g, "zero-count parity differs from h0 parity at T mask " +
                                        std::to_string(t.mask));
                if (q.arf_parity() == Parity::even) ++even_total;
            }
            if (even_total != count_even(g))
                return where(g, "bridge census differs from closed form");
        }
        return std::string();
    });
}

CheckResult parity_flip_rule(int g_hi) {
    std::string scale = "all 2-point twists against all classes, g = 2.." + std::to_string(g_hi);
    return run("parity-flip rule", std::move(scale), [=]() {
        for (int g = 2; g <= g_hi; ++g) {
            const std::vector<ThetaSubset> thetas = enumerate_theta_classes(g);
            for (int i = 1; i <= 2 * g + 2; ++i)
                for (int j = i + 1; j <= 2 * g + 2; ++j) {
                    const TwoTorsionSubset u = TwoTorsionSubset::from_indices(g, {i, j});
                    for (const ThetaSubset& t : thetas) {
                        const bool flipped = parity(t) != parity(twist_theta(t, u));
                        const int common = std::popcount(t.mask & u.mask);
                        if (flipped != (common != 1))
                            return where(g, "flip rule fails for T mask " +
                                                std::to_string(t.mask) + ", U = {" +
                                                std::to_string(i) + "," + std::to_string(j) +
                                                "}");
                    }
                }
        }
        return std::string();
    });
}

CheckResult boundary_pairs_identity(int g_hi) {
    std::string scale = "matching-parity pairs = even census, 1 <= i < g <= " +
                        std::to_string(g_hi);
    return run("boundary-pairs identity", std::move(scale), [=]() {
        for (int g = 2; g <= g_hi; ++g) {
            const Integer expected = count_even(g);
            for (int i = 1; i < g; ++i) {
                const Integer total = count_boundary_pairs(g, i, PairKind::ee) +
                                      count_boundary_pairs(g, i, PairKind::oo);
                if (total != expected)
                    return where(g, "pair count at i = " + std::to_string(i) + " gives " +
                                        to_string(total) + ", expected " + to_string(expected));
            }
        }
        return std::string();
    });
}

CheckResult pushforward_bookkeeping(int g_lo, int g_hi) {
    std::string scale = "push-pull = (2^{2g}-1) * id on basis classes, g = " +
                        std::to_string(g_lo) + ".." + std::to_string(g_hi);
    return run("pushforward bookkeeping", std::move(scale), [=]() {
        for (int g = g_lo; g <= g_hi; ++g) {
            const Integer degree = ipow2(2 * g) - 1;
            std::vector<MBarClass> basis;
            MBarClass lam(g);
            lam.lambda = 1;
            basis.push_back(lam);
            MBarClass d0(g);
            d0.delta0 = 1;
            basis.push_back(d0);
            for (int i = 1; i <= g / 2; ++i) {
                MBarClass di(g);
                di.delta_i(i) = 1;
                basis.push_back(di);
            }
            for (const MBarClass& b : basis) {
                const MBarClass back = pushforward(pullback(b));
                MBarClass expected = b;
                expected.lambda *= degree;
                expected.delta0 *= degree;
                for (int i = 1; i <= g / 2; ++i) expected.delta_i(i) *= degree;
                if (!(back == expected)) return where(g, "push-pull is not multiplication by " +
                                                             to_string(degree));
            }
        }
        return std::string();
    });
}

CheckResult test_curve_identities(int g_lo, int g_hi) {
    std::string scale = "Wirtinger degree + non-admissible balance, g = " + std::to_string(g_lo) +
                        ".." + std::to_string(g_hi);
    return run("test-curve intersections", std::move(scale), [=]() {
        for (int g = g_lo; g <= g_hi; ++g) {
            const RBarClass even = theorem_a_class(g, Parity::even);
            const RBarClass odd = theorem_a_class(g, Parity::odd);
            const TestCurveRow wirtinger = g_curve_row(g, GCurveVariant::wirtinger);
            const TestCurveRow nonadmissible = g_curve_row(g, GCurveVariant::nonadmissible);
            const Rational expected = pow2(g - 3) * ((g - 3) * ipow2(g - 2) + 1);
            if (intersect(wirtinger, odd) != expected)
                return where(g, "Wirtinger degree on the odd class differs from 2^{g-3}((g-3)"
                                "2^{g-2}+1)");
            if (intersect(wirtinger, even) != 0)
                return where(g, "Wirtinger lift meets the even class");
            const Rational balance = Rational(ipow2(2 * g - 2) - 1) * expected;
            if (intersect(nonadmissible, even) != balance ||
                intersect(nonadmissible, odd) != balance)
                return where(g, "non-admissible lift does not balance between the parities");
        }
        return std::string();
    });
}

std::vector<CheckResult> acceptance_suite() {
    std::vector<int> genera;
    for (int g = 3; g <= 12; ++g) genera.push_back(g);
    genera.push_back(20);
    genera.push_back(30);
    return {
        theorem_a_reproduction(genera),
        sum_identity(3, 30),
        theta_census(1, 6),
        odd_preserving_oracle(5, 6, 50, kDefaultSeed),
        genus3_classification(),
        hyperelliptic_bridge(4),
        parity_flip_rule(5),
        boundary_pairs_identity(30),
        pushforward_bookkeeping(3, 30),
        test_curve_identities(3, 30),
    };
}

std::vector<CheckResult> verify_suite(int max_genus, std::uint64_t seed) {
    if (max_genus < 3) throw std::invalid_argument("verify_suite: need max_genus >= 3");
    const int cap = enumeration_cap();
    std::vector<int> genera;
    for (int g = 3; g <= std::min(12, max_genus); ++g) genera.push_back(g);
    if (max_genus >= 20) genera.push_back(20);
    if (max_genus >= 30) genera.push_back(30);
    if (max_genus > 12 && max_genus != 20 && max_genus != 30) genera.push_back(max_genus);
    const int census_hi = std::min({6, max_genus, cap});
    const int oddtc_hi = std::min({5, max_genus, cap});
    const bool sample6 = max_genus >= 6 && cap >= 6;
    return {
        theorem_a_reproduction(genera),
        sum_identity(3, max_genus),
        theta_census(1, census_hi),
        odd_preserving_oracle(oddtc_hi, sample6 ? 6 : 0, sample6 ? 50 : 0, seed),
        genus3_classification(),
        hyperelliptic_bridge(std::min({4, max_genus, cap})),
        parity_flip_rule(std::min({5, max_genus, cap})),
        boundary_pairs_identity(max_genus),
        pushforward_bookkeeping(3, max_genus),
        test_curve_identities(3, max_genus),
    };
}

}  // namespace prym::checks
