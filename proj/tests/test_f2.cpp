#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "prym/f2.hpp"

using namespace prym;

TEST_CASE("closed-form counts match the frozen small-genus values") {
    const long even[] = {3, 10, 36, 136, 528, 2080};
    const long odd[] = {1, 6, 28, 120, 496, 2016};
    const long preserving[] = {0, 2, 12, 56, 240};
    for (int g = 1; g <= 6; ++g) {
        CHECK(count_even(g) == even[g - 1]);
        CHECK(count_odd(g) == odd[g - 1]);
        CHECK(count_even(g) + count_odd(g) == ipow2(2 * g));
    }
    for (int g = 1; g <= 5; ++g) CHECK(count_odd_preserving(g) == preserving[g - 1]);
    // odd forms not preserved all become even: the complement is 2^{2g-2}
    for (int g = 1; g <= 16; ++g)
        CHECK(count_odd(g) - count_odd_preserving(g) == ipow2(2 * g - 2));
}

TEST_CASE("degrees over the pencil locus") {
    CHECK(degree_over_teixidor(5, Parity::even) == 527);
    CHECK(degree_over_teixidor(5, Parity::odd) == 496);
    for (int g = 3; g <= 12; ++g) {
        CHECK(degree_over_teixidor(g, Parity::even) == count_even(g) - 1);
        CHECK(degree_over_teixidor(g, Parity::odd) == count_odd(g));
        CHECK(degree_over_teixidor(g, Parity::even) + degree_over_teixidor(g, Parity::odd) ==
              ipow2(2 * g) - 1);
    }
}

TEST_CASE("boundary pair counts") {
    CHECK(count_boundary_pairs(5, 2, PairKind::ee) == 360);
    CHECK(count_boundary_pairs(5, 2, PairKind::oo) == 168);
    // gluing across a separating node: matching-parity pairs assemble exactly
    // the even characteristics of the glued curve
    for (int g = 2; g <= 12; ++g)
        for (int i = 1; i < g; ++i)
            CHECK(count_boundary_pairs(g, i, PairKind::ee) +
                      count_boundary_pairs(g, i, PairKind::oo) ==
                  count_even(g));
}

TEST_CASE("weil pairing is the standard symplectic form") {
    const int g = 3;
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j) {
            CHECK(weil_pairing(F2Vector::basis_e(g, i), F2Vector::basis_f(g, j)) == (i == j));
            CHECK(weil_pairing(F2Vector::basis_e(g, i), F2Vector::basis_e(g, j)) == 0);
            CHECK(weil_pairing(F2Vector::basis_f(g, i), F2Vector::basis_f(g, j)) == 0);
        }
    // alternating
    for (std::uint64_t bits = 0; bits < 64; ++bits)
        CHECK(weil_pairing(F2Vector(g, bits), F2Vector(g, bits)) == 0);
}

TEST_CASE("evaluate extends the basis values quadratically") {
    const int g = 2;
    const std::uint64_t n = std::uint64_t{1} << (2 * g);
    for (std::uint64_t qb = 0; qb < n; ++qb) {
        const QuadraticForm q(g, qb);
        // values on basis vectors are the stored bits
        for (int i = 1; i <= g; ++i) {
            CHECK(evaluate(q, F2Vector::basis_e(g, i)) == ((qb >> (i - 1)) & 1));
            CHECK(evaluate(q, F2Vector::basis_f(g, i)) == ((qb >> (g + i - 1)) & 1));
        }
        for (std::uint64_t u = 0; u < n; ++u)
            for (std::uint64_t v = 0; v < n; ++v) {
                const F2Vector a(g, u), b(g, v);
                CHECK(evaluate(q, a + b) ==
                      (evaluate(q, a) ^ evaluate(q, b) ^ weil_pairing(a, b)));
            }
    }
}

TEST_CASE("twist shifts values by the pairing and is an involution") {
    const int g = 3;
    const std::uint64_t n = std::uint64_t{1} << (2 * g);
    const QuadraticForm q(g, 0b101011);
    for (std::uint64_t eb = 0; eb < n; ++eb) {
        const F2Vector eta(g, eb);
        const QuadraticForm tw = twist(q, eta);
        CHECK(twist(tw, eta) == q);
        for (std::uint64_t v = 0; v < n; ++v) {
            const F2Vector x(g, v);
            CHECK(evaluate(tw, x) == (evaluate(q, x) ^ weil_pairing(x, eta)));
        }
    }
}

TEST_CASE("arf census by enumeration equals the closed form") {
    for (int g = 1; g <= 4; ++g) {
        const ParityCensus c = brute_arf_census(g);
        CHECK(c.even == count_even(g));
        CHECK(c.odd == count_odd(g));
    }
    CHECK(arf(QuadraticForm::zero(3)) == Parity::even);
}

TEST_CASE("odd-preserving twist count is eta-independent") {
    for (int g = 2; g <= 3; ++g) {
        const std::uint64_t n = std::uint64_t{1} << (2 * g);
        for (std::uint64_t eb = 1; eb < n; ++eb) {
            const F2Vector eta(g, eb);
            CHECK(brute_count_odd_preserving(g, eta) == count_odd_preserving(g));
            CHECK(count_odd_preserving(g, eta) == count_odd_preserving(g));
        }
    }
}

TEST_CASE("exactly half of all forms flip parity under a fixed nonzero twist") {
    const int g = 2;
    const std::uint64_t n = std::uint64_t{1} << (2 * g);
    for (std::uint64_t eb = 1; eb < n; ++eb)
        CHECK(brute_parity_flip_count(g, F2Vector(g, eb)) == ipow2(2 * g - 1));
}

TEST_CASE("twist census of an even form gives the pencil-locus degrees") {
    for (int g = 3; g <= 4; ++g) {
        const ParityCensus c = brute_twist_census(QuadraticForm::zero(g));
        CHECK(c.even == degree_over_teixidor(g, Parity::even));
        CHECK(c.odd == degree_over_teixidor(g, Parity::odd));
    }
}

TEST_CASE("enumerate_forms lists every form once, in value order") {
    const std::vector<QuadraticForm> forms = enumerate_forms(2);
    REQUIRE(forms.size() == 16);
    for (std::size_t k = 0; k < forms.size(); ++k) {
        CHECK(forms[k].values == k);
        CHECK(forms[k].genus == 2);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(F2Vector(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(F2Vector(2, 1 << 4), std::invalid_argument);  // bits beyond 2g
    CHECK_THROWS_AS(QuadraticForm(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(count_even(0), std::invalid_argument);
    CHECK_THROWS_AS(count_boundary_pairs(4, 4, PairKind::ee), std::invalid_argument);
    CHECK_THROWS_AS(count_odd_preserving(3, F2Vector::zero(3)), std::invalid_argument);
    CHECK_THROWS_AS(weil_pairing(F2Vector::zero(2), F2Vector::zero(3)), std::invalid_argument);
    CHECK_THROWS_AS(twist(QuadraticForm::zero(2), F2Vector::zero(3)), std::invalid_argument);
    // exhaustive enumeration beyond the cap is rejected
    const int cap = enumeration_cap();
    if (cap < 12) {
        CHECK_THROWS_AS(enumerate_forms(cap + 1), std::domain_error);
        CHECK_THROWS_AS(brute_arf_census(cap + 1), std::domain_error);
    }
}
