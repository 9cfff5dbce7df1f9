#include "prym/hyperelliptic.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace prym {

namespace {

void check_genus(int g) {
    // 2g+2 index bits must fit the 32-bit masks; the enumeration cap is
    // checked separately where enumeration actually happens
    if (g < 1 || g > 14)
        throw std::invalid_argument("subset model: genus must be in 1..14, got " +
                                    std::to_string(g));
}

void check_same_genus(int a, int b) {
    if (a != b)
        throw std::invalid_argument("genus mismatch: " + std::to_string(a) + " vs " +
                                    std::to_string(b));
}

void check_cap(int g) {
    check_genus(g);
    if (g > enumeration_cap())
        throw std::domain_error("genus " + std::to_string(g) + " exceeds the enumeration cap " +
                                std::to_string(enumeration_cap()) +
                                " (override with PRYMSC_ENUM_CAP)");
}

std::uint32_t full_mask(int g) { return (std::uint32_t{1} << (2 * g + 2)) - 1; }

std::uint32_t mask_from_indices(int g, const std::vector<int>& indices) {
    std::uint32_t mask = 0;
    for (int k : indices) {
        if (k < 1 || k > 2 * g + 2)
            throw std::invalid_argument("Weierstrass index " + std::to_string(k) +
                                        " out of 1.." + std::to_string(2 * g + 2));
        const std::uint32_t bit = std::uint32_t{1} << (k - 1);
        if (mask & bit) throw std::invalid_argument("repeated Weierstrass index");
        mask |= bit;
    }
    return mask;
}

std::vector<int> indices_of(int g, std::uint32_t mask) {
    std::vector<int> out;
    for (int k = 1; k <= 2 * g + 2; ++k)
        if (mask & (std::uint32_t{1} << (k - 1))) out.push_back(k);
    return out;
}

}  // namespace

std::uint32_t canonical_subset(int g, std::uint32_t mask) {
    check_genus(g);
    if ((mask & ~full_mask(g)) != 0)
        throw std::invalid_argument("subset mask has bits beyond index 2g+2");
    const std::uint32_t comp = mask ^ full_mask(g);
    const int pm = std::popcount(mask), pc = std::popcount(comp);
    if (pm < pc) return mask;
    if (pc < pm) return comp;
    return (mask & 1u) ? mask : comp;  // tie |U| = g+1: keep the member containing index 1
}

TwoTorsionSubset::TwoTorsionSubset(int g, std::uint32_t raw_mask) : genus(g) {
    check_genus(g);
    if (std::popcount(raw_mask) % 2 != 0)
        throw std::invalid_argument("2-torsion subset must have even size");
    mask = canonical_subset(g, raw_mask);
}

TwoTorsionSubset TwoTorsionSubset::from_indices(int g, const std::vector<int>& indices) {
    return {g, mask_from_indices(g, indices)};
}

std::vector<int> TwoTorsionSubset::indices() const { return indices_of(genus, mask); }

ThetaSubset::ThetaSubset(int g, std::uint32_t raw_mask) : genus(g) {
    check_genus(g);
    if (std::popcount(raw_mask) % 2 != (g + 1) % 2)
        throw std::invalid_argument("theta subset size must be congruent to g+1 mod 2");
    mask = canonical_subset(g, raw_mask);
}

ThetaSubset ThetaSubset::empty_class(int g) {
    if (g % 2 == 0)
        throw std::invalid_argument("the empty set is a theta subset only for odd genus");
    return {g, 0};
}

ThetaSubset ThetaSubset::from_indices(int g, const std::vector<int>& indices) {
    return {g, mask_from_indices(g, indices)};
}

std::vector<int> ThetaSubset::indices() const { return indices_of(genus, mask); }

TwoTorsionSubset add(const TwoTorsionSubset& u, const TwoTorsionSubset& v) {
    check_same_genus(u.genus, v.genus);
    return {u.genus, u.mask ^ v.mask};
}

int pairing(const TwoTorsionSubset& u, const TwoTorsionSubset& v) {
    check_same_genus(u.genus, v.genus);
    // |U /\ V| mod 2; independent of representatives since |U|, |V| are even
    return std::popcount(u.mask & v.mask) & 1;
}

int h0(const ThetaSubset& t) {
    const int m = std::min(std::popcount(t.mask), 2 * t.genus + 2 - std::popcount(t.mask));
    return (t.genus + 1 - m) / 2;
}

Parity parity(const ThetaSubset& t) { return (h0(t) % 2 == 0) ? Parity::even : Parity::odd; }

ThetaSubset twist_theta(const ThetaSubset& t, const TwoTorsionSubset& u) {
    check_same_genus(t.genus, u.genus);
    return {t.genus, t.mask ^ u.mask};
}

int SubsetForm::operator()(const TwoTorsionSubset& u) const {
    check_same_genus(base.genus, u.genus);
    return (h0(twist_theta(base, u)) + h0(base)) % 2;
}

Parity SubsetForm::arf_parity() const {
    const int g = base.genus;
    check_cap(g);
    // a refinement takes value 0 exactly count_even or count_odd times,
    // according to its Arf invariant
    Integer zeros = 0;
    for (const TwoTorsionSubset& u : enumerate_torsion_classes(g))
        if ((*this)(u) == 0) ++zeros;
    if (zeros == count_even(g)) return Parity::even;
    if (zeros == count_odd(g)) return Parity::odd;
    throw std::logic_error("SubsetForm zero count matches neither parity census");
}

SubsetForm form_from_subset(const ThetaSubset& t) {
    check_cap(t.genus);
    return {t};
}

std::vector<ThetaSubset> enumerate_theta_classes(int g) {
    check_cap(g);
    std::vector<ThetaSubset> out;
    out.reserve(std::size_t{1} << (2 * g));
    const std::uint32_t full = full_mask(g);
    for (std::uint32_t m = 0; m <= full; ++m)
        if (canonical_subset(g, m) == m && std::popcount(m) % 2 == (g + 1) % 2)
            out.emplace_back(g, m);
    return out;
}

std::vector<TwoTorsionSubset> enumerate_torsion_classes(int g) {
    check_cap(g);
    std::vector<TwoTorsionSubset> out;
    out.reserve(std::size_t{1} << (2 * g));
    const std::uint32_t full = full_mask(g);
    for (std::uint32_t m = 0; m <= full; ++m)
        if (canonical_subset(g, m) == m && std::popcount(m) % 2 == 0) out.emplace_back(g, m);
    return out;
}

const char* divisor_membership_name(DivisorMembership m) {
    return m == DivisorMembership::even_divisor ? "even-divisor" : "odd-divisor";
}

DivisorMembership classify_genus3(const TwoTorsionSubset& u) {
    if (u.genus != 3) throw std::invalid_argument("classify_genus3: genus must be 3");
    if (u.is_zero()) throw std::invalid_argument("classify_genus3: eta must be nontrivial");
    // canonical nontrivial classes have |U| = 2 (difference of two
    // Weierstrass points, odd twist) or |U| = 4 (even twist)
    return std::popcount(u.mask) == 2 ? DivisorMembership::odd_divisor
                                      : DivisorMembership::even_divisor;
}

std::vector<ThetaSubset> semicanonical_pencils(int g) {
    if (g < 3) throw std::invalid_argument("semicanonical_pencils: genus must be >= 3");
    check_cap(g);
    std::vector<ThetaSubset> out;
    for (const ThetaSubset& t : enumerate_theta_classes(g)) {
        const int h = h0(t);
        if (h >= 2 && h % 2 == 0) out.push_back(t);
    }
    return out;
}

}  // namespace prym
