#include "prym/f2.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace prym {

namespace {

constexpr int kMaxGenus = 32;  // 2g coordinate bits must fit in 64

void check_genus(int g) {
    if (g < 1 || g > kMaxGenus)
        throw std::invalid_argument("genus must be in 1.." + std::to_string(kMaxGenus) +
                                    ", got " + std::to_string(g));
}

void check_bits(int g, std::uint64_t bits) {
    check_genus(g);
    if (g < kMaxGenus && (bits >> (2 * g)) != 0)
        throw std::invalid_argument("coordinate bits exceed 2g = " + std::to_string(2 * g));
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

int parity_bit(std::uint64_t x) { return std::popcount(x) & 1; }

}  // namespace

const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

int enumeration_cap() {
    static const int cap = [] {
        const char* env = std::getenv("PRYMSC_ENUM_CAP");
        if (env == nullptr || *env == '\0') return 8;
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == nullptr || *end != '\0' || v < 1 || v > 12)
            throw std::invalid_argument("PRYMSC_ENUM_CAP must be an integer in 1..12");
        return static_cast<int>(v);
    }();
    return cap;
}

F2Vector::F2Vector(int g, std::uint64_t coords) : genus(g), bits(coords) {
    check_bits(g, coords);
}

F2Vector F2Vector::basis_e(int g, int i) {
    check_genus(g);
    if (i < 1 || i > g) throw std::invalid_argument("basis index out of range");
    return {g, std::uint64_t{1} << (i - 1)};
}

F2Vector F2Vector::basis_f(int g, int i) {
    check_genus(g);
    if (i < 1 || i > g) throw std::invalid_argument("basis index out of range");
    return {g, std::uint64_t{1} << (g + i - 1)};
}

F2Vector operator+(const F2Vector& u, const F2Vector& v) {
    check_same_genus(u.genus, v.genus);
    return {u.genus, u.bits ^ v.bits};
}

int weil_pairing(const F2Vector& u, const F2Vector& v) {
    check_same_genus(u.genus, v.genus);
    return parity_bit(u.e_part() & v.f_part()) ^ parity_bit(u.f_part() & v.e_part());
}

QuadraticForm::QuadraticForm(int g, std::uint64_t values_on_basis)
    : genus(g), values(values_on_basis) {
    check_bits(g, values_on_basis);
}

int evaluate(const QuadraticForm& q, const F2Vector& v) {
    check_same_genus(q.genus, v.genus);
    const std::uint64_t qe = q.values & ((std::uint64_t{1} << q.genus) - 1);
    const std::uint64_t qf = q.values >> q.genus;
    const std::uint64_t a = v.e_part();
    const std::uint64_t b = v.f_part();
    return parity_bit(a & qe) ^ parity_bit(b & qf) ^ parity_bit(a & b);
}

Parity arf(const QuadraticForm& q) {
    const std::uint64_t qe = q.values & ((std::uint64_t{1} << q.genus) - 1);
    const std::uint64_t qf = q.values >> q.genus;
    return parity_bit(qe & qf) ? Parity::odd : Parity::even;
}

QuadraticForm twist(const QuadraticForm& q, const F2Vector& eta) {
    check_same_genus(q.genus, eta.genus);
    // q'(e_i) = q(e_i) + eta_{f_i}, q'(f_i) = q(f_i) + eta_{e_i}: adding
    // <x, eta> toggles the basis values by the swapped halves of eta
    const int g = q.genus;
    const std::uint64_t swapped = (eta.f_part()) | (eta.e_part() << g);
    return {g, q.values ^ swapped};
}

Integer count_even(int g) {
    if (g < 1) throw std::invalid_argument("count_even: genus must be >= 1");
    return ipow2(g - 1) * (ipow2(g) + 1);
}

Integer count_odd(int g) {
    if (g < 1) throw std::invalid_argument("count_odd: genus must be >= 1");
    return ipow2(g - 1) * (ipow2(g) - 1);
}

Integer count_odd_preserving(int g) {
    if (g < 1) throw std::invalid_argument("count_odd_preserving: genus must be >= 1");
    return ipow2(g - 1) * (ipow2(g - 1) - 1);
}

Integer count_odd_preserving(int g, const F2Vector& eta) {
    check_same_genus(g, eta.genus);
    if (eta.is_zero())
        throw std::invalid_argument(
            "count_odd_preserving: eta must be nonzero (for eta = 0 the count is count_odd)");
    return count_odd_preserving(g);
}

Integer count_boundary_pairs(int g, int i, PairKind kind) {
    if (i < 1 || i > g - 1)
        throw std::invalid_argument("count_boundary_pairs: need 1 <= i <= g-1");
    if (kind == PairKind::ee) return ipow2(g - 2) * (ipow2(i) + 1) * (ipow2(g - i) + 1);
    return ipow2(g - 2) * (ipow2(i) - 1) * (ipow2(g - i) - 1);
}

Integer degree_over_teixidor(int g, Parity parity) {
    if (g < 3) throw std::invalid_argument("degree_over_teixidor: genus must be >= 3");
    if (parity == Parity::even) return count_even(g) - 1;
    return count_odd(g);
}

std::vector<QuadraticForm> enumerate_forms(int g) {
    check_cap(g);
    const std::uint64_t n = std::uint64_t{1} << (2 * g);
    std::vector<QuadraticForm> forms;
    forms.reserve(n);
    for (std::uint64_t v = 0; v < n; ++v) forms.emplace_back(g, v);
    return forms;
}

ParityCensus brute_arf_census(int g) {
    check_cap(g);
    const std::uint64_t n = std::uint64_t{1} << (2 * g);
    std::uint64_t even = 0;
    for (std::uint64_t v = 0; v < n; ++v)
        if (arf(QuadraticForm(g, v)) == Parity::even) ++even;
    return {Integer(static_cast<unsigned long>(even)),
            Integer(static_cast<unsigned long>(n - even))};
}

Integer brute_count_odd_preserving(int g, const F2Vector& eta) {
    check_cap(g);
    check_same_genus(g, eta.genus);
    if (eta.is_zero()) throw std::invalid_argument("brute_count_odd_preserving: eta must be nonzero");
    const std::uint64_t n = std::uint64_t{1} << (2 * g);
    std::uint64_t count = 0;
    for (std::uint64_t v = 0; v < n; ++v) {
        QuadraticForm q(g, v);
        if (arf(q) == Parity::odd && arf(twist(q, eta)) == Parity::odd) ++count;
    }
    return Integer(static_cast<unsigned long>(count));
}

Integer brute_parity_flip_count(int g, const F2Vector& eta) {
    check_cap(g);
    check_same_genus(g, eta.genus);
    const std::uint64_t n = std::uint64_t{1} << (2 * g);
    std::uint64_t count = 0;
    for (std::uint64_t v = 0; v < n; ++v) {
        QuadraticForm q(g, v);
        if (arf(q) != arf(twist(q, eta))) ++count;
    }
    return Integer(static_cast<unsigned long>(count));
}

ParityCensus brute_twist_census(const QuadraticForm& q0) {
    const int g = q0.genus;
    check_cap(g);
    const std::uint64_t n = std::uint64_t{1} << (2 * g);
    std::uint64_t even = 0;
    for (std::uint64_t e = 1; e < n; ++e)
        if (arf(twist(q0, F2Vector(g, e))) == Parity::even) ++even;
    return {Integer(static_cast<unsigned long>(even)),
            Integer(static_cast<unsigned long>(n - 1 - even))};
}

}  // namespace prym
