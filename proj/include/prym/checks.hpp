#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace prym::checks {

// fixed seed for the sampled g = 6 oracle runs (documented in the README;
// override with --seed on the CLI)
inline constexpr std::uint64_t kDefaultSeed = 1729;

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // one line: scale of the check, or the first failure
    double seconds;
};

// the individual verification batteries; each is exhaustive/exact at the
// requested scale and returns pass = false with a pinpointing detail string
// rather than throwing
CheckResult theorem_a_reproduction(const std::vector<int>& genera);
CheckResult sum_identity(int g_lo, int g_hi);
CheckResult theta_census(int g_lo, int g_hi);
CheckResult odd_preserving_oracle(int g_exhaustive_hi, int g_sampled, int samples,
                                  std::uint64_t seed);
CheckResult genus3_classification();
CheckResult hyperelliptic_bridge(int g_hi);
CheckResult parity_flip_rule(int g_hi);
CheckResult boundary_pairs_identity(int g_hi);
CheckResult pushforward_bookkeeping(int g_lo, int g_hi);
CheckResult test_curve_identities(int g_lo, int g_hi);

// the ten acceptance criteria at their contractual scales
std::vector<CheckResult> acceptance_suite();

// the same batteries clamped to max_genus (>= 3), for `verify --max-genus`
std::vector<CheckResult> verify_suite(int max_genus, std::uint64_t seed);

}  // namespace prym::checks
