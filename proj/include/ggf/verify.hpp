#pragma once

#include <string>
#include <vector>

namespace ggf {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;  ///< mismatch description; empty when ok
};

inline constexpr unsigned long kVerifySeed = 20260819;

/// The q-series identity suite: the four alternating Pochhammer-quotient sums
/// for n = 1..6 compared to q^N, and the two alternating-binomial identities
/// plus their Chu-Vandermonde-specialization forms for n = 0..8, compared far
/// enough (q^100) to be exact polynomial equalities.
std::vector<CheckResult> verify_identities(int N = 40);

/// The solved families, route against route: part-doubling compositions
/// (recurrence vs closed product inverse vs direct enumeration), the
/// anti-lecture-hall modes and their closed form plus the automatic solver on
/// the defining systems, the truncated lecture-hall modes, the lecture-hall
/// specialization, and the two-rowed plane-partition recurrence vs closed
/// form plus oracle confirmation.
std::vector<CheckResult> verify_families();

/// Solver soundness: `cases` seeded random homogeneous systems (n <= 4,
/// r <= 3, coefficients in [-3,3]) plus every family system with n <= 4;
/// specialize(solve(S)) must equal the oracle's counts to q^12.
std::vector<CheckResult> verify_random(unsigned long seed, int cases);

/// Inhomogeneous path: `cases` seeded systems with constants in [-3,3];
/// solve() (which homogenizes and extracts the degree-1 slice) must match
/// oracle counts to q^12.
std::vector<CheckResult> verify_inhomogeneous(unsigned long seed, int cases);

/// Guideline laws on `cases` seeded instances, verified by oracle counts to
/// q^10: branch-and-add (g4), relax-and-subtract (g5), independent-subsystem
/// product (g2), and the weight-shifting solution bijection behind certified
/// substitutions (g3).
std::vector<CheckResult> verify_guideline_laws(unsigned long seed, int cases);

}  // namespace ggf
