#include "ggf/verify.hpp"

#include "ggf/families.hpp"
#include "ggf/guidelines.hpp"
#include "ggf/identities.hpp"
#include "ggf/oracle.hpp"
#include "ggf/solver.hpp"

#include <random>
#include <string>
#include <vector>

namespace ggf {

namespace {

// Bounded draw independent of std::uniform_int_distribution so seeded runs
// agree across standard libraries.
long draw(std::mt19937& g, long lo, long hi) {
  return lo + static_cast<long>(g() % static_cast<unsigned long>(hi - lo + 1));
}

void check_eq(std::vector<CheckResult>& out, std::string name, const TruncatedSeries& a,
              const TruncatedSeries& b) {
  CheckResult r;
  r.name = std::move(name);
  r.ok = (a == b);
  if (!r.ok) r.detail = "series differ: " + series_to_string(a) + " vs " + series_to_string(b);
  out.push_back(std::move(r));
}

void check_that(std::vector<CheckResult>& out, std::string name, bool ok, std::string detail) {
  out.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
}

TruncatedSeries solve_counts(const ConstraintSystem& S, int N) {
  RationalGF f = solve(S);
  return specialize(f, SpecializationMap::all_q(f.vars.size()), N);
}

ConstraintSystem random_system(std::mt19937& g, int max_n, int max_r, bool constants) {
  int n = static_cast<int>(draw(g, 1, max_n));
  int r = static_cast<int>(draw(g, constants ? 1 : 0, max_r));
  std::vector<std::string> names;
  for (int v = 1; v <= n; ++v) names.push_back("x" + std::to_string(v));
  ConstraintSystem S;
  S.vars = VarTable(names);
  S.basics.assign(n, BasicKind::GEQ0);
  for (int t = 0; t < r; ++t) {
    Constraint c;
    c.rel = Rel::GEQ;
    c.basic = false;
    for (int v = 0; v < n; ++v) c.coeffs.push_back(draw(g, -3, 3));
    c.constant = constants ? draw(g, -3, 3) : 0;
    S.nonbasic.push_back(std::move(c));
  }
  return S;
}

std::vector<FamilySpec> family_specs(int max_n) {
  std::vector<FamilySpec> out;
  for (int n = 1; n <= max_n; ++n) {
    out.push_back({Family::minc, n, 0});
    out.push_back({Family::alhc, n, 0});
    out.push_back({Family::lhp, n, 0});
    out.push_back({Family::tworow, n, 0});
    for (int k = 1; k <= n; ++k) out.push_back({Family::tlhp, n, k});
  }
  return out;
}

std::string family_tag(const FamilySpec& s) {
  switch (s.family) {
    case Family::minc:
      return "minc n=" + std::to_string(s.n);
    case Family::alhc:
      return "alhc n=" + std::to_string(s.n);
    case Family::lhp:
      return "lhp n=" + std::to_string(s.n);
    case Family::tworow:
      return "tworow n=" + std::to_string(s.n);
    case Family::tlhp:
      return "tlhp n=" + std::to_string(s.n) + " k=" + std::to_string(s.k);
  }
  return "?";
}

}  // namespace

std::vector<CheckResult> verify_identities(int N) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= 6; ++n) {
    auto tag = [n](const char* what) { return std::string(what) + " n=" + std::to_string(n); };
    auto [l1, r1] = identity_poch_sum_odd(n, N);
    check_eq(out, tag("poch-sum-odd"), l1, r1);
    auto [l2, r2] = identity_poch_sum_even(n, N);
    check_eq(out, tag("poch-sum-even"), l2, r2);
    auto [l3, r3] = identity_poch_sum_odd_weighted(n, N);
    check_eq(out, tag("poch-sum-odd-weighted"), l3, r3);
    auto [l4, r4] = identity_poch_sum_even_weighted(n, N);
    check_eq(out, tag("poch-sum-even-weighted"), l4, r4);
  }
  // Polynomial identities: both sides have degree <= C(8,2) + 8 < 100, so
  // agreement at q^100 is exact equality.
  const int M = 100;
  for (int n = 0; n <= 8; ++n) {
    auto tag = [n](const char* what) { return std::string(what) + " n=" + std::to_string(n); };
    auto [l1, r1] = identity_binom_alternating(n, M);
    check_eq(out, tag("binom-alternating"), l1, r1);
    auto [l2, r2] = identity_binom_alternating_weighted(n, M);
    check_eq(out, tag("binom-alternating-weighted"), l2, r2);
    auto [l3, r3] = identity_chu_vandermonde_limit(n, M);
    check_eq(out, tag("chu-vandermonde-limit"), l3, r3);
    auto [l4, r4] = identity_chu_vandermonde_zero(n, M);
    check_eq(out, tag("chu-vandermonde-zero"), l4, r4);
  }
  return out;
}

std::vector<CheckResult> verify_families() {
  std::vector<CheckResult> out;

  // Part-doubling compositions: three independent routes.
  check_eq(out, "minc recurrence=closed q^30", minc_nu_series(30), minc_closed_series(30));
  check_eq(out, "minc recurrence=enumeration q^18", minc_nu_series(18),
           minc_composition_counts(18));

  // Anti-lecture-hall: all modes agree and match the closed product; the
  // automatic solver reproduces the counts from the defining system.
  for (int n = 1; n <= 10; ++n) {
    TruncatedSeries closed = alhc_series(n, 40, AlhcMode::closed);
    std::string tag = " n=" + std::to_string(n) + " q^40";
    check_eq(out, "alhc recurrence=closed" + tag, alhc_series(n, 40, AlhcMode::recurrence12),
             closed);
    check_eq(out, "alhc iterated=closed" + tag, alhc_series(n, 40, AlhcMode::iterated14), closed);
    check_eq(out, "alhc rec15=closed" + tag, alhc_series(n, 40, AlhcMode::rec15), closed);
  }
  for (int n = 1; n <= 4; ++n)
    check_eq(out, "alhc solver n=" + std::to_string(n) + " q^20",
             solve_counts(family_system({Family::alhc, n, 0}), 20),
             alhc_series(n, 20, AlhcMode::closed));

  // Truncated lecture-hall: modes agree; k=n specializes to lecture-hall.
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      TruncatedSeries closed = tlhp_series(n, k, 40, TlhpMode::closed16);
      std::string tag = " n=" + std::to_string(n) + " k=" + std::to_string(k) + " q^40";
      check_eq(out, "tlhp recurrence=closed" + tag, tlhp_series(n, k, 40, TlhpMode::recurrence20),
               closed);
      check_eq(out, "tlhp jsum=closed" + tag, tlhp_series(n, k, 40, TlhpMode::iterated_jsum),
               closed);
    }
  for (int n = 1; n <= 5; ++n) {
    int shift = n * (n + 1) / 2;
    int M = 30 + shift;
    TruncatedSeries lhs = tlhp_series(n, n, M, TlhpMode::recurrence20);
    TruncatedSeries rhs = lhp_closed(n, M);
    rhs.shift(shift, 0);
    check_eq(out, "tlhp k=n matches lecture-hall n=" + std::to_string(n) + " q^30", lhs, rhs);
  }

  // Two-rowed plane partitions: bivariate recurrence vs closed form, the
  // weight specialization, and the oracle on the defining system.
  for (int n = 1; n <= 8; ++n) {
    std::string tag = " n=" + std::to_string(n);
    check_eq(out, "tworow recurrence=closed" + tag + " q^30", tworow_gstar(n, 30),
             tworow_gstar_closed(n, 30));
    check_eq(out, "tworow weight-specialization=closed" + tag + " q^30", tworow_series(n, 30),
             tworow_closed_series(n, 30));
  }
  for (int n = 1; n <= 3; ++n)
    check_eq(out, "tworow oracle n=" + std::to_string(n) + " q^12",
             count_series(family_system({Family::tworow, n, 0}), 12),
             tworow_closed_series(n, 12));

  return out;
}

std::vector<CheckResult> verify_random(unsigned long seed, int cases) {
  std::vector<CheckResult> out;
  std::mt19937 g(static_cast<std::mt19937::result_type>(seed));
  for (int t = 0; t < cases; ++t) {
    ConstraintSystem S = random_system(g, 4, 3, false);
    check_eq(out, "random homogeneous #" + std::to_string(t), solve_counts(S, 12),
             count_series(S, 12));
  }
  for (const FamilySpec& spec : family_specs(4)) {
    ConstraintSystem S = family_system(spec);
    bool force = S.nvars() > kOracleMaxVars;
    check_eq(out, "family system " + family_tag(spec), solve_counts(S, 12),
             count_series(S, 12, force));
  }
  return out;
}

std::vector<CheckResult> verify_inhomogeneous(unsigned long seed, int cases) {
  std::vector<CheckResult> out;
  std::mt19937 g(static_cast<std::mt19937::result_type>(seed));
  for (int t = 0; t < cases; ++t) {
    ConstraintSystem S = random_system(g, 3, 3, true);
    check_eq(out, "inhomogeneous #" + std::to_string(t), solve_counts(S, 12),
             count_series(S, 12));
  }
  return out;
}

namespace {

TruncatedSeries oracle_counts(const ConstraintSystem& S, int N) { return count_series(S, N); }

// The certified substitution's solution bijection: solutions of the
// substituted system map onto solutions of the original, adding a*mu_j to
// coordinate i (and to the weight).
bool g3_bijection_holds(const ConstraintSystem& S3, VarId i, VarId j, long a, int N,
                        std::string& detail) {
  ConstraintSystem T = substitute_constraint(S3, i, a, j);
  SolutionSet orig = enumerate(S3, N);
  SolutionSet sub = enumerate(T, N);
  std::vector<long> mapped_count(N + 1, 0);
  for (const auto& [w, sols] : sub.by_weight) {
    for (const std::vector<long>& mu : sols) {
      std::vector<long> lambda = mu;
      lambda[i] += a * mu[j];
      long wl = w + a * mu[j];
      if (wl > N) continue;
      for (const Constraint& c : S3.nonbasic)
        if (!holds(c, std::span<const long>(lambda))) {
          detail = "mapped point violates the original system";
          return false;
        }
      ++mapped_count[wl];
    }
  }
  for (const auto& [w, sols] : orig.by_weight) {
    if (mapped_count[w] != static_cast<long>(sols.size())) {
      detail = "count mismatch at weight " + std::to_string(w);
      return false;
    }
    for (const std::vector<long>& lambda : sols) {
      std::vector<long> mu = lambda;
      mu[i] -= a * lambda[j];
      if (mu[i] < 0) {
        detail = "reverse map leaves the orthant";
        return false;
      }
      for (const Constraint& c : T.nonbasic)
        if (!holds(c, std::span<const long>(mu))) {
          detail = "reverse-mapped point violates the substituted system";
          return false;
        }
    }
  }
  return true;
}

}  // namespace

std::vector<CheckResult> verify_guideline_laws(unsigned long seed, int cases) {
  std::vector<CheckResult> out;
  std::mt19937 g(static_cast<std::mt19937::result_type>(seed));
  const int N = 10;
  for (int t = 0; t < cases; ++t) {
    std::string tag = " #" + std::to_string(t);
    ConstraintSystem S = random_system(g, 3, 2, false);
    while (S.nvars() < 2) S = random_system(g, 3, 2, false);
    const int n = S.nvars();

    Constraint c;
    c.rel = Rel::GEQ;
    c.basic = false;
    for (int v = 0; v < n; ++v) c.coeffs.push_back(draw(g, -3, 3));
    c.constant = draw(g, -2, 2);

    // g4: branch counts add up.
    auto [with, without] = apply_g4(S, c);
    TruncatedSeries whole = oracle_counts(S, N);
    TruncatedSeries sum = oracle_counts(with, N) + oracle_counts(without, N);
    check_eq(out, "g4 additivity" + tag, whole, sum);

    // g5: removing the row it just gained undoes the addition.
    auto [relaxed, complement] = apply_g5(with, static_cast<int>(with.nonbasic.size()) - 1);
    TruncatedSeries diff = oracle_counts(relaxed, N) - oracle_counts(complement, N);
    check_eq(out, "g5 subtraction" + tag, oracle_counts(with, N), diff);

    // g2: independent subsystems multiply.
    TruncatedSeries prod = TruncatedSeries::one(N);
    for (const ConstraintSystem& comp : apply_g2(S)) prod = prod * oracle_counts(comp, N);
    check_eq(out, "g2 product" + tag, whole, prod);

    // g3: insert the side condition so the substitution is always certified,
    // then check the solution bijection.
    VarId i = static_cast<VarId>(draw(g, 0, n - 1));
    VarId j = static_cast<VarId>(draw(g, 0, n - 2));
    if (j >= i) ++j;
    long a = draw(g, 0, 2);
    ConstraintSystem S3 = S;
    Constraint side;
    side.rel = Rel::GEQ;
    side.basic = false;
    side.coeffs.assign(n, 0);
    side.coeffs[i] = 1;
    side.coeffs[j] -= a;
    S3.nonbasic.push_back(side);
    G3Application app = apply_g3(S3, i, a, j);
    std::string detail;
    bool ok = app.certified && g3_bijection_holds(S3, i, j, a, N, detail);
    check_that(out, "g3 bijection" + tag, ok,
               app.certified ? detail : "side condition unexpectedly uncertified");
  }
  return out;
}

}  // namespace ggf
