// Acceptance gate: nine end-to-end criteria, one PASS/FAIL line each.
// Usage: ggf_acceptance <path-to-ggf-cli>
//
// Every comparison is coefficient-exact; the only tolerances are the series
// truncation orders and wall-clock budgets pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ggf/families.hpp"
#include "ggf/gf.hpp"
#include "ggf/oracle.hpp"
#include "ggf/solver.hpp"
#include "ggf/textio.hpp"
#include "ggf/verify.hpp"

using namespace ggf;

namespace {

// Truncation orders and runtime budgets (seconds); 0 = no budget.
constexpr int kMincClosedOrder = 30, kMincEnumOrder = 18;
constexpr int kAlhcOrder = 40, kAlhcSolverOrder = 20, kAlhcSolverMaxN = 4;
constexpr int kTlhpOrder = 40, kTlhpShiftOrder = 30;
constexpr int kTworowOrder = 30, kTworowOracleOrder = 12;
constexpr double kBudget[10] = {0, 5, 30, 60, 30, 10, 300, 0, 0, 0};

std::string run_cli(const std::string& exe, const std::string& args) {
  std::string cmd = "\"" + exe + "\" " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  pclose(p);
  while (!out.empty() && (out.back() == '\n' || out.back() == ' ')) out.pop_back();
  return out;
}

bool all_ok(const std::vector<CheckResult>& rs, std::string& detail) {
  int bad = 0;
  for (const CheckResult& r : rs)
    if (!r.ok) {
      if (++bad == 1) detail = r.name + ": " + r.detail;
    }
  if (bad > 1) detail += " (+" + std::to_string(bad - 1) + " more)";
  return bad == 0;
}

bool structurally_simple(const RationalGF& f, std::string& detail) {
  if (gf_canonicalize(f) != f) {
    detail = "not in canonical form: " + render_gf(f);
    return false;
  }
  for (const SimpleTerm& t : f.terms) {
    if (t.coeff == 0) {
      detail = "zero-coefficient term in " + render_gf(f);
      return false;
    }
    for (const LaurentMonomial& m : t.den)
      if (m.is_unit()) {
        detail = "unit denominator factor in " + render_gf(f);
        return false;
      }
  }
  return true;
}

struct Gate {
  int failures = 0;

  void run(int id, const std::string& label, const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && kBudget[id] > 0 && secs > kBudget[id]) {
      ok = false;
      detail = "exceeded " + std::to_string(kBudget[id]) + "s budget";
    }
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << label;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << " (" << secs << "s)";
    if (!ok && !detail.empty()) line << " -- " << detail;
    std::cout << line.str() << "\n" << std::flush;
    if (!ok) ++failures;
  }
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: ggf_acceptance <path-to-ggf-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  Gate gate;

  gate.run(1, "bounded-growth compositions: CLI output, routes, enumeration", [&](std::string& d) {
    std::string got = run_cli(cli, "family minc --weight 6");
    const std::string want = "1 + q + 2*q^2 + 4*q^3 + 7*q^4 + 13*q^5 + 24*q^6";
    if (got != want) {
      d = "cli printed \"" + got + "\", wanted \"" + want + "\"";
      return false;
    }
    if (minc_nu_series(kMincClosedOrder) != minc_closed_series(kMincClosedOrder)) {
      d = "recurrence != closed form at q^" + std::to_string(kMincClosedOrder);
      return false;
    }
    if (minc_nu_series(kMincEnumOrder) != minc_composition_counts(kMincEnumOrder)) {
      d = "recurrence != brute-force enumeration at q^" + std::to_string(kMincEnumOrder);
      return false;
    }
    return true;
  });

  gate.run(2, "anti-lecture-hall: all routes n<=10, solver n<=4", [&](std::string& d) {
    for (int n = 1; n <= 10; ++n) {
      TruncatedSeries closed = alhc_series(n, kAlhcOrder, AlhcMode::closed);
      for (AlhcMode m : {AlhcMode::recurrence12, AlhcMode::iterated14, AlhcMode::rec15})
        if (alhc_series(n, kAlhcOrder, m) != closed) {
          d = "route disagreement at n=" + std::to_string(n);
          return false;
        }
    }
    for (int n = 1; n <= kAlhcSolverMaxN; ++n) {
      ConstraintSystem S = family_system({Family::alhc, n});
      TruncatedSeries got =
          specialize(solve(S), SpecializationMap::all_q(n), kAlhcSolverOrder);
      if (got != alhc_series(n, kAlhcSolverOrder, AlhcMode::closed)) {
        d = "solver disagreement at n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  gate.run(3, "truncated lecture-hall: routes n<=6, full-length reduction n<=5",
           [&](std::string& d) {
    for (int n = 1; n <= 6; ++n)
      for (int k = 1; k <= n; ++k)
        if (tlhp_series(n, k, kTlhpOrder, TlhpMode::recurrence20) !=
            tlhp_series(n, k, kTlhpOrder, TlhpMode::closed16)) {
          d = "route disagreement at n=" + std::to_string(n) + " k=" + std::to_string(k);
          return false;
        }
    for (int n = 1; n <= 5; ++n) {
      int offset = n * (n + 1) / 2;
      int M = kTlhpShiftOrder + offset;
      TruncatedSeries shifted = lhp_closed(n, M);
      shifted.shift(offset, 0);
      if (tlhp_series(n, n, M, TlhpMode::closed16) != shifted) {
        d = "shifted odd-parts product mismatch at n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  gate.run(4, "two-rowed plane partitions: bivariate routes n<=8, oracle n<=3",
           [&](std::string& d) {
    for (int n = 1; n <= 8; ++n)
      if (tworow_gstar(n, kTworowOrder) != tworow_gstar_closed(n, kTworowOrder)) {
        d = "bivariate route disagreement at n=" + std::to_string(n);
        return false;
      }
    for (int n = 1; n <= 3; ++n) {
      ConstraintSystem S = family_system({Family::tworow, n});
      if (count_series(S, kTworowOracleOrder) !=
          tworow_closed_series(n, kTworowOracleOrder)) {
        d = "oracle disagreement at n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  gate.run(5, "q-series identities: telescoping sums, binomial collapses",
           [&](std::string& d) { return all_ok(verify_identities(40), d); });

  gate.run(6,
           "solver vs oracle on 200 random + family systems "
           "(termination measure asserted on every step)",
           [&](std::string& d) { return all_ok(verify_random(kVerifySeed, 200), d); });

  gate.run(7, "guideline laws: split, subtraction, product, substitution bijection x100",
           [&](std::string& d) { return all_ok(verify_guideline_laws(kVerifySeed, 100), d); });

  gate.run(8, "inhomogeneous systems via homogenization x50",
           [&](std::string& d) { return all_ok(verify_inhomogeneous(kVerifySeed, 50), d); });

  gate.run(9, "structural form of solver outputs", [&](std::string& d) {
    std::vector<ConstraintSystem> systems;
    for (const char* txt : {
             "vars: a b\n2*a - b >= 0\n",
             "vars: x y z\nx - y >= 0\ny - z >= 0\n",
             "vars: x y\nx = y\n",
             "vars: x y z\nx + y - 2*z = 0\n",
             "vars: x y\n2*x - 3*y >= 1\n",
             "vars: x y\nx - y >= 0\ny >= 2\n",
         })
      systems.push_back(parse_system(txt));
    for (int n = 1; n <= 3; ++n) {
      systems.push_back(family_system({Family::minc, n}));
      systems.push_back(family_system({Family::alhc, n}));
      systems.push_back(family_system({Family::lhp, n}));
      systems.push_back(family_system({Family::tworow, n}));
      for (int k = 1; k <= n; ++k) systems.push_back(family_system({Family::tlhp, n, k}));
    }
    for (const ConstraintSystem& S : systems)
      if (!structurally_simple(solve(S), d)) return false;
    return true;
  });

  std::cout << "acceptance: " << (9 - gate.failures) << "/9 criteria passed\n";
  return gate.failures == 0 ? 0 : 1;
}
