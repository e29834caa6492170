#include "ggf/solver.hpp"

#include "ggf/oracle.hpp"
#include "ggf/textio.hpp"

#include <doctest.h>

using namespace ggf;

namespace {

TruncatedSeries solved_counts(const ConstraintSystem& S, int N) {
  RationalGF f = solve(S);
  return specialize(f, SpecializationMap::all_q(f.vars.size()), N);
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("measure components and ordering") {
    ConstraintSystem S = parse_system("vars: x y z\n2*x + 2*y - z >= 0\nx - y >= 0\n");
    ReductionMeasure m = reduction_measure(S);
    CHECK(m.r == 2);
    CHECK(m.M == 2);
    CHECK(m.e_max == 2);
    CHECK(m.m_abs == 1);
    CHECK(m.e_min == 1);
    ReductionMeasure smaller = m;
    smaller.m_abs = 0;
    CHECK(smaller < m);
    smaller = m;
    smaller.r = 1;
    smaller.M = 99;
    CHECK(smaller < m);  // lexicographic: r dominates
  }

  TEST_CASE("case classification") {
    // All-nonnegative first row is redundant.
    ConstraintSystem a = parse_system("vars: x y\nx + y >= 0\nx - y >= 0\n");
    ElliottCase ca = elliott_case(a);
    CHECK(ca.kind == 2);
    REQUIRE(ca.after.size() == 1);
    CHECK(ca.after[0] < ca.before);

    // All-nonpositive first row zeroes its support.
    ConstraintSystem b = parse_system("vars: x y\n0 - x - 2*y >= 0\n");
    ElliottCase cb = elliott_case(b);
    CHECK(cb.kind == 3);
    REQUIRE(cb.after.size() == 1);
    CHECK(cb.after[0] < cb.before);

    // Mixed row splits; lowest indices attaining M and m win.
    ConstraintSystem c = parse_system("vars: x y\n2*x - y >= 0\n");
    ElliottCase cc = elliott_case(c);
    CHECK(cc.kind == 4);
    CHECK(cc.j == 0);  // coefficient M = 2
    CHECK(cc.i == 1);  // coefficient m = -1
    CHECK(cc.after.size() == 3);  // branch A, relaxed B, pinned B
    for (const ReductionMeasure& after : cc.after) CHECK(after < cc.before);

    CHECK_THROWS_AS(elliott_case(parse_system("vars: x\n")), error);
  }

  TEST_CASE("base case: basics only") {
    CHECK(render_gf(solve(parse_system("vars: x1 x2\n"))) == "1 / (1 - x2) / (1 - x1)");
    ConstraintSystem S = parse_system("vars: x y\ny = 0\n");
    CHECK(render_gf(solve(S)) == "1 / (1 - x)");
  }

  TEST_CASE("partitions into at most two parts") {
    ConstraintSystem S = parse_system("vars: x1 x2\nx1 - x2 >= 0\n");
    RationalGF f = solve(S);
    CHECK(render_gf(f) == "1 / (1 - x1) / (1 - x1*x2)");
    TruncatedSeries s = specialize(f, SpecializationMap::all_q(2), 10);
    for (int d = 0; d <= 10; ++d) CHECK(s.coeff(d) == d / 2 + 1);
  }

  TEST_CASE("solver matches the oracle on assorted shapes") {
    const char* files[] = {
        "vars: x y\n2*x - y >= 0\n",                    // ratio constraint
        "vars: x y z\nx - y >= 0\ny - z >= 0\n",        // chain
        "vars: x y\nx - y = 0\n",                       // equality
        "vars: x y z\nx + y - 2*z = 0\n",               // balanced equality
        "vars: x y\nx + y >= 3\n",                      // inhomogeneous
        "vars: x y\nx - y >= 1\ny >= 1\n",              // strict-shifted
        "vars: x y\nx = 0\n2*y - x >= 0\n",             // EQ0 basic in play
        "vars: x y z\n2*x - y - z >= 0\nz - x >= 0\n",  // mixed signs
    };
    for (const char* text : files) {
      CAPTURE(text);
      ConstraintSystem S = parse_system(text);
      CHECK(solved_counts(S, 12) == count_series(S, 12));
    }
  }

  TEST_CASE("infeasible systems have the zero function") {
    ConstraintSystem S = parse_system("vars: x\n0 - x >= 1\n");
    CHECK(solve(S).is_zero());
  }

  TEST_CASE("solve reports steps and honors the budget") {
    ConstraintSystem S = parse_system("vars: a b c\n3*a - 2*b - c >= 0\n2*b - 3*c >= 0\n");
    SolveStats stats;
    RationalGF f = solve(S, {}, &stats);
    CHECK(stats.steps > 0);
    SolveOptions tight;
    tight.step_budget = 2;
    CHECK_THROWS_AS(solve(S, tight), budget_error);
    // A fresh call resets the counters.
    SolveStats again;
    solve(S, {}, &again);
    CHECK(again.steps == stats.steps);
    CHECK(specialize(f, SpecializationMap::all_q(3), 12) == count_series(S, 12));
  }

  TEST_CASE("fast path inverts unimodular-like systems") {
    ConstraintSystem S = parse_system("vars: x1 x2\nx1 - x2 >= 0\n");
    auto f = cmatrix_fast_path(S);
    REQUIRE(f.has_value());
    CHECK(render_gf(*f) == "1 / (1 - x1) / (1 - x1*x2)");
    CHECK(*f == solve(S));

    // Identity matrix: plain product.
    ConstraintSystem I = parse_system("vars: x y\nx >= 0\ny >= 0\n");
    auto g = cmatrix_fast_path(I);
    REQUIRE(g.has_value());
    CHECK(render_gf(*g) == "1 / (1 - y) / (1 - x)");
  }

  TEST_CASE("fast path declines non-integral inverses and bad shapes") {
    // B would contain 1/2.
    CHECK(!cmatrix_fast_path(parse_system("vars: x y\n2*x - y >= 0\n")).has_value());
    // Inhomogeneous.
    CHECK(!cmatrix_fast_path(parse_system("vars: x y\nx - y >= 1\n")).has_value());
    // Equality rows.
    CHECK(!cmatrix_fast_path(parse_system("vars: x y\nx - y = 0\n")).has_value());
    // More rows than variables.
    CHECK(!cmatrix_fast_path(parse_system("vars: x y\nx - y >= 0\ny - x >= 0\nx + y >= 0\n"))
               .has_value());
  }

  TEST_CASE("fast path agrees with the reduction when it fires") {
    const char* files[] = {
        "vars: x y z\nx - y >= 0\ny - z >= 0\n",
        "vars: x y z\nx - z >= 0\n",
        "vars: a b\na - b >= 0\na + b >= 0\n",
    };
    for (const char* text : files) {
      CAPTURE(text);
      ConstraintSystem S = parse_system(text);
      auto f = cmatrix_fast_path(S);
      if (!f) continue;
      RationalGF g = solve(S);
      int n = S.nvars();
      CHECK(specialize(*f, SpecializationMap::all_q(n), 15) ==
            specialize(g, SpecializationMap::all_q(n), 15));
    }
  }

  TEST_CASE("outputs have corollary shape") {
    const char* files[] = {
        "vars: x y\n2*x - y >= 0\ny >= 1\n",
        "vars: x y z\n2*x - y - z >= 0\n",
        "vars: x y\nx + y >= 3\n",
    };
    for (const char* text : files) {
      ConstraintSystem S = parse_system(text);
      RationalGF f = solve(S);
      for (const SimpleTerm& t : f.terms) {
        CHECK(t.coeff != 0);
        for (const LaurentMonomial& m : t.den) CHECK(!m.is_unit());
      }
      CHECK(gf_canonicalize(f) == f);
    }
  }

  TEST_CASE("equalities count like their paired inequalities") {
    ConstraintSystem S = parse_system("vars: x y\nx - y = 0\n");
    TruncatedSeries s = solved_counts(S, 8);
    // Only the diagonal points (k, k): one per even weight.
    for (int d = 0; d <= 8; ++d) CHECK(s.coeff(d) == (d % 2 == 0 ? 1 : 0));
  }

  TEST_CASE("inhomogeneous systems go through the degree-one slice") {
    ConstraintSystem S = parse_system("vars: x y\nx + y >= 3\n");
    RationalGF f = solve(S);
    // No trace of the homogenization variable remains.
    CHECK(f.vars.size() == 2);
    CHECK(f.vars.find("_0") == -1);
    CHECK(solved_counts(S, 12) == count_series(S, 12));
  }
}
