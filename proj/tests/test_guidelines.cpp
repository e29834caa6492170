#include "ggf/guidelines.hpp"

#include "ggf/oracle.hpp"
#include "ggf/textio.hpp"

#include <doctest.h>

using namespace ggf;

namespace {

Constraint geq(const std::vector<long>& coeffs, long constant) {
  Constraint c;
  for (long a : coeffs) c.coeffs.push_back(a);
  c.constant = constant;
  c.rel = Rel::GEQ;
  c.basic = false;
  return c;
}

}  // namespace

TEST_SUITE("guidelines") {
  TEST_CASE("implication is certified by rational elimination") {
    ConstraintSystem S = parse_system("vars: x y\nx - y >= 0\ny >= 1\n");
    ImplicationResult r = implied(S, geq({1, 0}, -1));
    CHECK(r.status == ImplicationStatus::IMPLIED);
    CHECK(r.ok());

    // The integral negation of x >= 1 is x <= 0, so even the weaker system
    // {2x - y >= 0, y >= 1} certifies it: 2x >= y >= 1 refutes x <= 0
    // rationally. A genuinely underivable row stays UNKNOWN.
    ConstraintSystem T = parse_system("vars: x y\n2*x - y >= 0\ny >= 1\n");
    CHECK(implied(T, geq({2, 0}, -1)).ok());
    CHECK(implied(T, geq({1, 0}, -1)).ok());
    CHECK(implied(T, geq({1, -1}, 0)).status == ImplicationStatus::UNKNOWN);
  }

  TEST_CASE("member constraints are implied") {
    ConstraintSystem S = parse_system("vars: x y\n2*x - y >= 0\n");
    CHECK(implied(S, S.nonbasic[0]).ok());
  }

  TEST_CASE("unknown results carry a violating rational witness") {
    ConstraintSystem S = parse_system("vars: x y\n");
    ImplicationResult r = implied(S, geq({1, -1}, 0));
    CHECK(r.status == ImplicationStatus::UNKNOWN);
    REQUIRE(r.witness.has_value());
    CHECK((*r.witness)[0] == 0);
    CHECK((*r.witness)[1] == 1);
    // The witness satisfies S but violates c.
    CHECK((*r.witness)[0] - (*r.witness)[1] < 0);
  }

  TEST_CASE("implication soundness against exhaustive search") {
    // Whenever IMPLIED, no integer point of S violates c (searched to weight
    // 15 via the oracle on S + negate(c)).
    ConstraintSystem S = parse_system("vars: x y\n3*x - 2*y >= 0\ny >= 2\n");
    Constraint c = geq({3, -1}, -2);  // 3x - y >= 2
    ImplicationResult r = implied(S, c);
    if (r.ok()) {
      ConstraintSystem bad = S;
      bad.nonbasic.push_back(negate_constraint(c));
      SolutionSet sols = enumerate(bad, 15);
      for (auto& [w, pts] : sols.by_weight) CHECK(pts.empty());
    }
    // And an actually refutable candidate stays UNKNOWN.
    CHECK(!implied(S, geq({0, 1}, -5)).ok());
  }

  TEST_CASE("g1 is the single-variable threshold series") {
    RationalGF f = apply_g1(3);
    CHECK(render_gf(f) == "x^3 / (1 - x)");
    CHECK(render_gf(apply_g1(0)) == "1 / (1 - x)");
    VarTable vars({"a", "b"});
    CHECK(render_gf(apply_g1(vars, 1, 1)) == "b / (1 - b)");
    CHECK_THROWS_AS(apply_g1(-1), error);
  }

  TEST_CASE("g2 splits into connected components") {
    ConstraintSystem S = parse_system("vars: a b c\na - b >= 0\nc >= 2\n");
    std::vector<ConstraintSystem> comps = apply_g2(S);
    REQUIRE(comps.size() == 2);
    // {a,b} component keeps its row; c is pinned to zero there.
    CHECK(comps[0].nonbasic.size() == 1);
    CHECK(comps[0].basics[2] == BasicKind::EQ0);
    CHECK(comps[1].nonbasic.size() == 1);
    CHECK(comps[1].basics[0] == BasicKind::EQ0);
    CHECK(comps[1].basics[1] == BasicKind::EQ0);

    // Basics-only system: one singleton per variable.
    ConstraintSystem B = parse_system("vars: a b c\n");
    CHECK(apply_g2(B).size() == 3);
  }

  TEST_CASE("g2 components multiply to the joint counts") {
    ConstraintSystem S = parse_system("vars: a b c d\na - 2*b >= 0\nc + d >= 3\n");
    TruncatedSeries prod = TruncatedSeries::one(10);
    for (const ConstraintSystem& comp : apply_g2(S)) prod = prod * count_series(comp, 10);
    CHECK(prod == count_series(S, 10));
  }

  TEST_CASE("g3 requires its certificate") {
    ConstraintSystem S = parse_system("vars: x y\nx - 2*y >= 0\n");
    G3Application app = apply_g3(S, 0, 2, 1);
    CHECK(app.certified);
    CHECK(app.i == 0);
    CHECK(app.j == 1);
    CHECK(app.a == 2);
    // x - 2y >= 0 becomes x >= 0 under x <- x + 2y.
    CHECK(app.sys.nonbasic[0].coeffs[0] == 1);
    CHECK(app.sys.nonbasic[0].coeffs[1] == 0);

    CHECK_THROWS_AS(apply_g3(S, 1, 1, 0), error);  // y - x >= 0 uncertified
    G3Application forced = apply_g3(S, 1, 1, 0, true);
    CHECK(!forced.certified);
    CHECK_THROWS_AS(apply_g3(S, 0, 1, 0), error);  // i == j
  }

  TEST_CASE("g4 branches partition the count") {
    ConstraintSystem S = parse_system("vars: x y\n");
    Constraint c = geq({1, -1}, 0);  // x >= y
    auto [with, without] = apply_g4(S, c);
    TruncatedSeries a = count_series(with, 8);
    TruncatedSeries b = count_series(without, 8);
    CHECK(a + b == count_series(S, 8));
    // Weight-4 split quoted from the enumeration: 3 + 2 = 5.
    CHECK(a.coeff(4) == 3);
    CHECK(b.coeff(4) == 2);
  }

  TEST_CASE("g5 subtracts the complement of a removed row") {
    ConstraintSystem S = parse_system("vars: x y\n2*x - y >= 0\ny >= 1\n");
    auto [relaxed, complement] = apply_g5(S, 0);
    CHECK(relaxed.nonbasic.size() == 1);
    CHECK(complement.nonbasic.size() == 2);
    TruncatedSeries lhs = count_series(S, 10);
    TruncatedSeries rhs = count_series(relaxed, 10) - count_series(complement, 10);
    CHECK(lhs == rhs);
    CHECK_THROWS_AS(apply_g5(S, 2), error);
  }

  TEST_CASE("removing a redundant row leaves the counts unchanged") {
    ConstraintSystem S = parse_system("vars: x y\nx - y >= 0\ny >= 1\nx >= 1\n");
    // x >= 1 is implied; its complement branch is infeasible.
    auto [relaxed, complement] = apply_g5(S, 2);
    CHECK(count_series(complement, 10) == TruncatedSeries(10));
    CHECK(count_series(relaxed, 10) == count_series(S, 10));
  }
}
