#include "ggf/core.hpp"

#include "ggf/oracle.hpp"
#include "ggf/textio.hpp"

#include <doctest.h>

#include <random>

using namespace ggf;

TEST_SUITE("core") {
  TEST_CASE("var table lookup") {
    VarTable vars({"a", "b", "c"});
    CHECK(vars.size() == 3);
    CHECK(vars.find("b") == 1);
    CHECK(vars.find("z") == -1);
    CHECK(vars.name(2) == "c");
    CHECK(vars.push("d") == 3);
    CHECK_THROWS_AS(vars.push("a"), error);
  }

  TEST_CASE("integerize clears denominators and folds strictness") {
    // x/3 >= y/2  ->  2x - 3y >= 0
    RawConstraint raw;
    raw.rel = RawConstraint::R::GE;
    raw.coeffs = {Rat(1, 3), Rat(-1, 2)};
    raw.constant = 0;
    Constraint c = integerize(raw);
    CHECK(c.coeffs[0] == 2);
    CHECK(c.coeffs[1] == -3);
    CHECK(c.constant == 0);
    CHECK(c.rel == Rel::GEQ);

    // y/2 > 0  ->  y >= 1
    raw.coeffs = {Rat(0), Rat(1, 2)};
    raw.rel = RawConstraint::R::GT;
    c = integerize(raw);
    CHECK(c.coeffs[0] == 0);
    CHECK(c.coeffs[1] == 1);
    CHECK(c.constant == -1);

    // x < 5/2  ->  5 - 2x > 0  ->  2x <= 4 ... -2x + 4 >= 0 gcd -> -x + 2 >= 0
    raw.coeffs = {Rat(1), Rat(0)};
    raw.constant = Rat(-5, 2);
    raw.rel = RawConstraint::R::LT;
    c = integerize(raw);
    CHECK(c.coeffs[0] == -1);
    CHECK(c.constant == 2);
  }

  TEST_CASE("negation is an involution that splits integer points") {
    Constraint c;
    c.coeffs = {Int(2), Int(-3)};
    c.constant = 1;
    c.rel = Rel::GEQ;
    Constraint nc = negate_constraint(c);
    CHECK(nc.coeffs[0] == -2);
    CHECK(nc.coeffs[1] == 3);
    CHECK(nc.constant == -2);
    Constraint back = negate_constraint(nc);
    CHECK(back.coeffs == c.coeffs);
    CHECK(back.constant == c.constant);
    for (long x = 0; x <= 4; ++x)
      for (long y = 0; y <= 4; ++y) {
        std::vector<long> p{x, y};
        CHECK(holds(c, std::span<const long>(p)) != holds(nc, std::span<const long>(p)));
      }
    Constraint eq = c;
    eq.rel = Rel::EQ;
    CHECK_THROWS_AS(negate_constraint(eq), error);
  }

  TEST_CASE("substitution rewrites the replaced variable's coefficient") {
    // l1 - l2 >= 0 under l1 <- l1 + 1*l2 becomes l1 >= 0.
    ConstraintSystem S = parse_system("vars: l1 l2\nl1 - l2 >= 0\n");
    ConstraintSystem T = substitute_constraint(S, 0, 1, 1);
    CHECK(T.nonbasic[0].coeffs[0] == 1);
    CHECK(T.nonbasic[0].coeffs[1] == 0);
    CHECK(T.basics == S.basics);
    // a = 0 is the identity.
    ConstraintSystem U = substitute_constraint(S, 0, 0, 1);
    CHECK(canonical_key(U) == canonical_key(S));
  }

  TEST_CASE("homogenize absorbs constants into a fresh last variable") {
    ConstraintSystem S = parse_system("vars: x y\nx + y >= 3\n");
    auto [H, v0] = homogenize(S);
    CHECK(H.nvars() == 3);
    CHECK(v0 == 2);
    CHECK(H.vars.name(v0) == "_0");
    CHECK(H.nonbasic[0].coeffs[v0] == 3 * -1);
    CHECK(H.nonbasic[0].constant == 0);
    CHECK(H.basics[v0] == BasicKind::GEQ0);
  }

  TEST_CASE("homogenize renames on collision") {
    ConstraintSystem S = parse_system("vars: _0 y\n_0 + y >= 1\n");
    auto [H, v0] = homogenize(S);
    CHECK(H.vars.name(v0) == "_0_");
  }

  TEST_CASE("gcd reduction normalizes rows") {
    Constraint c;
    c.coeffs = {Int(4), Int(-6)};
    c.constant = 2;
    c.rel = Rel::GEQ;
    Constraint r = gcd_reduce(c);
    CHECK(r.coeffs[0] == 2);
    CHECK(r.coeffs[1] == -3);
    CHECK(r.constant == 1);
  }

  TEST_CASE("column canonicalization zeroes dead columns and keeps order") {
    ConstraintSystem S = parse_system("vars: x y z\ny = 0\n2*x - 4*y + 2*z >= 0\nx - z >= 0\n");
    ConstraintSystem C = canonicalize_columns(S);
    // y's column is dead: its coefficients are dropped before gcd reduction.
    CHECK(C.nonbasic[0].coeffs[0] == 1);
    CHECK(C.nonbasic[0].coeffs[1] == 0);
    CHECK(C.nonbasic[0].coeffs[2] == 1);
    CHECK(C.nonbasic[1].coeffs[0] == 1);
    CHECK(C.nonbasic[1].coeffs[2] == -1);
    // Idempotent, and keyed identically.
    CHECK(canonical_key(canonicalize_columns(C)) == canonical_key(C));
  }

  TEST_CASE("normalize is reproduced by render/parse round trips") {
    std::mt19937 g(7);
    for (int t = 0; t < 25; ++t) {
      ConstraintSystem S;
      int n = 1 + static_cast<int>(g() % 3);
      std::vector<std::string> names;
      for (int v = 1; v <= n; ++v) names.push_back("x" + std::to_string(v));
      S.vars = VarTable(names);
      S.basics.assign(n, BasicKind::GEQ0);
      int r = static_cast<int>(g() % 3);
      for (int i = 0; i < r; ++i) {
        Constraint c;
        c.rel = (g() % 4 == 0) ? Rel::EQ : Rel::GEQ;
        for (int v = 0; v < n; ++v) c.coeffs.push_back(static_cast<long>(g() % 7) - 3);
        c.constant = static_cast<long>(g() % 5) - 2;
        S.nonbasic.push_back(std::move(c));
      }
      ConstraintSystem T = parse_system(render_system(S));
      CHECK(render_system(T) == render_system(parse_system(render_system(T))));
    }
  }

  TEST_CASE("holds evaluates both relations") {
    Constraint c;
    c.coeffs = {Int(1), Int(-1)};
    c.constant = 0;
    c.rel = Rel::EQ;
    std::vector<long> eq{2, 2}, neq{2, 1};
    CHECK(holds(c, std::span<const long>(eq)));
    CHECK(!holds(c, std::span<const long>(neq)));
    c.rel = Rel::GEQ;
    CHECK(holds(c, std::span<const long>(neq)));
  }
}
