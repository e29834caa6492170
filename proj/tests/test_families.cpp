#include <doctest.h>

#include "ggf/families.hpp"
#include "ggf/oracle.hpp"
#include "ggf/series.hpp"
#include "ggf/solver.hpp"
#include "ggf/textio.hpp"

using namespace ggf;

TEST_SUITE("families") {
  TEST_CASE("family systems have the documented shape") {
    ConstraintSystem minc3 = family_system({Family::minc, 3});
    CHECK(minc3.vars.names() == std::vector<std::string>{"l1", "l2", "l3"});
    CHECK(canonical_key(minc3) ==
          canonical_key(parse_system("vars: l1 l2 l3\n"
                                     "2*l1 - l2 >= 0\n"
                                     "2*l2 - l3 >= 0\n"
                                     "l3 >= 1\n")));

    ConstraintSystem alhc3 = family_system({Family::alhc, 3});
    CHECK(canonical_key(alhc3) ==
          canonical_key(parse_system("vars: l1 l2 l3\n"
                                     "2*l1 - l2 >= 0\n"
                                     "3*l2 - 2*l3 >= 0\n")));

    ConstraintSystem lhp2 = family_system({Family::lhp, 2});
    CHECK(canonical_key(lhp2) == canonical_key(parse_system("vars: l1 l2\n"
                                                            "l1 - 2*l2 >= 0\n")));

    ConstraintSystem tworow2 = family_system({Family::tworow, 2});
    CHECK(tworow2.vars.names() == std::vector<std::string>{"a1", "a2", "b1", "b2"});

    ConstraintSystem tlhp11 = family_system({Family::tlhp, 1, 1});
    CHECK(tlhp11.vars.size() == 1);
  }

  TEST_CASE("family parameters are validated") {
    CHECK_THROWS_AS(family_system({Family::minc, 0}), error);
    CHECK_THROWS_AS(family_system({Family::lhp, -2}), error);
    CHECK_THROWS_AS(family_system({Family::tlhp, 3, 0}), error);
    CHECK_THROWS_AS(family_system({Family::tlhp, 3, 4}), error);
  }

  TEST_CASE("bounded-growth composition counts: 1, 1, 2, 4, 7, 13, 24") {
    const std::string want = "1 + q + 2*q^2 + 4*q^3 + 7*q^4 + 13*q^5 + 24*q^6";
    CHECK(series_to_string(minc_nu_series(6)) == want);
    CHECK(series_to_string(minc_closed_series(6)) == want);
    CHECK(series_to_string(minc_composition_counts(6)) == want);
  }

  TEST_CASE("length-2 bounded-growth system matches enumeration") {
    ConstraintSystem S = family_system({Family::minc, 2});
    RationalGF f = solve(S);
    CHECK(specialize(f, SpecializationMap::all_q(2), 12) == count_series(S, 12));
  }

  TEST_CASE("anti-lecture-hall n=1 counts every composition once per weight") {
    TruncatedSeries a = alhc_series(1, 12, AlhcMode::closed);
    for (int d = 0; d <= 12; ++d) CHECK(a.coeff(d, 0) == 1);
  }

  TEST_CASE("anti-lecture-hall evaluation routes agree") {
    for (int n : {2, 3}) {
      TruncatedSeries closed = alhc_series(n, 25, AlhcMode::closed);
      CHECK(alhc_series(n, 25, AlhcMode::recurrence12) == closed);
      CHECK(alhc_series(n, 25, AlhcMode::iterated14) == closed);
      CHECK(alhc_series(n, 25, AlhcMode::rec15) == closed);
    }
  }

  TEST_CASE("anti-lecture-hall bivariate collapses to the counting series") {
    TruncatedSeries b = alhc_bivariate(2, 12);
    CHECK(b.set_s_to_power_of_q(1) == alhc_series(2, 12, AlhcMode::recurrence12));
  }

  TEST_CASE("truncated lecture-hall routes agree") {
    TruncatedSeries closed = tlhp_series(4, 2, 25, TlhpMode::closed16);
    CHECK(tlhp_series(4, 2, 25, TlhpMode::recurrence20) == closed);
    CHECK(tlhp_series(4, 2, 25, TlhpMode::iterated_jsum) == closed);
  }

  TEST_CASE("full-length truncated lecture-hall is the shifted partition product") {
    // Lbar_{n,n} starts at the staircase weight n(n+1)/2.
    TruncatedSeries shifted = lhp_closed(3, 20);
    shifted.shift(6, 0);
    CHECK(tlhp_series(3, 3, 20, TlhpMode::closed16) == shifted);
  }

  TEST_CASE("lecture-hall system counts match the odd-parts product") {
    ConstraintSystem S = family_system({Family::lhp, 2});
    CHECK(count_series(S, 12) == lhp_closed(2, 12));
  }

  TEST_CASE("two-rowed plane partitions, n=1: parts of size one and two") {
    TruncatedSeries p = tworow_series(1, 10);
    long want[] = {1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6};
    for (int d = 0; d <= 10; ++d) CHECK(p.coeff(d, 0) == want[d]);
  }

  TEST_CASE("two-rowed recurrence agrees with the closed product") {
    CHECK(tworow_gstar(2, 15) == tworow_gstar_closed(2, 15));
    CHECK(tworow_series(3, 20) == tworow_closed_series(3, 20));
  }

  TEST_CASE("odd-parts product values") {
    TruncatedSeries p = lhp_closed(2, 10);
    // 1/((1-q)(1-q^3)): coefficient at d counts d = a + 3b.
    CHECK(p.coeff(0, 0) == 1);
    CHECK(p.coeff(3, 0) == 2);
    CHECK(p.coeff(9, 0) == 4);
  }
}
