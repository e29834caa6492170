#include <doctest.h>

#include "ggf/oracle.hpp"
#include "ggf/textio.hpp"

using namespace ggf;

TEST_SUITE("oracle") {
  TEST_CASE("partition chains count partitions into at most two parts") {
    ConstraintSystem S = parse_system("vars: x y\nx - y >= 0\n");
    TruncatedSeries c = count_series(S, 10);
    // Coefficient of q^d: pairs x >= y >= 0 with x + y = d, i.e. floor(d/2)+1.
    for (int d = 0; d <= 10; ++d) CHECK(c.coeff(d, 0) == d / 2 + 1);
  }

  TEST_CASE("solution sets are lex-sorted with every weight present") {
    ConstraintSystem S = parse_system("vars: x y\nx - y >= 0\n");
    SolutionSet sols = enumerate(S, 4);
    CHECK(sols.max_weight == 4);
    CHECK(sols.by_weight.size() == 5);
    std::vector<std::vector<long>> expect = {{2, 2}, {3, 1}, {4, 0}};
    CHECK(sols.by_weight.at(4) == expect);
    CHECK(sols.by_weight.at(1) == std::vector<std::vector<long>>{{1, 0}});
  }

  TEST_CASE("equalities and pinned variables restrict the search") {
    ConstraintSystem eq = parse_system("vars: x y\nx = y\n");
    TruncatedSeries c = count_series(eq, 8);
    for (int d = 0; d <= 8; ++d) CHECK(c.coeff(d, 0) == (d % 2 == 0 ? 1 : 0));

    ConstraintSystem pinned = parse_system("vars: x y\nx = 0\n");
    SolutionSet sols = enumerate(pinned, 3);
    CHECK(sols.by_weight.at(3) == std::vector<std::vector<long>>{{0, 3}});
  }

  TEST_CASE("infeasible systems enumerate to nothing") {
    ConstraintSystem S = parse_system("vars: x\n0 - x >= 1\n");
    CHECK(count_series(S, 6) == TruncatedSeries(6));
  }

  TEST_CASE("exhaustive ceilings refuse oversized inputs unless forced") {
    ConstraintSystem small = parse_system("vars: x\nx >= 0\n");
    CHECK_THROWS_AS(enumerate(small, kOracleMaxWeight + 1), error);
    CHECK_NOTHROW(enumerate(small, kOracleMaxWeight + 1, true));

    ConstraintSystem wide =
        parse_system("vars: x1 x2 x3 x4 x5 x6 x7\nx1 - x2 >= 0\n");
    CHECK_THROWS_AS(enumerate(wide, 4), error);
    CHECK_NOTHROW(enumerate(wide, 4, true));
  }

  TEST_CASE("weight slices are exact") {
    ConstraintSystem S = parse_system("vars: x y\nx - y >= 0\n");
    std::vector<std::vector<long>> expect = {{2, 1}, {3, 0}};
    CHECK(slice_polynomial(S, 3) == expect);
  }

  TEST_CASE("dumps carry one header per weight, even empty ones") {
    ConstraintSystem S = parse_system("vars: x y\nx = y\n");
    std::string text = dump_solutions(enumerate(S, 2));
    CHECK(text ==
          "# weight 0\n0 0\n"
          "# weight 1\n"
          "# weight 2\n1 1\n");
  }
}
