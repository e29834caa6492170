#pragma once

#include <map>

#include "ggf/series.hpp"

namespace ggf {

/// Ground truth by exhaustive enumeration: all nonnegative integer solutions
/// of a constraint system, grouped by weight (= coordinate sum).
struct SolutionSet {
  int max_weight = 0;
  // weight -> lex-sorted solution vectors (every weight 0..max_weight present)
  std::map<int, std::vector<std::vector<long>>> by_weight;
};

/// Exhaustive ceilings; enumeration refuses larger inputs unless forced.
constexpr int kOracleMaxWeight = 20;
constexpr int kOracleMaxVars = 6;

/// Depth-first search over lambda_1..lambda_n with residual-weight bounds and
/// pruning of constraints that are already violated and can only decrease
/// (all remaining coefficients nonpositive). EQ rows are checked as two
/// inequalities; EQ0 basics pin their variable to 0.
SolutionSet enumerate(const ConstraintSystem& S, int N, bool force = false);

/// Solutions-per-weight counts as a univariate series.
TruncatedSeries count_series(const ConstraintSystem& S, int N, bool force = false);

/// The weight-N slice: every solution of weight exactly N, lex-sorted.
std::vector<std::vector<long>> slice_polynomial(const ConstraintSystem& S, int N,
                                                bool force = false);

/// One vector per line, space-separated, under `# weight w` headers.
std::string dump_solutions(const SolutionSet& sols);

}  // namespace ggf
