#pragma once

#include "ggf/gf.hpp"

namespace ggf {

/// Termination measure of one reduction state, read off the first nonbasic
/// constraint: (row count, largest positive coefficient, its multiplicity,
/// |most negative coefficient|, its multiplicity). Strictly decreases
/// lexicographically across every reduction step.
struct ReductionMeasure {
  int r = 0;
  Int M = 0;
  int e_max = 0;
  Int m_abs = 0;
  int e_min = 0;

  bool operator==(const ReductionMeasure&) const = default;
  bool operator<(const ReductionMeasure& o) const;
};

/// Measure of S's canonical reduction form (zero columns of [lambda = 0]
/// variables, gcd-reduce rows). All zeros when S has no nonbasic rows.
ReductionMeasure reduction_measure(const ConstraintSystem& S);

/// Which reduction case applies to the first constraint of a canonicalized
/// homogeneous system, with the substitution pair for a split and the
/// successor measures in evaluation order. Exposed for tests and traces.
struct ElliottCase {
  int kind = 0;     // 2 redundant-delete | 3 zero-out | 4 split
  VarId i = -1;     // split only: variable carrying the most negative coeff
  VarId j = -1;     // split only: variable carrying the largest positive coeff
  ReductionMeasure before;
  std::vector<ReductionMeasure> after;
};

/// Classifies c_1. Requires at least one nonbasic row, all rows >= with zero
/// constant (reduction form).
ElliottCase elliott_case(const ConstraintSystem& S);

struct SolveOptions {
  long step_budget = 1000000;  // reduction steps before budget_error
};

struct SolveStats {
  long steps = 0;      // reduction states evaluated (memo misses)
  long memo_hits = 0;
};

/// Full generating function of S's nonnegative integer solution set, as a
/// finite sum of +-monomial/prod(1-monomial) terms. Equalities are split into
/// inequality pairs up front; systems with nonzero constants are homogenized
/// (fresh slack variable, weight-1 coefficient extraction at the end).
/// Throws budget_error when the step budget runs out.
RationalGF solve(const ConstraintSystem& S, const SolveOptions& opts = {},
                 SolveStats* stats = nullptr);

/// Product-form shortcut: pads the nonbasic rows with basic rows [lambda_t >= 0]
/// to a square matrix C; when some padding makes C invertible with B = C^-1
/// entirely nonnegative integers, the solution set is the free monoid on B's
/// columns and the function is prod_j 1/(1 - prod_i x_i^{B[i][j]}).
/// Returns nullopt when no padding qualifies (caller falls back to solve);
/// never applies to systems with equalities, [lambda = 0] variables, nonzero
/// constants, or more rows than variables.
std::optional<RationalGF> cmatrix_fast_path(const ConstraintSystem& S);

}  // namespace ggf
