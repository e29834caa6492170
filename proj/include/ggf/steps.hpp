#pragma once

#include "ggf/guidelines.hpp"
#include "ggf/solver.hpp"

#include <string>

namespace ggf {

struct StepsResult {
  RationalGF gf;
  std::string trace;  ///< one block per executed command, newline-terminated
};

/// Executes a line-oriented derivation script against S and returns the
/// resulting generating function plus a human-readable trace. `#` starts a
/// comment. Commands:
///
///   g1                     finish the current branch: every nonbasic row must
///                          be a single-variable threshold [x >= t] (coeff 1,
///                          t >= 0, at most one per variable); the branch GF
///                          is the product of x^t/(1-x) factors
///   g2                     split the current branch into independent
///                          subsystems; they are derived left to right and
///                          their GFs multiplied
///   g3 <i> <a> <j> [assume]
///                          substitute lambda_i <- lambda_i + a*lambda_j
///                          (variables by name); requires the certified side
///                          condition lambda_i - a*lambda_j >= 0 unless
///                          `assume` is given
///   g4 <constraint>        branch on a constraint; the current branch gains
///                          it, the complement branch (derived after it
///                          finishes) gains its negation, and the GFs add
///   g5 remove <idx>        remove nonbasic row <idx>; the relaxed system is
///                          derived first, then the relaxed system plus the
///                          negated row, and the GFs subtract
///   add <constraint> [assume]
///                          insert a redundant constraint (must be certified
///                          implied unless `assume`)
///   drop <idx> [assume]    delete nonbasic row <idx> (must be certified
///                          implied by the rest unless `assume`)
///   solve                  finish the current branch with the automatic
///                          reduction
///
/// Every branch opened by g2/g4/g5 must be finished (g1 or solve) before the
/// script ends; commands after the derivation completes are errors.
StepsResult run_steps(const ConstraintSystem& S, const std::string& script,
                      const SolveOptions& opts = {});

}  // namespace ggf
