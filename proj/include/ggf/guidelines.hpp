#pragma once

#include "ggf/gf.hpp"

namespace ggf {

enum class ImplicationStatus { IMPLIED, UNKNOWN };

/// Result of the rational implication check. IMPLIED is sound for integer
/// points; UNKNOWN is inconclusive (the check is incomplete over Z). When the
/// elimination completes without contradiction, `witness` holds a rational
/// point satisfying S together with the negated constraint.
struct ImplicationResult {
  ImplicationStatus status = ImplicationStatus::UNKNOWN;
  std::optional<std::vector<Rat>> witness;

  bool ok() const { return status == ImplicationStatus::IMPLIED; }
};

/// Exact-rational Fourier-Motzkin on S + negate(c) (basics included, EQ rows
/// split), eliminating variables in increasing index order with duplicate and
/// dominated-row pruning. IMPLIED iff the combined system is rationally
/// infeasible. A row cap keeps elimination from blowing up; hitting it yields
/// UNKNOWN with no witness.
ImplicationResult implied(const ConstraintSystem& S, const Constraint& c);

/// One recorded rewrite step, for derivation traces.
struct DerivationStep {
  enum class Kind { G1, G2, G3, G4, G5, Add, Drop, AutoSolve };
  Kind kind;
  VarId var = -1;  // G1 target
  long t = 0;      // G1 threshold
  VarId i = -1, j = -1;
  long a = 0;  // G3 substitution lambda_i <- lambda_i + a*lambda_j
  int index = -1;
  Constraint c;            // G4/G5/Add/Drop subject
  bool certified = false;  // implication check succeeded
  bool assumed = false;    // user override in place of a certificate
};

/// x^t/(1-x): the generating function of the single-variable system
/// [lambda >= t]. The one-argument form builds it over a fresh 1-variable
/// table named "x".
RationalGF apply_g1(const VarTable& vars, VarId v, long t);
RationalGF apply_g1(long t);

/// Splits S into independent subsystems: connected components of the
/// variable-sharing graph (EQ0 columns ignored), each returned over the full
/// variable table with every non-member variable pinned to [lambda = 0], plus
/// one all-EQ0 system per variable-free row. The generating function of S is
/// the product of the components'. Components are ordered by smallest member
/// variable, then variable-free rows in input order; the list is empty only
/// when S has no rows and no GEQ0 variable.
std::vector<ConstraintSystem> apply_g2(const ConstraintSystem& S);

struct G3Application {
  ConstraintSystem sys;  // S with lambda_i <- lambda_i + a*lambda_j applied
  VarId j, i;
  long a;
  bool certified;  // false when applied under an explicit override
};

/// Certified substitution step: checks that [lambda_i - a*lambda_j >= 0] is
/// implied by S (or accepts `assume`), rewrites the constraints, and reports
/// the compensation the caller must apply to the generating function of the
/// rewritten system: gf_substitute(., j, i, a).
G3Application apply_g3(const ConstraintSystem& S, VarId i, long a, VarId j, bool assume = false);

/// Case split: returns (S + c, S + negate(c)); the caller adds the two
/// generating functions.
std::pair<ConstraintSystem, ConstraintSystem> apply_g4(const ConstraintSystem& S,
                                                       const Constraint& c);

/// Constraint removal: for c = S.nonbasic[index], returns
/// (S - c, (S - c) + negate(c)); the caller subtracts the second generating
/// function from the first.
std::pair<ConstraintSystem, ConstraintSystem> apply_g5(const ConstraintSystem& S, int index);

}  // namespace ggf
