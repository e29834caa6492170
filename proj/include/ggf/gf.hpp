#pragma once

#include "ggf/core.hpp"

namespace ggf {

/// Exponent vector over the ambient VarTable; entries may be negative in
/// intermediates. The all-zero vector is the unit monomial.
struct LaurentMonomial {
  std::vector<long> exps;

  static LaurentMonomial unit(int nvars) { return {std::vector<long>(nvars, 0)}; }
  static LaurentMonomial var(int nvars, VarId v, long e = 1);
  bool is_unit() const;
  int nvars() const { return static_cast<int>(exps.size()); }

  auto operator<=>(const LaurentMonomial&) const = default;
};

/// Product of two monomials (exponent vectors added, overflow-checked).
LaurentMonomial mono_mul(const LaurentMonomial& a, const LaurentMonomial& b);

/// coeff * num / prod (1 - m)  for m in den. den is kept sorted; a unit den
/// factor is rejected everywhere (it would be a zero denominator).
struct SimpleTerm {
  Int coeff;
  LaurentMonomial num;
  std::vector<LaurentMonomial> den;  // sorted; repeats encode multiplicity

  auto operator<=>(const SimpleTerm&) const = default;
};

/// Finite sum of simple terms: the engine's rational normal form. Canonical
/// form has den multisets sorted, no duplicate (num, den) pairs, no zero
/// coefficients, and deterministic term order.
struct RationalGF {
  VarTable vars;
  std::vector<SimpleTerm> terms;

  int nvars() const { return vars.size(); }
  bool is_zero() const { return terms.empty(); }

  bool operator==(const RationalGF&) const = default;
};

/// The zero function and the constant 1.
RationalGF gf_zero(const VarTable& vars);
RationalGF gf_one(const VarTable& vars);

/// A single term coeff * num / prod(1-m).
RationalGF gf_term(const VarTable& vars, Int coeff, LaurentMonomial num,
                   std::vector<LaurentMonomial> den);

enum class CombineOp { ADD, SUB };

/// Term-list concatenation (sign-flipped for SUB), then canonicalization.
RationalGF gf_combine(CombineOp op, const RationalGF& f, const RationalGF& g);
RationalGF gf_add(const RationalGF& f, const RationalGF& g);
RationalGF gf_sub(const RationalGF& f, const RationalGF& g);

/// Multiplies every term by num_factor and appends den factors.
RationalGF gf_mul(const RationalGF& f, const LaurentMonomial& num_factor,
                  const std::vector<LaurentMonomial>& new_den_factors);

/// Product of two sums of simple terms (termwise cross product).
RationalGF gf_mul(const RationalGF& f, const RationalGF& g);

/// The substitution x_j <- x_j x_i^a: in every monomial, exps[i] += a*exps[j].
/// Errors if a den factor collapses to the unit monomial.
RationalGF gf_substitute(const RationalGF& f, VarId j, VarId i, long a);

/// [x_v^k] f for k in {0,1}, termwise; the result is over the VarTable with
/// v removed. Errors on a negative exponent of v or k > 1.
RationalGF gf_extract_coeff(const RationalGF& f, VarId v, int k);

/// Sorts den multisets, merges equal (num,den) pairs, drops zero terms, and
/// fixes a deterministic term order. Idempotent.
RationalGF gf_canonicalize(RationalGF f);

}  // namespace ggf
