#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ggf {

using Int = mpz_class;
using Rat = mpq_class;
using VarId = int;

/// Base class for all errors thrown by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input text could not be parsed; carries a 1-based line/column position.
struct parse_error : error {
  int line, col;
  parse_error(const std::string& msg, int line_, int col_)
      : error(msg + " (line " + std::to_string(line_) + ", col " + std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

/// The solver's step budget was exhausted before the reduction finished.
struct budget_error : error {
  using error::error;
};

/// Ordered table of variable identifiers; index = VarId, order fixed for the
/// lifetime of a computation (exponent vectors index into it).
class VarTable {
 public:
  VarTable() = default;
  explicit VarTable(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(VarId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of `name`, or -1 if absent.
  VarId find(const std::string& name) const;
  /// Appends a fresh variable; name must be unused. Returns its VarId.
  VarId push(const std::string& name);

  bool operator==(const VarTable&) const = default;

 private:
  std::vector<std::string> names_;
};

enum class Rel { GEQ, EQ };

/// One linear constraint  constant + sum coeffs[i]*lambda_i  (>= 0 | = 0).
struct Constraint {
  std::vector<Int> coeffs;
  Int constant = 0;
  Rel rel = Rel::GEQ;
  bool basic = false;  // exactly `lambda_i >= 0` or `lambda_i = 0` for one i

  bool operator==(const Constraint&) const = default;
};

/// Per-variable basic constraint kind.
enum class BasicKind { GEQ0, EQ0 };

/// A variable table, the nonbasic constraints, and one basic constraint per
/// variable. Coefficient vectors all have length vars.size().
struct ConstraintSystem {
  VarTable vars;
  std::vector<Constraint> nonbasic;
  std::vector<BasicKind> basics;

  int nvars() const { return vars.size(); }
  /// The basic constraint of `v`, materialized.
  Constraint basic_constraint(VarId v) const;

  bool operator==(const ConstraintSystem&) const = default;
};

/// Raw (pre-normalization) constraint with rational coefficients.
struct RawConstraint {
  enum class R { GE, LE, GT, LT, EQ } rel = R::GE;
  std::vector<Rat> coeffs;
  Rat constant = 0;
};

/// Integer form of one raw row: scaled by the positive lcm of denominators,
/// <=/< flipped by sign change, strict inequalities folded into the integer
/// constant, gcd-reduced over (nonzero coeffs and constant).
Constraint integerize(const RawConstraint& raw);

/// Clears denominators (positive lcm), flips <=/< by sign change, rewrites
/// strict > into >= by bumping the integer constant, gcd-reduces over
/// (nonzero coeffs and constant), and attaches per-variable basics: a bare
/// single-variable `v >= 0` row is absorbed as v's basic, a bare `v = 0` row
/// declares the EQ0 basic, and every other variable gets `v >= 0`.
/// Throws on conflicting explicit basic declarations for the same variable.
ConstraintSystem normalize(const std::vector<RawConstraint>& raw, const VarTable& vars);

/// The complement constraint: not[a0 + sum a_i l_i >= 0] is
/// [-a0 - 1 - sum a_i l_i >= 0]; exactly one of c, negate(c) holds at every
/// integer point, and negate(negate(c)) == c. EQ input is rejected.
Constraint negate_constraint(const Constraint& c);

/// Whether the integer point satisfies c.
bool holds(const Constraint& c, std::span<const Int> point);
bool holds(const Constraint& c, std::span<const long> point);

/// The system with lambda_i replaced by lambda_i + a*lambda_j in every
/// nonbasic constraint: coeff_j += a*coeff_i (i is the replaced variable).
/// Basics are unchanged.
ConstraintSystem substitute_constraint(const ConstraintSystem& S, VarId i, long a, VarId j);

/// Absorbs constants into a new last variable lambda_0 (basic >= 0): each
/// constant a0 becomes the coefficient of lambda_0. Returns the new system
/// and the VarId of lambda_0. Solutions of S correspond to lambda_0 = 1.
std::pair<ConstraintSystem, VarId> homogenize(const ConstraintSystem& S);

/// Divides coeffs and constant by the gcd of (nonzero coeffs, constant);
/// all-zero rows pass through unchanged. No integer tightening.
Constraint gcd_reduce(Constraint c);

/// Canonical working form for the solver and memo keys: every EQ0-basic
/// variable's column is zeroed in all nonbasics, then each row is
/// gcd-reduced. Order is preserved; nothing is sorted or deduplicated.
ConstraintSystem canonicalize_columns(ConstraintSystem S);

/// Exact ordered serialization of the canonical form (memo key).
std::string canonical_key(const ConstraintSystem& S);

}  // namespace ggf
