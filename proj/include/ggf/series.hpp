#pragma once

#include "ggf/gf.hpp"

namespace ggf {

/// Dense power series in q (nvars=1) or q and s (nvars=2) with
/// arbitrary-precision integer coefficients, truncated at weight bound N per
/// variable (bivariate series live on the (N+1)x(N+1) box).
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int N, int nvars = 1);

  int trunc() const { return N_; }
  int nvars() const { return nvars_; }

  Int& coeff(int dq, int ds = 0);
  const Int& coeff(int dq, int ds = 0) const;
  /// Reads 0 outside the box instead of throwing.
  const Int& coeff_or_zero(int dq, int ds = 0) const;

  static TruncatedSeries one(int N, int nvars = 1);
  static TruncatedSeries monomial(int N, int nvars, int dq, int ds = 0, Int c = 1);

  TruncatedSeries& operator+=(const TruncatedSeries& g);
  TruncatedSeries& operator-=(const TruncatedSeries& g);
  friend TruncatedSeries operator+(TruncatedSeries f, const TruncatedSeries& g) { return f += g; }
  friend TruncatedSeries operator-(TruncatedSeries f, const TruncatedSeries& g) { return f -= g; }
  friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
  TruncatedSeries operator-() const;

  bool operator==(const TruncatedSeries&) const = default;

  /// In-place multiply by the monomial q^dq s^ds (degrees shift up; spill
  /// beyond the box is discarded). Exponents must be nonnegative.
  void shift(int dq, int ds = 0);
  /// In-place multiply by (1 - sign*q^dq s^ds), (dq,ds) != (0,0), both >= 0.
  void mul_one_minus(int dq, int ds = 0, int sign = +1);
  /// In-place divide by (1 - sign*q^dq s^ds) via the cumulative sweep
  /// h[d,e] = f[d,e] + sign*h[d-dq, e-ds]; exact on the whole box.
  void div_one_minus(int dq, int ds = 0, int sign = +1);
  /// Multiplicative inverse; requires constant term +1 or -1.
  TruncatedSeries inverse() const;

  /// s -> q^a s^b with a >= 0, b >= 1 (bivariate, degree-increasing; entries
  /// leaving the box are dropped, so the result is exact on the box).
  TruncatedSeries substitute_s(int a, int b) const;
  /// s -> q^a with a >= 1, collapsing to a univariate series; exact to q^N
  /// because every contributing entry has d + a*e <= N and hence lies in the
  /// box.
  TruncatedSeries set_s_to_power_of_q(int a) const;
  /// Univariate -> bivariate embedding at s-degree 0.
  TruncatedSeries to_bivariate() const;

  /// Truncates (or zero-extends) to a new weight bound.
  TruncatedSeries with_trunc(int N) const;

 private:
  int N_, nvars_;
  std::vector<Int> c_;  // row-major [dq][ds]
  size_t idx(int dq, int ds) const;
};

/// Per-variable specialization exponents: x_v -> q^{w} s^{u}.
struct SpecializationMap {
  std::vector<std::pair<int, int>> wu;

  static SpecializationMap all_q(int nvars);
  /// All variables to q except `tracked`, which maps to s.
  static SpecializationMap track(int nvars, VarId tracked);
  bool bivariate() const;
};

/// Exact expansion of f under m to degree N (per variable). Each term expands
/// coeff * q^a0 s^b0 * prod 1/(1 - q^a s^b). Errors: "non-positively-graded
/// factor" when a den factor maps to exponents (0,0), or any negative
/// specialized exponent appears.
TruncatedSeries specialize(const RationalGF& f, const SpecializationMap& m, int N);

/// prod_{i=0}^{n-1} (1 - sign*q^{a+i}), truncated at N. n = 0 yields 1.
TruncatedSeries poch(int sign, int a, int n, int N);

/// Gaussian binomial [n;k]_q by the Pascal recurrence, truncated at N.
TruncatedSeries qbinomial(int n, int k, int N);

/// True iff all coefficients agree up to the common bound; the bounds (and
/// arities) must match.
bool check_identity(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

/// Series rendered as `c0 + c1*q + ...` (univariate).
std::string series_to_string(const TruncatedSeries& f);
/// Coefficient list, one integer per line.
std::string series_coeff_lines(const TruncatedSeries& f);

}  // namespace ggf
