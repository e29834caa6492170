#pragma once

#include "ggf/series.hpp"

namespace ggf {

/// The solved constraint families. minc: compositions with each part at most
/// twice its predecessor. tworow: two-rowed plane partitions. alhc / lhp:
/// anti-lecture-hall and lecture-hall compositions. tlhp: the truncated
/// lecture-hall family over k of n slots.
enum class Family { minc, tworow, alhc, tlhp, lhp };

struct FamilySpec {
  Family family;
  int n = 0;
  int k = 0;  // tlhp only, 1 <= k <= n
};

/// The defining constraint system (integer coefficients, denominators
/// cleared). Variables are named l1..ln, except tworow which uses a1..an and
/// b1..bn for its two rows. Throws on out-of-range parameters (n >= 1; tlhp
/// also needs 1 <= k <= n).
ConstraintSystem family_system(const FamilySpec& spec);

/// nu(q) = 1 + sum over all lengths n of C_n(q,q), where C_n counts the
/// length-n compositions by weight; computed by iterating the bivariate
/// recurrence C_n = s/(1-s) * (C_{n-1}(q,q) - C_{n-1}(q,qs^2)) from
/// C_1 = s/(1-s).
TruncatedSeries minc_nu_series(int N);

/// The same series by inverting 1 + sum_i (-1)^i q^{2^{i+1}-i-2} /
/// prod_{j=1..i}(1-q^{2^j-1}).
TruncatedSeries minc_closed_series(int N);

/// Brute-force composition counts by weight (each part at most twice its
/// predecessor, any length, first part free; the empty composition counts
/// once at weight 0).
TruncatedSeries minc_composition_counts(int N);

/// G*_n(q,s), exact on the NxN box. The recurrence divides by (q^{n-1} - s);
/// the quotient sweep is run on an enlarged square box (side
/// N(n+1) + n(n-1)/2) so every surviving entry is exact.
TruncatedSeries tworow_gstar(int n, int N);

/// Closed form 1/((1-s)(1-sq)(q;q)_{n-1}(q^2;q)_{n-1}) on the NxN box.
TruncatedSeries tworow_gstar_closed(int n, int N);

/// P_n(q) = G*_n(q,q^n) via the recurrence, truncated at N.
TruncatedSeries tworow_series(int n, int N);

/// P_n(q) = 1/((q;q)_n(q^2;q)_n), truncated at N.
TruncatedSeries tworow_closed_series(int n, int N);

/// Evaluation routes for A_n(q,q): the defining bivariate recurrence, the
/// iterated expansion, the single-variable recursion, and the closed product
/// (-q;q)_n/(q^2;q)_n. All agree; exposed separately so tests can say so.
enum class AlhcMode { recurrence12, iterated14, rec15, closed };

TruncatedSeries alhc_series(int n, int N, AlhcMode mode);

/// A_n(q,s) itself on the NxN box (no closed form is known; exposed for
/// exploration).
TruncatedSeries alhc_bivariate(int n, int N);

/// Evaluation routes for Lbar_{n,k}(q): the bivariate recurrence, the
/// iterated j-sum, and the closed form
/// q^{C(k+1,2)} [n;k]_q (-q^{n-k+1};q)_k / (q^{2n-k+1};q)_k.
enum class TlhpMode { recurrence20, iterated_jsum, closed16 };

TruncatedSeries tlhp_series(int n, int k, int N, TlhpMode mode);

/// prod_{i=1..n} 1/(1-q^{2i-1}), truncated at N.
TruncatedSeries lhp_closed(int n, int N);

}  // namespace ggf
