#pragma once

#include "ggf/series.hpp"

#include <utility>

namespace ggf {

/// Each builder returns (lhs, rhs) of one q-series identity, both truncated
/// at N, for check_identity. The poch-sum identities expand an alternating
/// sum of Pochhammer quotients against a closed quotient; the binomial and
/// Chu-Vandermonde ones are polynomial identities, exact once N exceeds the
/// degree.
using IdentityPair = std::pair<TruncatedSeries, TruncatedSeries>;

/// sum_{i=0}^{2n} (-1)^i (-q;q)_{2n-i} / ((q^2;q)_{2n-i} (q;q)_{i+1})
///   = (-q;q)_{2n+1} / (q^2;q)_{2n+1}
IdentityPair identity_poch_sum_odd(int n, int N);

/// sum_{i=0}^{2n-1} (-1)^i (-q;q)_{2n-1-i} / ((q^2;q)_{2n-1-i} (q;q)_{i+1})
///   = ((-q;q)_{2n} - 1) / (q^2;q)_{2n}
IdentityPair identity_poch_sum_even(int n, int N);

/// The odd sum with each summand weighted by q^{C(i+1,2)}; same right side.
IdentityPair identity_poch_sum_odd_weighted(int n, int N);

/// The even sum weighted by q^{i(i+1)/2};
/// right side ((-q;q)_{2n} - q^{C(2n+1,2)}) / (q^2;q)_{2n}.
IdentityPair identity_poch_sum_even_weighted(int n, int N);

/// sum_j (-1)^j (-1;q)_j [n;j]_q = (-1)^n   (Pascal-recurrence binomials)
IdentityPair identity_binom_alternating(int n, int N);

/// sum_j (-1)^j (-1;q)_j [n;j]_q q^{C(n-j,2)} = (-1)^n q^{C(n,2)}
IdentityPair identity_binom_alternating_weighted(int n, int N);

/// [n;j]_q as prod_{t<j}(1-q^{n-t}) / (q;q)_j by series division (zero for
/// j > n); exercises the quotient form of the binomial.
TruncatedSeries qbinomial_by_formula(int n, int j, int N);

/// The binomial alternating sum again, with every [n;j]_q built by
/// qbinomial_by_formula: the c -> infinity limit of Chu-Vandermonde at a=-1.
IdentityPair identity_chu_vandermonde_limit(int n, int N);

/// The weighted variant via the formula route: Chu-Vandermonde at a=-1, c=0.
IdentityPair identity_chu_vandermonde_zero(int n, int N);

}  // namespace ggf
