#include "ggf/identities.hpp"

namespace ggf {

namespace {

// t /= (q^a;q)_m
void div_poch(TruncatedSeries& t, int a, int m) {
  for (int u = 0; u < m; ++u) t.div_one_minus(a + u, 0);
}

TruncatedSeries constant(int N, int sign, int shift = 0) {
  return TruncatedSeries::monomial(N, 1, shift, 0, sign);
}

}  // namespace

IdentityPair identity_poch_sum_odd(int n, int N) {
  TruncatedSeries lhs(N, 1);
  for (int i = 0; i <= 2 * n; ++i) {
    TruncatedSeries t = poch(-1, 1, 2 * n - i, N);
    div_poch(t, 2, 2 * n - i);
    div_poch(t, 1, i + 1);
    if (i % 2) t = -t;
    lhs += t;
  }
  TruncatedSeries rhs = poch(-1, 1, 2 * n + 1, N);
  div_poch(rhs, 2, 2 * n + 1);
  return {std::move(lhs), std::move(rhs)};
}

IdentityPair identity_poch_sum_even(int n, int N) {
  TruncatedSeries lhs(N, 1);
  for (int i = 0; i <= 2 * n - 1; ++i) {
    TruncatedSeries t = poch(-1, 1, 2 * n - 1 - i, N);
    div_poch(t, 2, 2 * n - 1 - i);
    div_poch(t, 1, i + 1);
    if (i % 2) t = -t;
    lhs += t;
  }
  TruncatedSeries rhs = poch(-1, 1, 2 * n, N) - TruncatedSeries::one(N, 1);
  div_poch(rhs, 2, 2 * n);
  return {std::move(lhs), std::move(rhs)};
}

IdentityPair identity_poch_sum_odd_weighted(int n, int N) {
  TruncatedSeries lhs(N, 1);
  for (int i = 0; i <= 2 * n; ++i) {
    TruncatedSeries t = poch(-1, 1, 2 * n - i, N);
    t.shift(i * (i + 1) / 2, 0);
    div_poch(t, 2, 2 * n - i);
    div_poch(t, 1, i + 1);
    if (i % 2) t = -t;
    lhs += t;
  }
  TruncatedSeries rhs = poch(-1, 1, 2 * n + 1, N);
  div_poch(rhs, 2, 2 * n + 1);
  return {std::move(lhs), std::move(rhs)};
}

IdentityPair identity_poch_sum_even_weighted(int n, int N) {
  TruncatedSeries lhs(N, 1);
  for (int i = 0; i <= 2 * n - 1; ++i) {
    TruncatedSeries t = poch(-1, 1, 2 * n - 1 - i, N);
    t.shift(i * (i + 1) / 2, 0);
    div_poch(t, 2, 2 * n - 1 - i);
    div_poch(t, 1, i + 1);
    if (i % 2) t = -t;
    lhs += t;
  }
  TruncatedSeries rhs = poch(-1, 1, 2 * n, N) - constant(N, 1, n * (2 * n + 1));
  div_poch(rhs, 2, 2 * n);
  return {std::move(lhs), std::move(rhs)};
}

IdentityPair identity_binom_alternating(int n, int N) {
  TruncatedSeries lhs(N, 1);
  for (int j = 0; j <= n; ++j) {
    TruncatedSeries t = poch(-1, 0, j, N) * qbinomial(n, j, N);
    if (j % 2) t = -t;
    lhs += t;
  }
  return {std::move(lhs), constant(N, n % 2 ? -1 : 1)};
}

IdentityPair identity_binom_alternating_weighted(int n, int N) {
  TruncatedSeries lhs(N, 1);
  for (int j = 0; j <= n; ++j) {
    TruncatedSeries t = poch(-1, 0, j, N) * qbinomial(n, j, N);
    t.shift((n - j) * (n - j - 1) / 2, 0);
    if (j % 2) t = -t;
    lhs += t;
  }
  return {std::move(lhs), constant(N, n % 2 ? -1 : 1, n * (n - 1) / 2)};
}

TruncatedSeries qbinomial_by_formula(int n, int j, int N) {
  if (j < 0 || j > n) return TruncatedSeries(N, 1);
  TruncatedSeries f = TruncatedSeries::one(N, 1);
  for (int t = 0; t < j; ++t) f.mul_one_minus(n - t, 0);
  div_poch(f, 1, j);
  return f;
}

IdentityPair identity_chu_vandermonde_limit(int n, int N) {
  TruncatedSeries lhs(N, 1);
  for (int j = 0; j <= n; ++j) {
    TruncatedSeries t = poch(-1, 0, j, N) * qbinomial_by_formula(n, j, N);
    if (j % 2) t = -t;
    lhs += t;
  }
  return {std::move(lhs), constant(N, n % 2 ? -1 : 1)};
}

IdentityPair identity_chu_vandermonde_zero(int n, int N) {
  TruncatedSeries lhs(N, 1);
  for (int j = 0; j <= n; ++j) {
    TruncatedSeries t = poch(-1, 0, j, N) * qbinomial_by_formula(n, j, N);
    t.shift((n - j) * (n - j - 1) / 2, 0);
    if (j % 2) t = -t;
    lhs += t;
  }
  return {std::move(lhs), constant(N, n % 2 ? -1 : 1, n * (n - 1) / 2)};
}

}  // namespace ggf
