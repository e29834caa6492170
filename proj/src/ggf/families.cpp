#include "ggf/families.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ggf {

namespace {

std::vector<std::string> var_names(const char* prefix, int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

Constraint row(int nvars, std::initializer_list<std::pair<int, long>> entries, long constant = 0) {
  Constraint c;
  c.coeffs.assign(nvars, 0);
  for (auto [v, a] : entries) c.coeffs[v] = a;
  c.constant = constant;
  return c;
}

long binom2(long n) { return n * (n - 1) / 2; }

}  // namespace

ConstraintSystem family_system(const FamilySpec& spec) {
  if (spec.n < 1) throw error("family parameter n must be at least 1");
  ConstraintSystem S;
  const int n = spec.n;
  switch (spec.family) {
    case Family::minc:
      // lambda_i >= (1/2) lambda_{i+1}, last part positive
      S.vars = VarTable(var_names("l", n));
      for (int i = 0; i + 1 < n; ++i) S.nonbasic.push_back(row(n, {{i, 2}, {i + 1, -1}}));
      S.nonbasic.push_back(row(n, {{n - 1, 1}}, -1));
      break;
    case Family::alhc:
      // lambda_1/1 >= lambda_2/2 >= ... >= lambda_n/n >= 0
      S.vars = VarTable(var_names("l", n));
      for (int i = 0; i + 1 < n; ++i)
        S.nonbasic.push_back(row(n, {{i, i + 2}, {i + 1, -(i + 1)}}));
      break;
    case Family::lhp:
      // lambda_1/n >= lambda_2/(n-1) >= ... >= lambda_n/1 >= 0
      S.vars = VarTable(var_names("l", n));
      for (int i = 0; i + 1 < n; ++i)
        S.nonbasic.push_back(row(n, {{i, n - i - 1}, {i + 1, -(n - i)}}));
      break;
    case Family::tlhp: {
      // first k slots of the lhp chain, last kept part positive
      const int k = spec.k;
      if (k < 1 || k > n) throw error("family parameter k must satisfy 1 <= k <= n");
      S.vars = VarTable(var_names("l", k));
      for (int i = 0; i + 1 < k; ++i)
        S.nonbasic.push_back(row(k, {{i, n - i - 1}, {i + 1, -(n - i)}}));
      S.nonbasic.push_back(row(k, {{k - 1, 1}}, -1));
      break;
    }
    case Family::tworow: {
      // a_1 >= ... >= a_n, b_1 >= ... >= b_n, a_i >= b_i
      std::vector<std::string> names = var_names("a", n), bs = var_names("b", n);
      names.insert(names.end(), bs.begin(), bs.end());
      S.vars = VarTable(names);
      for (int i = 0; i + 1 < n; ++i) {
        S.nonbasic.push_back(row(2 * n, {{i, 1}, {i + 1, -1}}));
        S.nonbasic.push_back(row(2 * n, {{n + i, 1}, {n + i + 1, -1}}));
      }
      for (int i = 0; i < n; ++i) S.nonbasic.push_back(row(2 * n, {{i, 1}, {n + i, -1}}));
      break;
    }
  }
  S.basics.assign(S.vars.size(), BasicKind::GEQ0);
  return S;
}

TruncatedSeries minc_nu_series(int N) {
  if (N < 1) throw error("weight bound must be at least 1");
  // C_1 = s/(1-s)
  TruncatedSeries C = TruncatedSeries::one(N, 2);
  C.shift(0, 1);
  C.div_one_minus(0, 1);
  TruncatedSeries total = TruncatedSeries::one(N, 1);
  for (int n = 1; n <= N; ++n) {  // an n-part composition weighs at least n
    TruncatedSeries Cqq = C.set_s_to_power_of_q(1);
    total += Cqq;
    TruncatedSeries D = Cqq.to_bivariate() - C.substitute_s(1, 2);
    D.shift(0, 1);
    D.div_one_minus(0, 1);
    C = std::move(D);
  }
  return total;
}

TruncatedSeries minc_closed_series(int N) {
  if (N < 1) throw error("weight bound must be at least 1");
  TruncatedSeries D = TruncatedSeries::one(N, 1);
  int sign = -1;
  for (long i = 1; (1L << (i + 1)) - i - 2 <= N; ++i, sign = -sign) {
    TruncatedSeries term =
        TruncatedSeries::monomial(N, 1, static_cast<int>((1L << (i + 1)) - i - 2), 0, sign);
    for (long j = 1; j <= i; ++j) term.div_one_minus(static_cast<int>((1L << j) - 1), 0);
    D += term;
  }
  return D.inverse();
}

TruncatedSeries minc_composition_counts(int N) {
  if (N < 0) throw error("weight bound must be nonnegative");
  std::vector<Int> total(N + 1, 0);
  std::function<void(int, int)> go = [&](int weight, int last) {
    total[weight] += 1;
    int cap = std::min(2 * last, N - weight);
    for (int nxt = 1; nxt <= cap; ++nxt) go(weight + nxt, nxt);
  };
  for (int d = 1; d <= N; ++d) go(d, d);
  total[0] += 1;
  TruncatedSeries f(N, 1);
  for (int d = 0; d <= N; ++d) f.coeff(d) = total[d];
  return f;
}

TruncatedSeries tworow_gstar(int n, int N) {
  if (n < 1) throw error("family parameter n must be at least 1");
  // Levels m = 2..n divide by (q^{m-1} - s); the cleared-numerator sweep is
  // only exact where d + m*e + (later shifts) fits, so work on side W.
  const int W = N * (n + 1) + static_cast<int>(binom2(n));
  TruncatedSeries G = TruncatedSeries::one(W, 2);  // level 1: 1/((1-s)(1-sq))
  G.div_one_minus(0, 1);
  G.div_one_minus(1, 1);
  for (int m = 2; m <= n; ++m) {
    const int a = m - 1;
    TruncatedSeries u = G.set_s_to_power_of_q(a);
    TruncatedSeries f = u.to_bivariate();
    f.shift(a, 0);
    TruncatedSeries Gs = G;
    Gs.shift(0, 1);
    f -= Gs;
    // h = f / (q^a - s): h[d,e] = f[d+a,e] + h[d+a,e-1]
    TruncatedSeries h(W, 2);
    for (int e = 0; e <= W; ++e)
      for (int d = W; d >= 0; --d) {
        Int v = f.coeff_or_zero(d + a, e) + h.coeff_or_zero(d + a, e - 1);
        h.coeff(d, e) = std::move(v);
      }
    h.div_one_minus(m, 1);
    G = std::move(h);
  }
  return G.with_trunc(N);
}

TruncatedSeries tworow_gstar_closed(int n, int N) {
  if (n < 1) throw error("family parameter n must be at least 1");
  TruncatedSeries f = TruncatedSeries::one(N, 2);
  f.div_one_minus(0, 1);
  f.div_one_minus(1, 1);
  for (int i = 1; i <= n - 1; ++i) f.div_one_minus(i, 0);      // (q;q)_{n-1}
  for (int i = 2; i <= n; ++i) f.div_one_minus(i, 0);          // (q^2;q)_{n-1}
  return f;
}

TruncatedSeries tworow_series(int n, int N) {
  return tworow_gstar(n, N).set_s_to_power_of_q(n);
}

TruncatedSeries tworow_closed_series(int n, int N) {
  if (n < 1) throw error("family parameter n must be at least 1");
  TruncatedSeries f = TruncatedSeries::one(N, 1);
  for (int i = 1; i <= n; ++i) f.div_one_minus(i, 0);          // (q;q)_n
  for (int i = 2; i <= n + 1; ++i) f.div_one_minus(i, 0);      // (q^2;q)_n
  return f;
}

TruncatedSeries alhc_bivariate(int n, int N) {
  if (n < 0) throw error("family parameter n must be nonnegative");
  TruncatedSeries A = TruncatedSeries::one(N, 2);
  for (int m = 1; m <= n; ++m) {
    TruncatedSeries t1 = A.set_s_to_power_of_q(1).to_bivariate();
    t1.div_one_minus(0, 1);  // A_{m-1}(q,q)/(1-s)
    if (m == 1) {            // the second term carries a factor (1 - s^0 q^0) = 0
      A = std::move(t1);
      continue;
    }
    const int c2 = static_cast<int>(binom2(m));
    TruncatedSeries t2 = A.substitute_s(1, 1);  // A_{m-1}(q,qs)
    t2.shift(0, 1);
    t2.mul_one_minus(c2, m - 1);
    t2.div_one_minus(0, 1);
    t2.div_one_minus(c2, m);
    A = t1 - t2;
  }
  return A;
}

namespace {

TruncatedSeries alhc_closed_impl(int n, int N) {
  TruncatedSeries f = poch(-1, 1, n, N);                        // (-q;q)_n
  for (int i = 2; i <= n + 1; ++i) f.div_one_minus(i, 0);       // /(q^2;q)_n
  return f;
}

TruncatedSeries alhc_rec15_impl(int n, int N) {
  std::vector<TruncatedSeries> memo;
  memo.push_back(TruncatedSeries::one(N, 1));
  for (int j = 1; j <= n; ++j) {
    const int cn = static_cast<int>(binom2(j + 1));
    TruncatedSeries res(N, 1);
    for (int i = 0; i < j; ++i) {
      const int ci = static_cast<int>(binom2(i + 1));
      TruncatedSeries lo = memo[j - 1 - i], hi = memo[j - 1 - i];
      lo.shift(ci, 0);
      hi.shift(cn, 0);
      TruncatedSeries t = lo - hi;  // * (q^{C(i+1,2)} - q^{C(j+1,2)})
      for (int tt = 1; tt <= i + 1; ++tt) t.div_one_minus(tt, 0);
      t.div_one_minus(cn, 0);
      if (i % 2) t = -t;
      res += t;
    }
    memo.push_back(std::move(res));
  }
  return memo[n];
}

TruncatedSeries alhc_iterated14_impl(int n, int N) {
  // Inner values A_j(q,q) come from the same iteration, memoized on j.
  std::vector<TruncatedSeries> memo;
  memo.push_back(TruncatedSeries::one(N, 1));
  for (int j = 1; j <= n; ++j) {
    const int cn2 = static_cast<int>(binom2(j));
    TruncatedSeries res(N, 2);
    for (int i = 0; i < j; ++i) {
      const int ci2 = static_cast<int>(binom2(i));
      TruncatedSeries t = memo[j - 1 - i].to_bivariate();
      t.shift(ci2, i);                    // * s^i q^{C(i,2)}
      t.mul_one_minus(cn2 - ci2, j - i);  // * (1 - s^{j-i} q^{C(j,2)-C(i,2)})
      for (int tt = 0; tt <= i; ++tt) t.div_one_minus(tt, 1);  // /(s;q)_{i+1}
      t.div_one_minus(cn2, j);            // /(1 - s^j q^{C(j,2)})
      if (i % 2) t = -t;
      res += t;
    }
    memo.push_back(res.set_s_to_power_of_q(1));
  }
  return memo[n];
}

}  // namespace

TruncatedSeries alhc_series(int n, int N, AlhcMode mode) {
  if (n < 0) throw error("family parameter n must be nonnegative");
  switch (mode) {
    case AlhcMode::recurrence12: return alhc_bivariate(n, N).set_s_to_power_of_q(1);
    case AlhcMode::iterated14: return alhc_iterated14_impl(n, N);
    case AlhcMode::rec15: return alhc_rec15_impl(n, N);
    case AlhcMode::closed: return alhc_closed_impl(n, N);
  }
  throw error("unknown alhc mode");
}

namespace {

TruncatedSeries tlhp_recurrence20_impl(int n, int k, int N) {
  TruncatedSeries L = TruncatedSeries::one(N, 2);  // k = 1: s/(1-s)
  L.shift(0, 1);
  L.div_one_minus(0, 1);
  for (int kk = 2; kk <= k; ++kk) {
    const int zs = n - kk + 1;
    const int zq = static_cast<int>(binom2(n + 1) - binom2(n - kk + 2));
    TruncatedSeries t1 = L.set_s_to_power_of_q(1).to_bivariate();
    t1.shift(0, 1);
    t1.div_one_minus(0, 1);  // s/(1-s) * Lbar(q,q)
    TruncatedSeries Lqs = L.substitute_s(1, 1);
    TruncatedSeries t2a = Lqs;
    t2a.div_one_minus(0, 1);  // Lbar(q,sq)/(1-s)
    TruncatedSeries t2b = std::move(Lqs);
    t2b.shift(zq, zs);
    t2b.div_one_minus(zq, zs);  // Lbar(q,sq) * z/(1-z)
    L = t1 - t2a - t2b;
  }
  return L.set_s_to_power_of_q(1);
}

TruncatedSeries tlhp_jsum_impl(int n, int k, int N) {
  std::vector<TruncatedSeries> memo;
  memo.push_back(TruncatedSeries::one(N, 1));
  for (int kk = 1; kk <= k; ++kk) {
    const int den_exp = static_cast<int>(binom2(n + 1) - binom2(n - kk + 1));
    TruncatedSeries res(N, 1);
    for (int j = 1; j <= kk; ++j) {
      const int num_exp = kk * (n - kk + j) + static_cast<int>(binom2(kk - j + 1));
      TruncatedSeries t = memo[kk - j];
      t.shift(j, 0);                 // * q^j
      t.mul_one_minus(num_exp, 0);   // * (1 - q^{k(n-k+j)+C(k-j+1,2)})
      for (int tt = 1; tt <= j; ++tt) t.div_one_minus(tt, 0);  // /(q;q)_j
      t.div_one_minus(den_exp, 0);
      if (j % 2 == 0) t = -t;
      res += t;
    }
    memo.push_back(std::move(res));
  }
  return memo[k];
}

TruncatedSeries tlhp_closed16_impl(int n, int k, int N) {
  TruncatedSeries f = qbinomial(n, k, N);
  f.shift(static_cast<int>(binom2(k + 1)), 0);  // * q^{C(k+1,2)}
  f = f * poch(-1, n - k + 1, k, N);            // * (-q^{n-k+1};q)_k
  for (int t = 0; t < k; ++t) f.div_one_minus(2 * n - k + 1 + t, 0);  // /(q^{2n-k+1};q)_k
  return f;
}

}  // namespace

TruncatedSeries tlhp_series(int n, int k, int N, TlhpMode mode) {
  if (n < 1 || k < 1 || k > n) throw error("family parameters must satisfy 1 <= k <= n");
  switch (mode) {
    case TlhpMode::recurrence20: return tlhp_recurrence20_impl(n, k, N);
    case TlhpMode::iterated_jsum: return tlhp_jsum_impl(n, k, N);
    case TlhpMode::closed16: return tlhp_closed16_impl(n, k, N);
  }
  throw error("unknown tlhp mode");
}

TruncatedSeries lhp_closed(int n, int N) {
  if (n < 1) throw error("family parameter n must be at least 1");
  TruncatedSeries f = TruncatedSeries::one(N, 1);
  for (int i = 1; i <= n; ++i) f.div_one_minus(2 * i - 1, 0);
  return f;
}

}  // namespace ggf
