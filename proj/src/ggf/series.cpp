#include "ggf/series.hpp"

#include <sstream>

namespace ggf {

TruncatedSeries::TruncatedSeries(int N, int nvars) : N_(N), nvars_(nvars) {
  if (N < 0) throw error("negative truncation bound");
  if (nvars != 1 && nvars != 2) throw error("series arity must be 1 or 2");
  size_t side = static_cast<size_t>(N) + 1;
  c_.assign(nvars == 1 ? side : side * side, Int(0));
}

size_t TruncatedSeries::idx(int dq, int ds) const {
  if (dq < 0 || dq > N_ || ds < 0 || ds > (nvars_ == 1 ? 0 : N_))
    throw error("series index out of range");
  return nvars_ == 1 ? static_cast<size_t>(dq)
                     : static_cast<size_t>(dq) * (N_ + 1) + static_cast<size_t>(ds);
}

Int& TruncatedSeries::coeff(int dq, int ds) { return c_[idx(dq, ds)]; }
const Int& TruncatedSeries::coeff(int dq, int ds) const { return c_[idx(dq, ds)]; }

const Int& TruncatedSeries::coeff_or_zero(int dq, int ds) const {
  static const Int zero(0);
  if (dq < 0 || dq > N_ || ds < 0 || ds > (nvars_ == 1 ? 0 : N_)) return zero;
  return c_[nvars_ == 1 ? static_cast<size_t>(dq)
                        : static_cast<size_t>(dq) * (N_ + 1) + static_cast<size_t>(ds)];
}

TruncatedSeries TruncatedSeries::one(int N, int nvars) {
  TruncatedSeries f(N, nvars);
  f.coeff(0, 0) = 1;
  return f;
}

TruncatedSeries TruncatedSeries::monomial(int N, int nvars, int dq, int ds, Int c) {
  TruncatedSeries f(N, nvars);
  if (dq <= N && (nvars == 2 ? ds <= N : ds == 0)) f.coeff(dq, ds) = std::move(c);
  return f;
}

static void check_compatible(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.trunc() != g.trunc()) throw error("mismatched truncation bounds");
  if (f.nvars() != g.nvars()) throw error("mismatched series arity");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& g) {
  check_compatible(*this, g);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += g.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& g) {
  check_compatible(*this, g);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= g.c_[i];
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (Int& x : r.c_) x = -x;
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
  check_compatible(f, g);
  const int N = f.trunc();
  TruncatedSeries r(N, f.nvars());
  if (f.nvars() == 1) {
    for (int a = 0; a <= N; ++a) {
      if (f.coeff(a) == 0) continue;
      for (int b = 0; a + b <= N; ++b)
        if (g.coeff(b) != 0) r.coeff(a + b) += f.coeff(a) * g.coeff(b);
    }
  } else {
    for (int a = 0; a <= N; ++a)
      for (int as = 0; as <= N; ++as) {
        if (f.coeff(a, as) == 0) continue;
        for (int b = 0; a + b <= N; ++b)
          for (int bs = 0; as + bs <= N; ++bs)
            if (g.coeff(b, bs) != 0) r.coeff(a + b, as + bs) += f.coeff(a, as) * g.coeff(b, bs);
      }
  }
  return r;
}

void TruncatedSeries::shift(int dq, int ds) {
  if (dq < 0 || ds < 0) throw error("negative shift");
  if (nvars_ == 1 && ds != 0) throw error("s-shift on a univariate series");
  const int NS = nvars_ == 1 ? 0 : N_;
  for (int d = N_; d >= 0; --d)
    for (int e = NS; e >= 0; --e) {
      Int v = (d >= dq && e >= ds) ? coeff(d - dq, e - ds) : Int(0);
      coeff(d, e) = std::move(v);
    }
}

void TruncatedSeries::mul_one_minus(int dq, int ds, int sign) {
  if (dq < 0 || ds < 0 || (dq == 0 && ds == 0)) throw error("non-positively-graded factor");
  const int NS = nvars_ == 1 ? 0 : N_;
  if (nvars_ == 1 && ds != 0) throw error("s-factor on a univariate series");
  for (int d = N_; d >= 0; --d)
    for (int e = NS; e >= 0; --e)
      if (d >= dq && e >= ds) coeff(d, e) -= sign * coeff(d - dq, e - ds);
}

void TruncatedSeries::div_one_minus(int dq, int ds, int sign) {
  if (dq < 0 || ds < 0 || (dq == 0 && ds == 0)) throw error("non-positively-graded factor");
  const int NS = nvars_ == 1 ? 0 : N_;
  if (nvars_ == 1 && ds != 0) throw error("s-factor on a univariate series");
  for (int d = 0; d <= N_; ++d)
    for (int e = 0; e <= NS; ++e)
      if (d >= dq && e >= ds) coeff(d, e) += sign * coeff(d - dq, e - ds);
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (nvars_ != 1) throw error("series inverse is univariate-only");
  const Int& c0 = coeff(0);
  if (c0 != 1 && c0 != -1) throw error("series inverse requires unit constant term");
  TruncatedSeries g(N_, 1);
  g.coeff(0) = c0;
  for (int d = 1; d <= N_; ++d) {
    Int s = 0;
    for (int k = 1; k <= d; ++k) s += coeff(k) * g.coeff(d - k);
    g.coeff(d) = -c0 * s;  // c0 = 1/c0 for units
  }
  return g;
}

TruncatedSeries TruncatedSeries::substitute_s(int a, int b) const {
  if (nvars_ != 2) throw error("s-substitution on a univariate series");
  if (a < 0 || b < 1) throw error("s-substitution requires a >= 0, b >= 1");
  TruncatedSeries r(N_, 2);
  for (int d = 0; d <= N_; ++d)
    for (int e = 0; e <= N_; ++e) {
      if (coeff(d, e) == 0) continue;
      long D = d + static_cast<long>(a) * e, E = static_cast<long>(b) * e;
      if (D <= N_ && E <= N_) r.coeff(static_cast<int>(D), static_cast<int>(E)) += coeff(d, e);
    }
  return r;
}

TruncatedSeries TruncatedSeries::set_s_to_power_of_q(int a) const {
  if (nvars_ != 2) throw error("s-specialization on a univariate series");
  if (a < 1) throw error("s -> q^a requires a >= 1");
  TruncatedSeries r(N_, 1);
  for (int d = 0; d <= N_; ++d)
    for (int e = 0; e <= N_; ++e) {
      if (coeff(d, e) == 0) continue;
      long D = d + static_cast<long>(a) * e;
      if (D <= N_) r.coeff(static_cast<int>(D)) += coeff(d, e);
    }
  return r;
}

TruncatedSeries TruncatedSeries::to_bivariate() const {
  if (nvars_ != 1) throw error("series is already bivariate");
  TruncatedSeries r(N_, 2);
  for (int d = 0; d <= N_; ++d) r.coeff(d, 0) = coeff(d);
  return r;
}

TruncatedSeries TruncatedSeries::with_trunc(int N) const {
  TruncatedSeries r(N, nvars_);
  const int D = std::min(N, N_);
  const int NS = nvars_ == 1 ? 0 : D;
  for (int d = 0; d <= D; ++d)
    for (int e = 0; e <= NS; ++e) r.coeff(d, e) = coeff(d, e);
  return r;
}

SpecializationMap SpecializationMap::all_q(int nvars) {
  SpecializationMap m;
  m.wu.assign(nvars, {1, 0});
  return m;
}

SpecializationMap SpecializationMap::track(int nvars, VarId tracked) {
  SpecializationMap m;
  m.wu.assign(nvars, {1, 0});
  m.wu.at(tracked) = {0, 1};
  return m;
}

bool SpecializationMap::bivariate() const {
  for (auto& [w, u] : wu)
    if (u != 0) return true;
  return false;
}

TruncatedSeries specialize(const RationalGF& f, const SpecializationMap& m, int N) {
  if (static_cast<int>(m.wu.size()) != f.nvars())
    throw error("specialization map arity mismatch");
  const int nv = m.bivariate() ? 2 : 1;
  TruncatedSeries out(N, nv);

  auto image = [&](const LaurentMonomial& mono) -> std::pair<long, long> {
    long a = 0, b = 0;
    for (int v = 0; v < mono.nvars(); ++v) {
      a += static_cast<long>(m.wu[v].first) * mono.exps[v];
      b += static_cast<long>(m.wu[v].second) * mono.exps[v];
    }
    return {a, b};
  };

  for (const SimpleTerm& t : f.terms) {
    auto [a0, b0] = image(t.num);
    if (a0 < 0 || b0 < 0) throw error("numerator specializes to a negative exponent");
    if (a0 > N || (nv == 2 && b0 > N)) continue;  // entirely above the box
    if (nv == 1 && b0 != 0) throw error("variable tracked by a univariate specialization");
    TruncatedSeries cur =
        TruncatedSeries::monomial(N, nv, static_cast<int>(a0), static_cast<int>(b0), t.coeff);
    for (const LaurentMonomial& mono : t.den) {
      auto [a, b] = image(mono);
      if (a < 0 || b < 0 || (a == 0 && b == 0)) throw error("non-positively-graded factor");
      if (nv == 1 && b != 0) throw error("variable tracked by a univariate specialization");
      if (a > N || (nv == 2 && b > N)) continue;  // factor is 1 + O(beyond box)
      cur.div_one_minus(static_cast<int>(a), static_cast<int>(b));
    }
    out += cur;
  }
  return out;
}

TruncatedSeries poch(int sign, int a, int n, int N) {
  if (n < 0) throw error("negative Pochhammer length");
  if (sign != 1 && sign != -1) throw error("Pochhammer sign must be +1 or -1");
  TruncatedSeries f = TruncatedSeries::one(N, 1);
  for (int i = 0; i < n; ++i) {
    if (a + i == 0) {
      // (1 - sign*q^0) is the constant 1-sign
      if (sign == 1) return TruncatedSeries(N, 1);  // factor 0
      TruncatedSeries g = f;
      f += g;  // factor 2
    } else if (a + i <= N) {
      f.mul_one_minus(a + i, 0, sign);
    }
    // factors with exponent > N are 1 within the box
  }
  return f;
}

TruncatedSeries qbinomial(int n, int k, int N) {
  if (k < 0 || k > n) throw error("Gaussian binomial index out of range");
  // row DP on [m; j] = [m-1; j-1] + q^j [m-1; j]
  std::vector<TruncatedSeries> row(static_cast<size_t>(k) + 1, TruncatedSeries(N, 1));
  row[0] = TruncatedSeries::one(N, 1);
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      TruncatedSeries t = row[j];  // [m-1; j] (zero when j == m)
      t.shift(j, 0);               // spill beyond the box is dropped
      row[j] = row[j - 1] + t;
    }
  }
  return row[k];
}

bool check_identity(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  check_compatible(lhs, rhs);
  return lhs == rhs;
}

std::string series_to_string(const TruncatedSeries& f) {
  if (f.nvars() != 1) throw error("series rendering is univariate-only");
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= f.trunc(); ++d) {
    const Int& c = f.coeff(d);
    if (c == 0) continue;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    Int mag = abs(c);
    if (d == 0)
      os << mag.get_str();
    else if (mag == 1)
      os << "q" << (d > 1 ? "^" + std::to_string(d) : "");
    else
      os << mag.get_str() << "*q" << (d > 1 ? "^" + std::to_string(d) : "");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string series_coeff_lines(const TruncatedSeries& f) {
  if (f.nvars() != 1) throw error("coefficient lines are univariate-only");
  std::ostringstream os;
  for (int d = 0; d <= f.trunc(); ++d) os << f.coeff(d).get_str() << '\n';
  return os.str();
}

}  // namespace ggf
