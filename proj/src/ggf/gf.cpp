#include "ggf/gf.hpp"

#include <algorithm>

namespace ggf {

namespace {

long checked_add(long a, long b) {
  long r;
  if (__builtin_saddl_overflow(a, b, &r)) throw error("exponent overflow");
  return r;
}

long checked_mul(long a, long b) {
  long r;
  if (__builtin_smull_overflow(a, b, &r)) throw error("exponent overflow");
  return r;
}

void check_no_unit_den(const SimpleTerm& t) {
  for (const LaurentMonomial& m : t.den)
    if (m.is_unit()) throw error("unit monomial denominator factor");
}

}  // namespace

LaurentMonomial LaurentMonomial::var(int nvars, VarId v, long e) {
  LaurentMonomial m = unit(nvars);
  m.exps.at(v) = e;
  return m;
}

bool LaurentMonomial::is_unit() const {
  return std::all_of(exps.begin(), exps.end(), [](long e) { return e == 0; });
}

LaurentMonomial mono_mul(const LaurentMonomial& a, const LaurentMonomial& b) {
  if (a.nvars() != b.nvars()) throw error("monomial arity mismatch");
  LaurentMonomial r = a;
  for (int i = 0; i < a.nvars(); ++i) r.exps[i] = checked_add(r.exps[i], b.exps[i]);
  return r;
}

RationalGF gf_zero(const VarTable& vars) { return {vars, {}}; }

RationalGF gf_one(const VarTable& vars) {
  return {vars, {SimpleTerm{1, LaurentMonomial::unit(vars.size()), {}}}};
}

RationalGF gf_term(const VarTable& vars, Int coeff, LaurentMonomial num,
                   std::vector<LaurentMonomial> den) {
  SimpleTerm t{std::move(coeff), std::move(num), std::move(den)};
  std::sort(t.den.begin(), t.den.end());
  check_no_unit_den(t);
  RationalGF f{vars, {}};
  if (t.coeff != 0) f.terms.push_back(std::move(t));
  return f;
}

RationalGF gf_canonicalize(RationalGF f) {
  for (SimpleTerm& t : f.terms) std::sort(t.den.begin(), t.den.end());
  std::stable_sort(f.terms.begin(), f.terms.end(), [](const SimpleTerm& a, const SimpleTerm& b) {
    return std::tie(a.num, a.den) < std::tie(b.num, b.den);
  });
  std::vector<SimpleTerm> merged;
  for (SimpleTerm& t : f.terms) {
    if (!merged.empty() && merged.back().num == t.num && merged.back().den == t.den)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const SimpleTerm& t) { return t.coeff == 0; });
  f.terms = std::move(merged);
  return f;
}

RationalGF gf_combine(CombineOp op, const RationalGF& f, const RationalGF& g) {
  if (!(f.vars == g.vars)) throw error("mismatched variable tables");
  RationalGF r = f;
  r.terms.reserve(f.terms.size() + g.terms.size());
  for (SimpleTerm t : g.terms) {
    if (op == CombineOp::SUB) t.coeff = -t.coeff;
    r.terms.push_back(std::move(t));
  }
  return gf_canonicalize(std::move(r));
}

RationalGF gf_add(const RationalGF& f, const RationalGF& g) {
  return gf_combine(CombineOp::ADD, f, g);
}
RationalGF gf_sub(const RationalGF& f, const RationalGF& g) {
  return gf_combine(CombineOp::SUB, f, g);
}

RationalGF gf_mul(const RationalGF& f, const LaurentMonomial& num_factor,
                  const std::vector<LaurentMonomial>& new_den_factors) {
  for (const LaurentMonomial& m : new_den_factors)
    if (m.is_unit()) throw error("unit monomial denominator factor");
  RationalGF r = f;
  for (SimpleTerm& t : r.terms) {
    t.num = mono_mul(t.num, num_factor);
    t.den.insert(t.den.end(), new_den_factors.begin(), new_den_factors.end());
    std::sort(t.den.begin(), t.den.end());
  }
  return gf_canonicalize(std::move(r));
}

RationalGF gf_mul(const RationalGF& f, const RationalGF& g) {
  if (!(f.vars == g.vars)) throw error("mismatched variable tables");
  RationalGF r{f.vars, {}};
  r.terms.reserve(f.terms.size() * g.terms.size());
  for (const SimpleTerm& a : f.terms)
    for (const SimpleTerm& b : g.terms) {
      SimpleTerm t{a.coeff * b.coeff, mono_mul(a.num, b.num), a.den};
      t.den.insert(t.den.end(), b.den.begin(), b.den.end());
      std::sort(t.den.begin(), t.den.end());
      r.terms.push_back(std::move(t));
    }
  return gf_canonicalize(std::move(r));
}

RationalGF gf_substitute(const RationalGF& f, VarId j, VarId i, long a) {
  if (i == j) throw error("substitution requires distinct variables");
  auto apply = [&](LaurentMonomial m) {
    m.exps.at(i) = checked_add(m.exps.at(i), checked_mul(a, m.exps.at(j)));
    return m;
  };
  RationalGF r{f.vars, {}};
  r.terms.reserve(f.terms.size());
  for (const SimpleTerm& t : f.terms) {
    SimpleTerm s{t.coeff, apply(t.num), {}};
    s.den.reserve(t.den.size());
    for (const LaurentMonomial& m : t.den) {
      LaurentMonomial d = apply(m);
      if (d.is_unit()) throw error("substitution collapsed a geometric factor");
      s.den.push_back(std::move(d));
    }
    std::sort(s.den.begin(), s.den.end());
    r.terms.push_back(std::move(s));
  }
  return gf_canonicalize(std::move(r));
}

RationalGF gf_extract_coeff(const RationalGF& f, VarId v, int k) {
  if (k < 0 || k > 1) throw error("extraction power must be 0 or 1");
  VarTable rest;
  std::vector<std::string> names;
  for (int t = 0; t < f.nvars(); ++t)
    if (t != v) names.push_back(f.vars.name(t));
  rest = VarTable(std::move(names));

  auto drop = [&](const LaurentMonomial& m) {
    LaurentMonomial r;
    r.exps.reserve(m.exps.size() - 1);
    for (int t = 0; t < m.nvars(); ++t)
      if (t != v) r.exps.push_back(m.exps[t]);
    return r;
  };

  RationalGF out{rest, {}};
  for (const SimpleTerm& t : f.terms) {
    if (t.num.exps.at(v) < 0) throw error("negative exponent at extraction");
    for (const LaurentMonomial& m : t.den)
      if (m.exps.at(v) < 0) throw error("negative exponent at extraction");

    long e = t.num.exps[v];
    std::vector<LaurentMonomial> d0;
    std::vector<LaurentMonomial> d1;
    for (const LaurentMonomial& m : t.den) {
      if (m.exps[v] == 0) d0.push_back(drop(m));
      else if (m.exps[v] == 1) d1.push_back(m);
      // factors with exps_v >= 2 contribute only their constant term 1
    }
    std::sort(d0.begin(), d0.end());

    if (k == 0) {
      if (e == 0) out.terms.push_back(SimpleTerm{t.coeff, drop(t.num), d0});
    } else if (e == 1) {
      out.terms.push_back(SimpleTerm{t.coeff, drop(t.num), d0});
    } else if (e == 0) {
      // each den factor (1-m)^d with exps_v(m)=1 contributes d*m at v-degree 1;
      // the sorted d1 list carries multiplicity as repeats, so summing over
      // repeats realizes the d_m factor.
      for (const LaurentMonomial& m : d1)
        out.terms.push_back(SimpleTerm{t.coeff, drop(mono_mul(t.num, m)), d0});
    }
    // e >= 2 contributes nothing to [x_v^1]
  }
  return gf_canonicalize(std::move(out));
}

}  // namespace ggf
