#include "ggf/guidelines.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ggf {

namespace {

constexpr size_t kFmRowCap = 5000;  // per elimination stage

using FmRow = Constraint;  // rel GEQ throughout; c0 + co*x >= 0

// All GEQ rows of S + negate(c): nonbasics (EQ split), basics, the negation.
std::vector<FmRow> fm_input(const ConstraintSystem& S, const Constraint& c) {
  std::vector<FmRow> rows;
  auto push = [&](std::vector<Int> co, Int c0) {
    FmRow r;
    r.coeffs = std::move(co);
    r.constant = std::move(c0);
    rows.push_back(gcd_reduce(std::move(r)));
  };
  for (const Constraint& nc : S.nonbasic) {
    push(nc.coeffs, nc.constant);
    if (nc.rel == Rel::EQ) {
      std::vector<Int> neg;
      neg.reserve(nc.coeffs.size());
      for (const Int& a : nc.coeffs) neg.push_back(-a);
      push(std::move(neg), -nc.constant);
    }
  }
  for (int v = 0; v < S.nvars(); ++v) {
    std::vector<Int> e(S.nvars(), 0);
    e[v] = 1;
    push(e, 0);
    if (S.basics[v] == BasicKind::EQ0) {
      e.assign(S.nvars(), 0);
      e[v] = -1;
      push(std::move(e), 0);
    }
  }
  Constraint nc = negate_constraint(c);
  push(std::move(nc.coeffs), std::move(nc.constant));
  return rows;
}

// Dedupe rows with identical coefficient vectors, keeping the strongest
// (smallest) constant; drops vacuous all-zero rows with c0 >= 0.
// Returns false on a contradictory all-zero row (c0 < 0).
bool prune(std::vector<FmRow>& rows) {
  std::map<std::vector<Int>, Int> best;
  for (FmRow& r : rows) {
    bool zero = std::all_of(r.coeffs.begin(), r.coeffs.end(), [](const Int& a) { return a == 0; });
    if (zero) {
      if (r.constant < 0) return false;
      continue;
    }
    auto it = best.find(r.coeffs);
    if (it == best.end())
      best.emplace(std::move(r.coeffs), std::move(r.constant));
    else if (r.constant < it->second)
      it->second = r.constant;
  }
  rows.clear();
  for (auto& [co, c0] : best) {
    FmRow r;
    r.coeffs = co;
    r.constant = c0;
    rows.push_back(std::move(r));
  }
  return true;
}

}  // namespace

ImplicationResult implied(const ConstraintSystem& S, const Constraint& c) {
  if (c.rel != Rel::GEQ) throw error("implication check is defined for >= constraints");
  if (static_cast<int>(c.coeffs.size()) != S.nvars())
    throw error("coefficient vector length mismatch");
  const int n = S.nvars();

  // stage[v] holds rows over variables v..n-1 (earlier ones eliminated).
  std::vector<std::vector<FmRow>> stage(n + 1);
  stage[0] = fm_input(S, c);
  if (!prune(stage[0])) return {ImplicationStatus::IMPLIED, std::nullopt};

  for (int v = 0; v < n; ++v) {
    std::vector<const FmRow*> lower, upper;  // coeff_v > 0 / < 0
    std::vector<FmRow> next;
    for (const FmRow& r : stage[v]) {
      if (r.coeffs[v] > 0)
        lower.push_back(&r);
      else if (r.coeffs[v] < 0)
        upper.push_back(&r);
      else
        next.push_back(r);
    }
    if (lower.size() * upper.size() + next.size() > kFmRowCap)
      return {ImplicationStatus::UNKNOWN, std::nullopt};
    for (const FmRow* lo : lower)
      for (const FmRow* up : upper) {
        FmRow r;
        r.coeffs.resize(n);
        const Int& a = lo->coeffs[v];   // > 0
        const Int& b = up->coeffs[v];   // < 0
        for (int t = 0; t < n; ++t) r.coeffs[t] = -b * lo->coeffs[t] + a * up->coeffs[t];
        r.constant = -b * lo->constant + a * up->constant;
        next.push_back(gcd_reduce(std::move(r)));
      }
    if (!prune(next)) return {ImplicationStatus::IMPLIED, std::nullopt};
    stage[v + 1] = std::move(next);
  }

  // Rationally feasible: back-substitute a witness, tightest lower bound
  // first (falling back to the upper bound, then 0).
  std::vector<Rat> x(n, 0);
  for (int v = n - 1; v >= 0; --v) {
    std::optional<Rat> lo, hi;
    for (const FmRow& r : stage[v]) {
      if (r.coeffs[v] == 0) continue;
      Rat rest = r.constant;
      for (int t = v + 1; t < n; ++t) rest += Rat(r.coeffs[t]) * x[t];
      Rat bound = -rest / Rat(r.coeffs[v]);
      bound.canonicalize();
      if (r.coeffs[v] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    x[v] = lo ? *lo : (hi ? *hi : Rat(0));
  }
  return {ImplicationStatus::UNKNOWN, std::move(x)};
}

RationalGF apply_g1(const VarTable& vars, VarId v, long t) {
  if (t < 0) throw error("negative threshold");
  RationalGF f = gf_term(vars, 1, LaurentMonomial::var(vars.size(), v, t),
                         {LaurentMonomial::var(vars.size(), v, 1)});
  return f;
}

RationalGF apply_g1(long t) { return apply_g1(VarTable({"x"}), 0, t); }

std::vector<ConstraintSystem> apply_g2(const ConstraintSystem& S) {
  const int n = S.nvars();
  // Union-find over variables; EQ0 columns are semantically zero and do not
  // link anything.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto active = [&](const Constraint& c) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (c.coeffs[v] != 0 && S.basics[v] != BasicKind::EQ0) vs.push_back(v);
    return vs;
  };
  for (const Constraint& c : S.nonbasic) {
    std::vector<int> vs = active(c);
    for (size_t k = 1; k < vs.size(); ++k) parent[find(vs[0])] = find(vs[k]);
  }

  // Group member variables per root, ordered by smallest member.
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v)
    if (S.basics[v] != BasicKind::EQ0) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> comps;
  for (auto& [root, vs] : groups) comps.push_back(vs);
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  auto restricted = [&](const std::vector<int>& members, std::vector<Constraint> rows) {
    ConstraintSystem C;
    C.vars = S.vars;
    C.nonbasic = std::move(rows);
    C.basics.assign(n, BasicKind::EQ0);
    for (int v : members) C.basics[v] = S.basics[v];
    return C;
  };

  std::vector<ConstraintSystem> out;
  std::vector<std::vector<Constraint>> comp_rows(comps.size());
  std::vector<Constraint> free_rows;  // no active variable: pure feasibility factors
  for (const Constraint& c : S.nonbasic) {
    std::vector<int> vs = active(c);
    if (vs.empty()) {
      free_rows.push_back(c);
      continue;
    }
    int root = find(vs[0]);
    for (size_t k = 0; k < comps.size(); ++k)
      if (find(comps[k][0]) == root) {
        comp_rows[k].push_back(c);
        break;
      }
  }
  for (size_t k = 0; k < comps.size(); ++k) out.push_back(restricted(comps[k], comp_rows[k]));
  for (Constraint& c : free_rows) out.push_back(restricted({}, {std::move(c)}));
  return out;
}

G3Application apply_g3(const ConstraintSystem& S, VarId i, long a, VarId j, bool assume) {
  if (i == j) throw error("substitution requires distinct variables");
  bool certified = false;
  if (!assume) {
    Constraint c;
    c.coeffs.assign(S.nvars(), 0);
    c.coeffs.at(i) = 1;
    c.coeffs.at(j) = -a;
    ImplicationResult r = implied(S, c);
    if (!r.ok())
      throw error("substitution side condition is not certified; pass an explicit override");
    certified = true;
  }
  return {substitute_constraint(S, i, a, j), j, i, a, certified};
}

std::pair<ConstraintSystem, ConstraintSystem> apply_g4(const ConstraintSystem& S,
                                                       const Constraint& c) {
  if (static_cast<int>(c.coeffs.size()) != S.nvars())
    throw error("coefficient vector length mismatch");
  ConstraintSystem with = S, without = S;
  Constraint cc = c;
  cc.basic = false;
  without.nonbasic.push_back(negate_constraint(cc));
  with.nonbasic.push_back(std::move(cc));
  return {std::move(with), std::move(without)};
}

std::pair<ConstraintSystem, ConstraintSystem> apply_g5(const ConstraintSystem& S, int index) {
  if (index < 0 || index >= static_cast<int>(S.nonbasic.size()))
    throw error("constraint index out of range");
  Constraint c = S.nonbasic[index];
  ConstraintSystem base = S;
  base.nonbasic.erase(base.nonbasic.begin() + index);
  ConstraintSystem negd = base;
  negd.nonbasic.push_back(negate_constraint(c));
  return {std::move(base), std::move(negd)};
}

}  // namespace ggf
