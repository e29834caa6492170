#include "ggf/solver.hpp"

#include <tuple>
#include <unordered_map>

namespace ggf {

bool ReductionMeasure::operator<(const ReductionMeasure& o) const {
  return std::tie(r, M, e_max, m_abs, e_min) < std::tie(o.r, o.M, o.e_max, o.m_abs, o.e_min);
}

namespace {

void require_reduction_form(const ConstraintSystem& S) {
  for (const Constraint& c : S.nonbasic) {
    if (c.rel != Rel::GEQ) throw error("equality row inside the reduction");
    if (c.constant != 0) throw error("nonzero constant inside the reduction");
  }
}

void canon(ConstraintSystem& S) { S = canonicalize_columns(std::move(S)); }

ReductionMeasure measure_of(const ConstraintSystem& S) {
  ReductionMeasure m;
  m.r = static_cast<int>(S.nonbasic.size());
  if (m.r == 0) return m;
  for (const Int& a : S.nonbasic[0].coeffs) {
    if (a > 0) {
      if (a > m.M) { m.M = a; m.e_max = 1; }
      else if (a == m.M) ++m.e_max;
    } else if (a < 0) {
      if (-a > m.m_abs) { m.m_abs = -a; m.e_min = 1; }
      else if (-a == m.m_abs) ++m.e_min;
    }
  }
  return m;
}

// Case picks on the canonical first row: i carries the most negative
// coefficient, j the largest positive one, lowest index on ties.
std::pair<VarId, VarId> split_pair(const Constraint& c1, const Int& m_neg, const Int& M) {
  VarId i = -1, j = -1;
  for (int v = 0; v < static_cast<int>(c1.coeffs.size()); ++v) {
    if (i < 0 && c1.coeffs[v] == m_neg) i = v;
    if (j < 0 && c1.coeffs[v] == M) j = v;
  }
  return {i, j};
}

ConstraintSystem drop_first(ConstraintSystem S) {
  S.nonbasic.erase(S.nonbasic.begin());
  canon(S);
  return S;
}

ConstraintSystem zero_negatives(ConstraintSystem S) {
  const Constraint& c1 = S.nonbasic[0];
  for (int v = 0; v < S.nvars(); ++v)
    if (c1.coeffs[v] < 0) S.basics[v] = BasicKind::EQ0;
  canon(S);
  return S;
}

struct Reducer {
  const SolveOptions& opts;
  SolveStats& stats;
  std::unordered_map<std::string, RationalGF> memo;

  // S canonical; parent is the caller's measure (strict decrease enforced).
  RationalGF rec(const ConstraintSystem& S, const ReductionMeasure* parent) {
    ReductionMeasure mea = measure_of(S);
    if (parent && !(mea < *parent)) throw error("reduction measure failed to decrease");
    std::string key = canonical_key(S);
    if (auto it = memo.find(key); it != memo.end()) {
      ++stats.memo_hits;
      return it->second;
    }
    if (++stats.steps > opts.step_budget) throw budget_error("reduction step budget exhausted");

    RationalGF res = gf_zero(S.vars);
    if (S.nonbasic.empty()) {
      std::vector<LaurentMonomial> dens;
      for (int v = 0; v < S.nvars(); ++v)
        if (S.basics[v] == BasicKind::GEQ0)
          dens.push_back(LaurentMonomial::var(S.nvars(), v, 1));
      res = gf_term(S.vars, 1, LaurentMonomial::unit(S.nvars()), std::move(dens));
    } else {
      const Constraint& c1 = S.nonbasic[0];
      Int M = mea.M, m_neg = -mea.m_abs;
      if (m_neg == 0) {
        res = rec(drop_first(S), &mea);
      } else if (M == 0) {
        res = rec(zero_negatives(S), &mea);
      } else {
        auto [i, j] = split_pair(c1, m_neg, M);
        // lambda_i <- lambda_i + lambda_j; compensate x_j <- x_j * x_i.
        ConstraintSystem A = substitute_constraint(S, i, 1, j);
        canon(A);
        RationalGF gfA = gf_substitute(rec(A, &mea), j, i, 1);
        if (S.basics[j] == BasicKind::EQ0) {
          res = gfA;
        } else {
          // lambda_j <- lambda_j + lambda_i, then lambda_j > 0 resolved as
          // (free) - (pinned to 0); compensate x_i <- x_i * x_j.
          ConstraintSystem P = substitute_constraint(S, j, 1, i);
          ConstraintSystem P1 = P, P2 = std::move(P);
          canon(P1);
          P2.basics[j] = BasicKind::EQ0;
          canon(P2);
          RationalGF gfB =
              gf_substitute(gf_sub(rec(P1, &mea), rec(P2, &mea)), i, j, 1);
          res = gf_add(gfA, gfB);
        }
      }
    }
    memo.emplace(std::move(key), res);
    return res;
  }
};

// Equality rows become (row, negated row) inequality pairs; everything else
// is copied through.
ConstraintSystem split_equalities(const ConstraintSystem& S) {
  ConstraintSystem R;
  R.vars = S.vars;
  R.basics = S.basics;
  for (const Constraint& c : S.nonbasic) {
    Constraint g = c;
    g.rel = Rel::GEQ;
    R.nonbasic.push_back(g);
    if (c.rel == Rel::EQ) {
      for (Int& a : g.coeffs) a = -a;
      g.constant = -g.constant;
      R.nonbasic.push_back(std::move(g));
    }
  }
  return R;
}

}  // namespace

ReductionMeasure reduction_measure(const ConstraintSystem& S) {
  ConstraintSystem C = S;
  canon(C);
  return measure_of(C);
}

ElliottCase elliott_case(const ConstraintSystem& S) {
  require_reduction_form(S);
  if (S.nonbasic.empty()) throw error("no nonbasic constraint to classify");
  ConstraintSystem C = S;
  canon(C);
  ElliottCase ec;
  ec.before = measure_of(C);
  Int M = ec.before.M, m_neg = -ec.before.m_abs;
  if (m_neg == 0) {
    ec.kind = 2;
    ec.after.push_back(measure_of(drop_first(C)));
  } else if (M == 0) {
    ec.kind = 3;
    ec.after.push_back(measure_of(zero_negatives(C)));
  } else {
    ec.kind = 4;
    std::tie(ec.i, ec.j) = split_pair(C.nonbasic[0], m_neg, M);
    ConstraintSystem A = substitute_constraint(C, ec.i, 1, ec.j);
    canon(A);
    ec.after.push_back(measure_of(A));
    if (C.basics[ec.j] != BasicKind::EQ0) {
      ConstraintSystem P = substitute_constraint(C, ec.j, 1, ec.i);
      ConstraintSystem P1 = P, P2 = std::move(P);
      canon(P1);
      P2.basics[ec.j] = BasicKind::EQ0;
      canon(P2);
      ec.after.push_back(measure_of(P1));
      ec.after.push_back(measure_of(P2));
    }
  }
  return ec;
}

RationalGF solve(const ConstraintSystem& S, const SolveOptions& opts, SolveStats* stats) {
  SolveStats local;
  if (!stats) stats = &local;
  *stats = {};

  ConstraintSystem R = split_equalities(S);
  bool homogeneous = true;
  for (const Constraint& c : R.nonbasic)
    if (c.constant != 0) homogeneous = false;

  VarId hvar = -1;
  if (!homogeneous) std::tie(R, hvar) = homogenize(R);
  require_reduction_form(R);
  canon(R);

  Reducer red{opts, *stats, {}};
  RationalGF f = red.rec(R, nullptr);
  if (!homogeneous) f = gf_extract_coeff(f, hvar, 1);
  return f;
}

namespace {

// Exact inverse via Gauss-Jordan; nullopt when singular.
std::optional<std::vector<std::vector<Rat>>> invert(std::vector<std::vector<Rat>> A) {
  const int n = static_cast<int>(A.size());
  std::vector<std::vector<Rat>> B(n, std::vector<Rat>(n, 0));
  for (int k = 0; k < n; ++k) B[k][k] = 1;
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int row = k; row < n; ++row)
      if (A[row][k] != 0) { p = row; break; }
    if (p < 0) return std::nullopt;
    std::swap(A[k], A[p]);
    std::swap(B[k], B[p]);
    Rat piv = A[k][k];
    for (int t = 0; t < n; ++t) {
      A[k][t] /= piv;
      B[k][t] /= piv;
    }
    for (int row = 0; row < n; ++row) {
      if (row == k || A[row][k] == 0) continue;
      Rat f = A[row][k];
      for (int t = 0; t < n; ++t) {
        A[row][t] -= f * A[k][t];
        B[row][t] -= f * B[k][t];
      }
    }
  }
  return B;
}

}  // namespace

std::optional<RationalGF> cmatrix_fast_path(const ConstraintSystem& S) {
  const int n = S.nvars();
  const int r = static_cast<int>(S.nonbasic.size());
  if (r > n) return std::nullopt;
  for (const Constraint& c : S.nonbasic)
    if (c.rel != Rel::GEQ || c.constant != 0) return std::nullopt;
  for (BasicKind b : S.basics)
    if (b == BasicKind::EQ0) return std::nullopt;
  if (n == 0) return gf_one(S.vars);

  const int pad = n - r;
  std::vector<int> T(pad);
  for (int t = 0; t < pad; ++t) T[t] = t;
  long attempts = 0;
  constexpr long kAttemptCap = 20000;

  while (true) {
    if (++attempts > kAttemptCap) return std::nullopt;
    std::vector<std::vector<Rat>> C(n, std::vector<Rat>(n, 0));
    for (int row = 0; row < r; ++row)
      for (int v = 0; v < n; ++v) C[row][v] = Rat(S.nonbasic[row].coeffs[v]);
    for (int t = 0; t < pad; ++t) C[r + t][T[t]] = 1;

    if (auto B = invert(std::move(C))) {
      bool good = true;
      std::vector<std::vector<long>> E(n, std::vector<long>(n, 0));
      for (int row = 0; row < n && good; ++row)
        for (int col = 0; col < n && good; ++col) {
          Rat b = (*B)[row][col];
          b.canonicalize();
          if (b < 0 || b.get_den() != 1 || !b.get_num().fits_slong_p()) good = false;
          else E[row][col] = b.get_num().get_si();
        }
      if (good) {
        std::vector<LaurentMonomial> dens;
        for (int col = 0; col < n; ++col) {
          LaurentMonomial mono = LaurentMonomial::unit(n);
          for (int row = 0; row < n; ++row) mono.exps[row] = E[row][col];
          dens.push_back(std::move(mono));
        }
        return gf_term(S.vars, 1, LaurentMonomial::unit(n), std::move(dens));
      }
    }

    // next size-`pad` subset in lexicographic order
    if (pad == 0) return std::nullopt;
    int t = pad - 1;
    while (t >= 0 && T[t] == n - pad + t) --t;
    if (t < 0) return std::nullopt;
    ++T[t];
    for (int u = t + 1; u < pad; ++u) T[u] = T[u - 1] + 1;
  }
}

}  // namespace ggf
