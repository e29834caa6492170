#include "ggf/oracle.hpp"

#include <sstream>

namespace ggf {

namespace {

struct Row {
  std::vector<Int> co;
  Int c0;
};

// GEQ rows equivalent to S's nonbasics (EQ split into a >= pair).
std::vector<Row> geq_rows(const ConstraintSystem& S) {
  std::vector<Row> rows;
  for (const Constraint& c : S.nonbasic) {
    rows.push_back({c.coeffs, c.constant});
    if (c.rel == Rel::EQ) {
      Row r;
      r.co.reserve(c.coeffs.size());
      for (const Int& a : c.coeffs) r.co.push_back(-a);
      r.c0 = -c.constant;
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

}  // namespace

SolutionSet enumerate(const ConstraintSystem& S, int N, bool force) {
  if (N < 0) throw error("negative weight bound");
  if (!force && (N > kOracleMaxWeight || S.nvars() > kOracleMaxVars))
    throw error("enumeration ceiling exceeded (weight " + std::to_string(kOracleMaxWeight) +
                ", " + std::to_string(kOracleMaxVars) + " variables); pass force to override");
  const int n = S.nvars();
  const std::vector<Row> rows = geq_rows(S);
  const int nr = static_cast<int>(rows.size());

  // nonpos_suffix[r][k]: coefficients k..n-1 of row r are all <= 0, so a
  // negative partial value at depth k can never recover.
  std::vector<std::vector<bool>> nonpos_suffix(nr, std::vector<bool>(n + 1, true));
  for (int r = 0; r < nr; ++r)
    for (int k = n - 1; k >= 0; --k)
      nonpos_suffix[r][k] = nonpos_suffix[r][k + 1] && rows[r].co[k] <= 0;

  SolutionSet out;
  out.max_weight = N;
  for (int w = 0; w <= N; ++w) out.by_weight[w];

  std::vector<long> point(n, 0);
  std::vector<Int> val(nr);
  for (int r = 0; r < nr; ++r) val[r] = rows[r].c0;

  auto dead = [&](int k) {
    for (int r = 0; r < nr; ++r)
      if (val[r] < 0 && nonpos_suffix[r][k]) return true;
    return false;
  };

  auto rec = [&](auto&& self, int k, int rem) -> void {
    if (dead(k)) return;
    if (k == n) {
      out.by_weight[N - rem].push_back(point);
      return;
    }
    const long hi = S.basics[k] == BasicKind::EQ0 ? 0 : rem;
    for (long v = 0; v <= hi; ++v) {
      point[k] = v;
      if (v > 0)
        for (int r = 0; r < nr; ++r) val[r] += rows[r].co[k];
      self(self, k + 1, rem - static_cast<int>(v));
    }
    for (int r = 0; r < nr; ++r) val[r] -= rows[r].co[k] * hi;
    point[k] = 0;
  };
  rec(rec, 0, N);
  return out;
}

TruncatedSeries count_series(const ConstraintSystem& S, int N, bool force) {
  SolutionSet sols = enumerate(S, N, force);
  TruncatedSeries f(N, 1);
  for (const auto& [w, pts] : sols.by_weight) f.coeff(w) = static_cast<long>(pts.size());
  return f;
}

std::vector<std::vector<long>> slice_polynomial(const ConstraintSystem& S, int N, bool force) {
  return enumerate(S, N, force).by_weight.at(N);
}

std::string dump_solutions(const SolutionSet& sols) {
  std::ostringstream os;
  for (const auto& [w, pts] : sols.by_weight) {
    os << "# weight " << w << '\n';
    for (const auto& p : pts) {
      for (size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i];
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace ggf
