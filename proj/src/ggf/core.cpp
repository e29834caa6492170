#include "ggf/core.hpp"

#include <algorithm>
#include <sstream>

namespace ggf {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (size_t i = 0; i < names_.size(); ++i)
    for (size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw error("duplicate variable name: " + names_[i]);
}

VarId VarTable::find(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<VarId>(i);
  return -1;
}

VarId VarTable::push(const std::string& name) {
  if (find(name) >= 0) throw error("duplicate variable name: " + name);
  names_.push_back(name);
  return static_cast<VarId>(names_.size()) - 1;
}

Constraint ConstraintSystem::basic_constraint(VarId v) const {
  Constraint c;
  c.coeffs.assign(nvars(), 0);
  c.coeffs.at(v) = 1;
  c.rel = basics.at(v) == BasicKind::EQ0 ? Rel::EQ : Rel::GEQ;
  c.basic = true;
  return c;
}

Constraint gcd_reduce(Constraint c) {
  Int g = 0;
  for (const Int& a : c.coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.constant.get_mpz_t());
  if (g > 1) {
    for (Int& a : c.coeffs) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c.constant.get_mpz_t(), c.constant.get_mpz_t(), g.get_mpz_t());
  }
  return c;
}

namespace {

// Integer form of a raw row scaled by the positive lcm of all denominators.
Constraint clear_denominators(const RawConstraint& raw) {
  Int lcm = 1;
  for (const Rat& a : raw.coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.get_den_mpz_t());
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), raw.constant.get_den_mpz_t());

  auto scaled = [&](const Rat& a) -> Int {
    Rat r = a * lcm;
    return Int(r.get_num());  // exact: lcm cancels the denominator
  };
  Constraint c;
  c.coeffs.reserve(raw.coeffs.size());
  for (const Rat& a : raw.coeffs) c.coeffs.push_back(scaled(a));
  c.constant = scaled(raw.constant);

  switch (raw.rel) {
    case RawConstraint::R::GE:
      break;
    case RawConstraint::R::GT:
      c.constant -= 1;  // e > 0  <=>  e >= 1 over the integers
      break;
    case RawConstraint::R::LE:
      for (Int& a : c.coeffs) a = -a;
      c.constant = -c.constant;
      break;
    case RawConstraint::R::LT:
      for (Int& a : c.coeffs) a = -a;
      c.constant = -c.constant - 1;
      break;
    case RawConstraint::R::EQ:
      c.rel = Rel::EQ;
      break;
  }
  return c;
}

// A row that is exactly  coeff * lambda_v  (rel)  0  for a single v.
std::optional<VarId> single_var_declaration(const Constraint& c) {
  if (c.constant != 0) return std::nullopt;
  VarId v = -1;
  for (size_t i = 0; i < c.coeffs.size(); ++i)
    if (c.coeffs[i] != 0) {
      if (v >= 0) return std::nullopt;
      v = static_cast<VarId>(i);
    }
  if (v < 0) return std::nullopt;
  if (c.rel == Rel::GEQ && c.coeffs[v] < 0) return std::nullopt;  // -l >= 0 is a real constraint
  return v;
}

}  // namespace

Constraint integerize(const RawConstraint& raw) { return gcd_reduce(clear_denominators(raw)); }

ConstraintSystem normalize(const std::vector<RawConstraint>& raw, const VarTable& vars) {
  const int n = vars.size();
  ConstraintSystem S;
  S.vars = vars;
  S.basics.assign(n, BasicKind::GEQ0);
  std::vector<std::optional<BasicKind>> declared(n);

  for (const RawConstraint& r : raw) {
    if (static_cast<int>(r.coeffs.size()) != n) throw error("coefficient vector length mismatch");
    Constraint c = integerize(r);
    if (auto v = single_var_declaration(c)) {
      BasicKind k = c.rel == Rel::EQ ? BasicKind::EQ0 : BasicKind::GEQ0;
      if (declared[*v] && *declared[*v] != k)
        throw error("contradictory duplicate basic declarations for variable " + vars.name(*v));
      declared[*v] = k;
      continue;
    }
    c.basic = false;
    S.nonbasic.push_back(std::move(c));
  }
  for (int v = 0; v < n; ++v)
    if (declared[v]) S.basics[v] = *declared[v];
  return S;
}

Constraint negate_constraint(const Constraint& c) {
  if (c.rel != Rel::GEQ) throw error("negation of an equality constraint is undefined");
  Constraint r;
  r.coeffs.reserve(c.coeffs.size());
  for (const Int& a : c.coeffs) r.coeffs.push_back(-a);
  r.constant = -c.constant - 1;
  r.rel = Rel::GEQ;
  return r;
}

template <typename T>
static bool holds_impl(const Constraint& c, std::span<const T> point) {
  Int v = c.constant;
  for (size_t i = 0; i < c.coeffs.size(); ++i) v += c.coeffs[i] * point[i];
  return c.rel == Rel::EQ ? v == 0 : v >= 0;
}

bool holds(const Constraint& c, std::span<const Int> point) { return holds_impl(c, point); }
bool holds(const Constraint& c, std::span<const long> point) { return holds_impl(c, point); }

ConstraintSystem substitute_constraint(const ConstraintSystem& S, VarId i, long a, VarId j) {
  if (i == j) throw error("substitution requires distinct variables");
  ConstraintSystem R = S;
  for (Constraint& c : R.nonbasic) c.coeffs.at(j) += a * c.coeffs.at(i);
  return R;
}

std::pair<ConstraintSystem, VarId> homogenize(const ConstraintSystem& S) {
  ConstraintSystem R;
  R.vars = S.vars;
  std::string hname = "_0";
  while (R.vars.find(hname) >= 0) hname += "_";  // dodge a user variable named _0
  VarId h = R.vars.push(hname);
  R.basics = S.basics;
  R.basics.push_back(BasicKind::GEQ0);
  R.nonbasic.reserve(S.nonbasic.size());
  for (const Constraint& c : S.nonbasic) {
    Constraint d = c;
    d.coeffs.push_back(c.constant);
    d.constant = 0;
    R.nonbasic.push_back(std::move(d));
  }
  return {std::move(R), h};
}

ConstraintSystem canonicalize_columns(ConstraintSystem S) {
  for (Constraint& c : S.nonbasic) {
    for (int v = 0; v < S.nvars(); ++v)
      if (S.basics[v] == BasicKind::EQ0) c.coeffs[v] = 0;
    c = gcd_reduce(std::move(c));
  }
  return S;
}

std::string canonical_key(const ConstraintSystem& S) {
  ConstraintSystem C = canonicalize_columns(S);
  std::ostringstream os;
  for (BasicKind b : C.basics) os << (b == BasicKind::EQ0 ? 'z' : 'g');
  for (const Constraint& c : C.nonbasic) {
    os << (c.rel == Rel::EQ ? "|e" : "|");
    for (const Int& a : c.coeffs) os << ' ' << a;
    os << ' ' << c.constant;
  }
  return os.str();
}

}  // namespace ggf
