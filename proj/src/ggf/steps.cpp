#include "ggf/steps.hpp"

#include "ggf/textio.hpp"

#include <optional>
#include <sstream>
#include <vector>

namespace ggf {

namespace {

// One suspended obligation. A derivation walks a binary tree of branch pairs;
// the stack holds, innermost last, the work owed to each enclosing step.
struct Frame {
  enum Kind {
    POST_SUB,      // apply gf_substitute(gf, j, i, a) on the way out
    COMBINE,       // sibling system still to derive, then fold with `op`
    COMBINE_DONE,  // left GF ready, waiting for the right one
  } kind;
  // POST_SUB
  VarId j = -1, i = -1;
  long a = 0;
  // COMBINE / COMBINE_DONE
  CombineOp op = CombineOp::ADD;
  bool multiply = false;  // g2 folds by product instead of gf_combine
  ConstraintSystem sibling;
  RationalGF left;
};

struct Engine {
  const SolveOptions& opts;
  std::vector<Frame> stack;
  std::optional<ConstraintSystem> cur;
  std::optional<RationalGF> done;
  std::ostringstream trace;

  explicit Engine(const ConstraintSystem& S, const SolveOptions& o) : opts(o), cur(S) {}

  const ConstraintSystem& sys(int lineno) const {
    if (!cur) throw error("line " + std::to_string(lineno) + ": derivation already complete");
    return *cur;
  }

  // Branch finished: unwind substitutions, fold into pending combines, and
  // either resume the next sibling or complete the derivation.
  void finish(RationalGF gf, int lineno) {
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.kind == Frame::POST_SUB) {
        gf = gf_substitute(gf, top.j, top.i, top.a);
        stack.pop_back();
      } else if (top.kind == Frame::COMBINE) {
        top.kind = Frame::COMBINE_DONE;
        top.left = std::move(gf);
        cur = std::move(top.sibling);
        trace << "  next branch:\n" << indent(render_system(*cur));
        return;
      } else {
        gf = top.multiply ? gf_mul(top.left, gf) : gf_combine(top.op, top.left, gf);
        stack.pop_back();
      }
    }
    done = gf_canonicalize(std::move(gf));
    cur.reset();
    trace << "derivation complete (line " << lineno << ")\n";
  }

  static std::string indent(const std::string& block) {
    std::string out;
    size_t p = 0;
    while (p < block.size()) {
      size_t q = block.find('\n', p);
      if (q == std::string::npos) q = block.size();
      out += "    " + block.substr(p, q - p) + "\n";
      p = q + 1;
    }
    return out;
  }
};

// Threshold form: every nonbasic row pins one variable to [x >= t]. Returns
// the branch GF, or zero when a row (or an [x = 0] basic with t > 0) is
// unsatisfiable.
RationalGF g1_terminal(const ConstraintSystem& S) {
  const int n = S.nvars();
  std::vector<long> threshold(n, 0);
  std::vector<bool> seen(n, false);
  for (const Constraint& c : S.nonbasic) {
    if (c.rel == Rel::EQ)
      throw error("g1: equality constraints are not in threshold form; use solve");
    VarId v = -1;
    for (int u = 0; u < n; ++u) {
      if (c.coeffs[u] == 0) continue;
      if (v >= 0) throw error("g1: constraint couples two variables; split or solve first");
      v = u;
    }
    if (v < 0) {
      if (c.constant < 0) return gf_zero(S.vars);  // 0 >= positive: dead branch
      continue;
    }
    if (c.coeffs[v] != 1 || c.constant > 0)
      throw error("g1: constraint on '" + S.vars.name(v) + "' is not a threshold [x >= t]");
    if (seen[v])
      throw error("g1: multiple constraints on '" + S.vars.name(v) + "'; drop the slack ones");
    seen[v] = true;
    if (!c.constant.fits_slong_p()) throw error("g1: threshold out of range");
    threshold[v] = -c.constant.get_si();
  }
  LaurentMonomial num = LaurentMonomial::unit(n);
  std::vector<LaurentMonomial> den;
  for (int v = 0; v < n; ++v) {
    if (S.basics[v] == BasicKind::EQ0) {
      if (threshold[v] > 0) return gf_zero(S.vars);
      continue;
    }
    num.exps[v] = threshold[v];
    den.push_back(LaurentMonomial::var(n, v));
  }
  return gf_term(S.vars, 1, std::move(num), std::move(den));
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) {
    if (w[0] == '#') break;
    out.push_back(w);
  }
  return out;
}

long parse_long(const std::string& w, int lineno, const char* what) {
  try {
    size_t used = 0;
    long v = std::stol(w, &used);
    if (used == w.size()) return v;
  } catch (const std::exception&) {
  }
  throw error("line " + std::to_string(lineno) + ": expected " + what + ", got '" + w + "'");
}

VarId parse_var(const VarTable& vars, const std::string& w, int lineno) {
  VarId v = vars.find(w);
  if (v < 0) throw error("line " + std::to_string(lineno) + ": unknown variable '" + w + "'");
  return v;
}

// `... [assume]` tail; consumes it if present.
bool take_assume(std::vector<std::string>& w) {
  if (!w.empty() && w.back() == "assume") {
    w.pop_back();
    return true;
  }
  return false;
}

[[noreturn]] void usage(int lineno, const char* msg) {
  throw error("line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

StepsResult run_steps(const ConstraintSystem& S, const std::string& script,
                      const SolveOptions& opts) {
  Engine eng(S, opts);
  std::istringstream in(script);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> w = words(line);
    if (w.empty()) continue;
    const std::string& cmd = w[0];
    const ConstraintSystem& cur = eng.sys(lineno);

    if (cmd == "g1") {
      if (w.size() != 1) usage(lineno, "usage: g1");
      RationalGF gf = g1_terminal(cur);
      eng.trace << "g1 -> " << render_gf(gf) << "\n";
      eng.finish(std::move(gf), lineno);
    } else if (cmd == "g2") {
      if (w.size() != 1) usage(lineno, "usage: g2");
      std::vector<ConstraintSystem> comps = apply_g2(cur);
      eng.trace << "g2 -> " << comps.size() << " independent subsystem"
                << (comps.size() == 1 ? "" : "s") << "\n";
      if (comps.empty()) {
        eng.finish(gf_one(cur.vars), lineno);
      } else {
        for (size_t k = comps.size(); k > 1; --k) {
          Frame f;
          f.kind = Frame::COMBINE;
          f.multiply = true;
          f.sibling = std::move(comps[k - 1]);
          eng.stack.push_back(std::move(f));
        }
        eng.cur = std::move(comps[0]);
        eng.trace << Engine::indent(render_system(*eng.cur));
      }
    } else if (cmd == "g3") {
      bool assume = take_assume(w);
      if (w.size() != 4) usage(lineno, "usage: g3 <i> <a> <j> [assume]");
      VarId i = parse_var(cur.vars, w[1], lineno);
      long a = parse_long(w[2], lineno, "an integer multiplier");
      VarId j = parse_var(cur.vars, w[3], lineno);
      G3Application app = apply_g3(cur, i, a, j, assume);
      eng.trace << "g3: " << cur.vars.name(i) << " <- " << cur.vars.name(i) << " + " << a << "*"
                << cur.vars.name(j) << (app.certified ? " (certified)" : " (assumed)") << "\n";
      Frame f;
      f.kind = Frame::POST_SUB;
      f.j = app.j;
      f.i = app.i;
      f.a = app.a;
      eng.stack.push_back(std::move(f));
      eng.cur = std::move(app.sys);
    } else if (cmd == "g4") {
      if (w.size() < 2) usage(lineno, "usage: g4 <constraint>");
      std::string text = line.substr(line.find("g4") + 2);
      Constraint c = parse_constraint(text, cur.vars);
      auto [with, without] = apply_g4(cur, c);
      eng.trace << "g4 " << render_constraint(cur.vars, c) << ": branch and add\n";
      Frame f;
      f.kind = Frame::COMBINE;
      f.op = CombineOp::ADD;
      f.sibling = std::move(without);
      eng.stack.push_back(std::move(f));
      eng.cur = std::move(with);
      eng.trace << Engine::indent(render_system(*eng.cur));
    } else if (cmd == "g5") {
      if (w.size() != 3 || w[1] != "remove") usage(lineno, "usage: g5 remove <idx>");
      long idx = parse_long(w[2], lineno, "a constraint index");
      if (idx < 0 || idx >= static_cast<long>(cur.nonbasic.size()))
        usage(lineno, "constraint index out of range");
      Constraint removed = cur.nonbasic[idx];
      auto [relaxed, complement] = apply_g5(cur, static_cast<int>(idx));
      eng.trace << "g5 remove " << idx << " (" << render_constraint(cur.vars, removed)
                << "): relax and subtract\n";
      Frame f;
      f.kind = Frame::COMBINE;
      f.op = CombineOp::SUB;
      f.sibling = std::move(complement);
      eng.stack.push_back(std::move(f));
      eng.cur = std::move(relaxed);
      eng.trace << Engine::indent(render_system(*eng.cur));
    } else if (cmd == "add") {
      bool assume = take_assume(w);
      if (w.size() < 2) usage(lineno, "usage: add <constraint> [assume]");
      std::string text = line.substr(line.find("add") + 3);
      if (assume) text = text.substr(0, text.rfind("assume"));
      Constraint c = parse_constraint(text, cur.vars);
      if (!assume) {
        ImplicationResult r = implied(cur, c);
        if (!r.ok())
          throw error("line " + std::to_string(lineno) +
                      ": constraint is not certified redundant; pass an explicit override");
      }
      ConstraintSystem next = cur;
      c.basic = false;
      next.nonbasic.push_back(std::move(c));
      eng.trace << "add " << render_constraint(cur.vars, next.nonbasic.back())
                << (assume ? " (assumed)" : " (certified)") << "\n";
      eng.cur = std::move(next);
    } else if (cmd == "drop") {
      bool assume = take_assume(w);
      if (w.size() != 2) usage(lineno, "usage: drop <idx> [assume]");
      long idx = parse_long(w[1], lineno, "a constraint index");
      if (idx < 0 || idx >= static_cast<long>(cur.nonbasic.size()))
        usage(lineno, "constraint index out of range");
      ConstraintSystem next = cur;
      Constraint c = std::move(next.nonbasic[idx]);
      next.nonbasic.erase(next.nonbasic.begin() + idx);
      if (!assume) {
        ImplicationResult r = implied(next, c);
        if (!r.ok())
          throw error("line " + std::to_string(lineno) +
                      ": constraint is not certified redundant; pass an explicit override");
      }
      eng.trace << "drop " << idx << " (" << render_constraint(cur.vars, c) << ")"
                << (assume ? " (assumed)" : " (certified)") << "\n";
      eng.cur = std::move(next);
    } else if (cmd == "solve") {
      if (w.size() != 1) usage(lineno, "usage: solve");
      RationalGF gf = solve(cur, opts);
      eng.trace << "solve -> " << render_gf(gf) << "\n";
      eng.finish(std::move(gf), lineno);
    } else {
      usage(lineno, ("unknown command '" + cmd + "'").c_str());
    }
  }
  if (!eng.done) {
    if (eng.cur)
      throw error("script ended before the derivation was finished (use g1 or solve)");
    throw error("script ended with unevaluated branches");
  }
  return {std::move(*eng.done), eng.trace.str()};
}

}  // namespace ggf
