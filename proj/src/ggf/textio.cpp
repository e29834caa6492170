#include "ggf/textio.hpp"

#include <cctype>
#include <sstream>

namespace ggf {

namespace {

struct Token {
  enum Kind { INT, IDENT, SYM, END } kind = END;
  std::string text;
  int line = 1, col = 1;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

// Tokenizes one logical line (or a whole single-line expression); `#` ends it.
std::vector<Token> tokenize(const std::string& s, int lineno) {
  std::vector<Token> out;
  size_t p = 0;
  while (p < s.size()) {
    char c = s[p];
    int col = static_cast<int>(p) + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++p;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t q = p;
      while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
      out.push_back({Token::INT, s.substr(p, q - p), lineno, col});
      p = q;
      continue;
    }
    if (ident_start(c)) {
      size_t q = p;
      while (q < s.size() && ident_char(s[q])) ++q;
      out.push_back({Token::IDENT, s.substr(p, q - p), lineno, col});
      p = q;
      continue;
    }
    if ((c == '>' || c == '<') && p + 1 < s.size() && s[p + 1] == '=') {
      out.push_back({Token::SYM, s.substr(p, 2), lineno, col});
      p += 2;
      continue;
    }
    if (std::string("+-*/()^=><:").find(c) != std::string::npos) {
      out.push_back({Token::SYM, std::string(1, c), lineno, col});
      ++p;
      continue;
    }
    throw parse_error(std::string("unexpected character '") + c + "'", lineno, col);
  }
  out.push_back({Token::END, "", lineno, static_cast<int>(s.size()) + 1});
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(int ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (t.kind != Token::END) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Token::END; }
  bool is_sym(const std::string& s, int ahead = 0) const {
    return peek(ahead).kind == Token::SYM && peek(ahead).text == s;
  }
  bool eat_sym(const std::string& s) {
    if (!is_sym(s)) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg, peek().line, peek().col);
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

std::string render_monomial(const VarTable& vars, const LaurentMonomial& m) {
  std::string out;
  for (int v = 0; v < m.nvars(); ++v) {
    if (m.exps[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.name(v);
    if (m.exps[v] != 1) out += "^" + std::to_string(m.exps[v]);
  }
  return out.empty() ? "1" : out;
}

std::string render_gf(const RationalGF& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (size_t t = 0; t < f.terms.size(); ++t) {
    const SimpleTerm& term = f.terms[t];
    bool neg = term.coeff < 0;
    if (t == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    Int c = abs(term.coeff);
    if (term.num.is_unit())
      out += c.get_str();
    else if (c == 1)
      out += render_monomial(f.vars, term.num);
    else
      out += c.get_str() + "*" + render_monomial(f.vars, term.num);
    for (size_t d = 0; d < term.den.size();) {
      size_t run = d;
      while (run < term.den.size() && term.den[run] == term.den[d]) ++run;
      out += " / (1 - " + render_monomial(f.vars, term.den[d]) + ")";
      if (run - d > 1) out += "^" + std::to_string(run - d);
      d = run;
    }
  }
  return out;
}

namespace {

LaurentMonomial parse_monomial(Cursor& cur, const VarTable& vars) {
  LaurentMonomial m = LaurentMonomial::unit(vars.size());
  while (true) {
    if (cur.peek().kind != Token::IDENT) cur.fail("expected variable name");
    const Token& id = cur.next();
    VarId v = vars.find(id.text);
    if (v < 0) throw parse_error("unknown variable '" + id.text + "'", id.line, id.col);
    long e = 1;
    if (cur.eat_sym("^")) {
      long sign = cur.eat_sym("-") ? -1 : 1;
      if (cur.peek().kind != Token::INT) cur.fail("expected exponent");
      e = sign * std::stol(cur.next().text);
    }
    m.exps[v] += e;
    if (!cur.eat_sym("*")) break;
  }
  return m;
}

SimpleTerm parse_gf_term(Cursor& cur, const VarTable& vars, bool negative) {
  SimpleTerm term;
  term.coeff = 1;
  term.num = LaurentMonomial::unit(vars.size());
  if (cur.peek().kind == Token::INT) {
    term.coeff = Int(cur.next().text);
    if (cur.eat_sym("*")) term.num = parse_monomial(cur, vars);
  } else if (cur.peek().kind == Token::IDENT) {
    term.num = parse_monomial(cur, vars);
  } else {
    cur.fail("expected a term");
  }
  while (cur.eat_sym("/")) {
    if (!cur.eat_sym("(")) cur.fail("expected '('");
    if (cur.peek().kind != Token::INT || cur.peek().text != "1") cur.fail("expected '1'");
    cur.next();
    if (!cur.eat_sym("-")) cur.fail("expected '-'");
    LaurentMonomial m = parse_monomial(cur, vars);
    if (m.is_unit()) cur.fail("unit denominator factor");
    if (!cur.eat_sym(")")) cur.fail("expected ')'");
    long mult = 1;
    if (cur.eat_sym("^")) {
      if (cur.peek().kind != Token::INT) cur.fail("expected multiplicity");
      mult = std::stol(cur.next().text);
      if (mult < 1) cur.fail("multiplicity must be positive");
    }
    for (long r = 0; r < mult; ++r) term.den.push_back(m);
  }
  if (negative) term.coeff = -term.coeff;
  return term;
}

}  // namespace

RationalGF parse_gf(const std::string& text, const VarTable& vars) {
  Cursor cur{tokenize(text, 1)};
  RationalGF f;
  f.vars = vars;
  if (cur.at_end()) cur.fail("empty generating function text");
  if (cur.peek().kind == Token::INT && cur.peek().text == "0" && cur.peek(1).kind == Token::END)
    return f;
  bool neg = false;
  if (cur.eat_sym("-"))
    neg = true;
  else
    cur.eat_sym("+");
  while (true) {
    f.terms.push_back(parse_gf_term(cur, vars, neg));
    if (cur.at_end()) break;
    if (cur.eat_sym("+"))
      neg = false;
    else if (cur.eat_sym("-"))
      neg = true;
    else
      cur.fail("expected '+' or '-' between terms");
  }
  return gf_canonicalize(std::move(f));
}

namespace {

std::string render_coeff_term(const Int& a, const std::string& name, bool first) {
  std::string out;
  bool neg = a < 0;
  Int mag = abs(a);
  if (first)
    out += neg ? "-" : "";
  else
    out += neg ? " - " : " + ";
  if (mag != 1) out += mag.get_str() + "*";
  out += name;
  return out;
}

}  // namespace

std::string render_constraint(const VarTable& vars, const Constraint& c) {
  std::string lhs;
  bool first = true;
  for (int v = 0; v < static_cast<int>(c.coeffs.size()); ++v) {
    if (c.coeffs[v] == 0) continue;
    lhs += render_coeff_term(c.coeffs[v], vars.name(v), first);
    first = false;
  }
  if (first) lhs = "0";
  Int rhs = -c.constant;
  return lhs + (c.rel == Rel::EQ ? " = " : " >= ") + rhs.get_str();
}

std::string render_system(const ConstraintSystem& S) {
  std::string out = "vars:";
  for (const std::string& n : S.vars.names()) out += " " + n;
  out += "\n";
  for (int v = 0; v < S.nvars(); ++v)
    if (S.basics[v] == BasicKind::EQ0) out += S.vars.name(v) + " = 0\n";
  for (const Constraint& c : S.nonbasic) out += render_constraint(S.vars, c) + "\n";
  return out;
}

namespace {

struct LinearExpr {
  std::vector<Rat> coeffs;
  Rat constant = 0;
};

Rat parse_int_token(Cursor& cur) {
  if (cur.peek().kind != Token::INT) cur.fail("expected integer");
  return Rat(Int(cur.next().text));
}

// signed sum of: int | int*var | var | var/int | int/int*var | int/int
LinearExpr parse_expr(Cursor& cur, const VarTable& vars) {
  LinearExpr e;
  e.coeffs.assign(vars.size(), Rat(0));
  bool first = true;
  while (true) {
    int sign = 1;
    if (cur.eat_sym("-"))
      sign = -1;
    else if (!cur.eat_sym("+") && !first)
      break;
    first = false;
    if (cur.peek().kind == Token::INT) {
      Rat val = parse_int_token(cur);
      if (cur.eat_sym("/")) {
        const Token& dt = cur.peek();
        Rat den = parse_int_token(cur);
        if (den == 0) throw parse_error("zero denominator", dt.line, dt.col);
        val /= den;
      }
      val.canonicalize();
      if (cur.eat_sym("*")) {
        const Token& id = cur.peek();
        if (id.kind != Token::IDENT) cur.fail("expected variable after '*'");
        cur.next();
        VarId v = vars.find(id.text);
        if (v < 0) throw parse_error("unknown variable '" + id.text + "'", id.line, id.col);
        e.coeffs[v] += sign * val;
      } else {
        e.constant += sign * val;
      }
    } else if (cur.peek().kind == Token::IDENT) {
      const Token& id = cur.next();
      VarId v = vars.find(id.text);
      if (v < 0) throw parse_error("unknown variable '" + id.text + "'", id.line, id.col);
      Rat val = 1;
      if (cur.eat_sym("/")) {
        const Token& dt = cur.peek();
        Rat den = parse_int_token(cur);
        if (den == 0) throw parse_error("zero denominator", dt.line, dt.col);
        val /= den;
        val.canonicalize();
      }
      e.coeffs[v] += sign * val;
    } else {
      cur.fail("expected a term");
    }
    if (!cur.is_sym("+") && !cur.is_sym("-")) break;
  }
  return e;
}

bool is_rel(const Cursor& cur) {
  return cur.is_sym(">=") || cur.is_sym("<=") || cur.is_sym(">") || cur.is_sym("<") ||
         cur.is_sym("=");
}

RawConstraint::R rel_kind(const std::string& s) {
  if (s == ">=") return RawConstraint::R::GE;
  if (s == "<=") return RawConstraint::R::LE;
  if (s == ">") return RawConstraint::R::GT;
  if (s == "<") return RawConstraint::R::LT;
  return RawConstraint::R::EQ;
}

RawConstraint make_raw(const LinearExpr& lhs, const LinearExpr& rhs, RawConstraint::R rel) {
  RawConstraint raw;
  raw.rel = rel;
  raw.coeffs.resize(lhs.coeffs.size());
  for (size_t v = 0; v < lhs.coeffs.size(); ++v) {
    raw.coeffs[v] = lhs.coeffs[v] - rhs.coeffs[v];
    raw.coeffs[v].canonicalize();
  }
  raw.constant = lhs.constant - rhs.constant;
  raw.constant.canonicalize();
  return raw;
}

// `<expr> <rel> <expr> [<rel> <expr> ...]` expanded pairwise.
void parse_constraint_line(Cursor& cur, const VarTable& vars, std::vector<RawConstraint>& out) {
  LinearExpr lhs = parse_expr(cur, vars);
  if (!is_rel(cur)) cur.fail("expected a relation (>=, <=, >, <, =)");
  do {
    RawConstraint::R rel = rel_kind(cur.next().text);
    LinearExpr rhs = parse_expr(cur, vars);
    out.push_back(make_raw(lhs, rhs, rel));
    lhs = std::move(rhs);
  } while (is_rel(cur));
  if (!cur.at_end()) cur.fail("trailing input after constraint");
}

}  // namespace

ConstraintSystem parse_system(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  VarTable vars;
  bool have_vars = false;
  std::vector<RawConstraint> raws;
  while (std::getline(in, line)) {
    ++lineno;
    Cursor cur{tokenize(line, lineno)};
    if (cur.at_end()) continue;
    if (!have_vars) {
      const Token& head = cur.peek();
      if (head.kind != Token::IDENT || head.text != "vars" || !cur.is_sym(":", 1))
        cur.fail("expected 'vars:' declaration first");
      cur.next();
      cur.next();
      while (!cur.at_end()) {
        const Token& id = cur.peek();
        if (id.kind != Token::IDENT) cur.fail("expected variable name");
        if (vars.find(id.text) >= 0)
          throw parse_error("duplicate variable '" + id.text + "'", id.line, id.col);
        vars.push(id.text);
        cur.next();
      }
      have_vars = true;
      continue;
    }
    parse_constraint_line(cur, vars, raws);
  }
  if (!have_vars) throw parse_error("missing 'vars:' declaration", lineno + 1, 1);
  return normalize(raws, vars);
}

Constraint parse_constraint(const std::string& text, const VarTable& vars) {
  Cursor cur{tokenize(text, 1)};
  LinearExpr lhs = parse_expr(cur, vars);
  if (!is_rel(cur)) cur.fail("expected a relation (>=, <=, >, <, =)");
  RawConstraint::R rel = rel_kind(cur.next().text);
  LinearExpr rhs = parse_expr(cur, vars);
  if (is_rel(cur)) cur.fail("chained relations are not allowed here");
  if (!cur.at_end()) cur.fail("trailing input after constraint");
  return integerize(make_raw(lhs, rhs, rel));
}

std::string render_series_table(const TruncatedSeries& f) {
  if (f.nvars() == 1) return series_to_string(f);
  std::string out;
  for (int d = 0; d <= f.trunc(); ++d) {
    out += "q^" + std::to_string(d) + ":";
    for (int e = 0; e <= f.trunc(); ++e) out += " " + f.coeff(d, e).get_str();
    out += "\n";
  }
  return out;
}

}  // namespace ggf
