#pragma once

#include "ggf/gf.hpp"
#include "ggf/series.hpp"

#include <string>

namespace ggf {

/// `x1`, `x1^2*x3^-1`, ... in variable order; the unit monomial is `1`.
std::string render_monomial(const VarTable& vars, const LaurentMonomial& m);

/// Canonical text of a RationalGF: terms joined by ` + `/` - `, each
/// `[|c|*]NUM / (1 - MONO)^d ...`; zero renders as `0`. Parsing the output
/// reproduces the canonical form exactly.
std::string render_gf(const RationalGF& f);

/// Inverse of render_gf over the given variable table. Throws parse_error.
RationalGF parse_gf(const std::string& text, const VarTable& vars);

/// One constraint as `sum <rel> constant`, e.g. `2*x - 3*y >= 1`; an
/// all-zero coefficient row renders its left side as `0`.
std::string render_constraint(const VarTable& vars, const Constraint& c);

/// Constraint-file text of a system: a `vars:` line, one `name = 0` line per
/// [lambda = 0] basic, then the nonbasic rows as `sum <rel> constant`.
/// parse_system(render_system(S)) == S for normalized S.
std::string render_system(const ConstraintSystem& S);

/// Parses constraint-file text: `vars: name1 name2 ...`, then constraint
/// lines `<expr> <rel> <expr> [<rel> <expr> ...]` with rel in
/// {>=, <=, >, <, =} (chains expand pairwise) and expr a signed sum of
/// `int`, `int*var`, `var`, `var/int`, `int/int*var` atoms. `#` starts a
/// comment. Declared variables implicitly satisfy `>= 0`. Throws parse_error
/// with 1-based line/column.
ConstraintSystem parse_system(const std::string& text);

/// One constraint line (same expression grammar, exactly one relation),
/// normalized against `vars`.
Constraint parse_constraint(const std::string& text, const VarTable& vars);

/// Bivariate series as one row per q-degree: `q^d: c0 c1 ... cN` (s-degree
/// ascending); univariate input falls back to series_to_string.
std::string render_series_table(const TruncatedSeries& f);

}  // namespace ggf
