#include "ggf/families.hpp"
#include "ggf/oracle.hpp"
#include "ggf/solver.hpp"
#include "ggf/steps.hpp"
#include "ggf/textio.hpp"
#include "ggf/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace ggf;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SolveOptions solve_options() {
  SolveOptions opts;
  if (const char* env = std::getenv("GGF_STEP_BUDGET")) {
    try {
      opts.step_budget = std::stol(env);
    } catch (const std::exception&) {
      throw error("GGF_STEP_BUDGET must be an integer");
    }
    if (opts.step_budget <= 0) throw error("GGF_STEP_BUDGET must be positive");
  }
  return opts;
}

int run_solve(const std::string& file, bool fast_path) {
  ConstraintSystem S = parse_system(slurp(file));
  if (fast_path) {
    if (auto gf = cmatrix_fast_path(S)) {
      std::cout << render_gf(*gf) << "\n";
      return 0;
    }
    std::cerr << "note: fast path inapplicable, using the general reduction\n";
  }
  std::cout << render_gf(solve(S, solve_options())) << "\n";
  return 0;
}

int run_expand(const std::string& file, int weight, const std::string& track) {
  ConstraintSystem S = parse_system(slurp(file));
  RationalGF f = solve(S, solve_options());
  SpecializationMap m = SpecializationMap::all_q(f.vars.size());
  if (!track.empty()) {
    VarId v = f.vars.find(track);
    if (v < 0) throw error("unknown variable '" + track + "'");
    m = SpecializationMap::track(f.vars.size(), v);
  }
  TruncatedSeries s = specialize(f, m, weight);
  if (s.nvars() == 1)
    std::cout << series_to_string(s) << "\n";
  else
    std::cout << render_series_table(s);
  return 0;
}

int run_count(const std::string& file, int weight, bool list, bool force) {
  ConstraintSystem S = parse_system(slurp(file));
  if (list) {
    std::cout << dump_solutions(enumerate(S, weight, force));
  } else {
    std::cout << series_to_string(count_series(S, weight, force)) << "\n";
  }
  return 0;
}

int run_family(const std::string& name, int n, int k, int weight, std::string mode) {
  TruncatedSeries s(weight);
  if (name == "minc") {
    if (n >= 0) throw error("minc sums over all lengths; --n does not apply");
    if (mode.empty()) mode = "recurrence";
    if (mode == "recurrence")
      s = minc_nu_series(weight);
    else if (mode == "closed")
      s = minc_closed_series(weight);
    else
      throw error("minc modes: recurrence, closed");
    std::cout << series_to_string(s) << "\n";
    return 0;
  }
  if (n < 1) throw error("--n is required (>= 1)");
  if (name == "alhc") {
    if (mode.empty()) mode = "recurrence12";
    AlhcMode m;
    if (mode == "recurrence12")
      m = AlhcMode::recurrence12;
    else if (mode == "iterated14")
      m = AlhcMode::iterated14;
    else if (mode == "rec15")
      m = AlhcMode::rec15;
    else if (mode == "closed")
      m = AlhcMode::closed;
    else
      throw error("alhc modes: recurrence12, iterated14, rec15, closed");
    s = alhc_series(n, weight, m);
  } else if (name == "tlhp") {
    if (k < 1) throw error("tlhp needs --k (1 <= k <= n)");
    if (mode.empty()) mode = "recurrence20";
    TlhpMode m;
    if (mode == "recurrence20")
      m = TlhpMode::recurrence20;
    else if (mode == "iterated_jsum")
      m = TlhpMode::iterated_jsum;
    else if (mode == "closed16")
      m = TlhpMode::closed16;
    else
      throw error("tlhp modes: recurrence20, iterated_jsum, closed16");
    s = tlhp_series(n, k, weight, m);
  } else if (name == "lhp") {
    if (!mode.empty() && mode != "closed") throw error("lhp modes: closed");
    s = lhp_closed(n, weight);
  } else if (name == "tworow") {
    if (mode.empty()) mode = "recurrence";
    if (mode == "recurrence")
      s = tworow_series(n, weight);
    else if (mode == "closed")
      s = tworow_closed_series(n, weight);
    else
      throw error("tworow modes: recurrence, closed");
  } else {
    throw error("unknown family '" + name + "' (minc, tworow, alhc, tlhp, lhp)");
  }
  std::cout << series_to_string(s) << "\n";
  return 0;
}

int report(const char* suite, const std::vector<CheckResult>& results) {
  int bad = 0;
  for (const CheckResult& r : results) {
    if (r.ok) continue;
    ++bad;
    std::cout << "FAIL [" << suite << "] " << r.name << ": " << r.detail << "\n";
  }
  std::cout << suite << ": " << results.size() - bad << "/" << results.size() << " ok\n";
  return bad;
}

int run_verify(const std::string& suite, unsigned long seed, int cases) {
  int bad = 0;
  bool all = suite == "all";
  if (all || suite == "identities") bad += report("identities", verify_identities());
  if (all || suite == "families") bad += report("families", verify_families());
  if (all || suite == "random") {
    bad += report("random", verify_random(seed, cases));
    bad += report("guideline-laws", verify_guideline_laws(seed, std::max(1, cases / 2)));
    bad += report("inhomogeneous", verify_inhomogeneous(seed, std::max(1, cases / 4)));
  }
  std::cout << (bad ? "FAIL" : "PASS") << "\n";
  return bad ? 1 : 0;
}

int run_steps_cmd(const std::string& file, const std::string& script) {
  ConstraintSystem S = parse_system(slurp(file));
  StepsResult r = run_steps(S, slurp(script), solve_options());
  std::cout << r.trace << "F = " << render_gf(r.gf) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generating functions of linear constraint systems"};
  app.require_subcommand(1);

  std::string file, script, track, name, mode, suite = "all";
  int weight = 0, n = -1, k = -1, cases = 200;
  unsigned long seed = ggf::kVerifySeed;
  bool fast_path = false, list = false, force = false;

  CLI::App* solve = app.add_subcommand("solve", "compute the generating function of a file");
  solve->add_option("file", file)->required();
  solve->add_flag("--fast-path", fast_path, "try the inverse-matrix shortcut first");

  CLI::App* expand = app.add_subcommand("expand", "expand the generating function as a series");
  expand->add_option("file", file)->required();
  expand->add_option("--weight", weight, "truncation order")->required()->check(CLI::NonNegativeNumber);
  expand->add_option("--track", track, "keep this variable separate (as s)");

  CLI::App* count = app.add_subcommand("count", "enumerate solutions by brute force");
  count->add_option("file", file)->required();
  count->add_option("--weight", weight, "maximum weight")->required()->check(CLI::NonNegativeNumber);
  count->add_flag("--list", list, "print the solutions, not just counts");
  count->add_flag("--force", force, "override the enumeration size guard");

  CLI::App* family = app.add_subcommand("family", "series of a solved constraint family");
  family->add_option("name", name, "minc | tworow | alhc | tlhp | lhp")->required();
  family->add_option("--n", n, "family size parameter");
  family->add_option("--k", k, "truncation parameter (tlhp)");
  family->add_option("--weight", weight, "truncation order")->required()->check(CLI::NonNegativeNumber);
  family->add_option("--mode", mode, "evaluation route (family-specific)");

  CLI::App* verify = app.add_subcommand("verify", "run the self-check suites");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "identities", "families", "random"}));
  verify->add_option("--seed", seed, "random-suite seed");
  verify->add_option("--cases", cases, "random-suite case count")->check(CLI::PositiveNumber);

  CLI::App* steps = app.add_subcommand("steps", "run a derivation script");
  steps->add_option("file", file)->required();
  steps->add_option("script", script)->required();

  try {
    app.parse(argc, argv);
    if (solve->parsed()) return run_solve(file, fast_path);
    if (expand->parsed()) return run_expand(file, weight, track);
    if (count->parsed()) return run_count(file, weight, list, force);
    if (family->parsed()) return run_family(name, n, k, weight, mode);
    if (verify->parsed()) return run_verify(suite, seed, cases);
    if (steps->parsed()) return run_steps_cmd(file, script);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ggf::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ggf::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
