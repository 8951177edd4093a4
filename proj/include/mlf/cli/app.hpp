#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mlf/cli/output.hpp"
#include "mlf/cli/selftest.hpp"
#include "mlf/mlf.hpp"

namespace mlf::cli {

enum ExitCode { exit_ok = 0, exit_args = 2, exit_numerics = 3, exit_selftest = 4 };

struct ArgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flag values by name; explicit flags win over config-file entries.
class Params {
 public:
  std::map<std::string, std::string> values;

  bool has(const std::string& k) const { return values.count(k) > 0; }

  std::string str(const std::string& k, const std::string& def = "") const {
    auto it = values.find(k);
    return it == values.end() ? def : it->second;
  }

  double real(const std::string& k) const {
    if (!has(k)) throw ArgError("missing --" + k);
    return parse_real(k, values.at(k));
  }
  double real(const std::string& k, double def) const { return has(k) ? real(k) : def; }

  long long integer(const std::string& k, long long def) const {
    if (!has(k)) return def;
    const std::string& s = values.at(k);
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw ArgError("--" + k + ": not an integer: " + s);
    return v;
  }

  std::vector<double> list(const std::string& k) const {
    std::vector<double> out;
    if (!has(k) || values.at(k).empty()) return out;
    std::stringstream ss(values.at(k));
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_real(k, item));
    return out;
  }

  cplx complex(const std::string& k) const {
    const auto v = list(k);
    if (v.size() == 1) return {v[0], 0.0};
    if (v.size() == 2) return {v[0], v[1]};
    throw ArgError("--" + k + ": expected X or X,Y");
  }

 private:
  static double parse_real(const std::string& k, const std::string& s) {
    size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw ArgError("--" + k + ": not a number: " + s);
    return v;
  }
};

/// Reads `key=value` lines; blank lines and lines starting with '#' are skipped.
inline std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgError("cannot open config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ArgError(path + ":" + std::to_string(lineno) + ": expected key=value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

namespace detail {

inline std::vector<Cell> report_cells(const EvalReport& r) {
  return {r.value.real(), r.value.imag(), r.abs_err, std::string(method_name(r.method)),
          static_cast<long long>(r.terms)};
}

inline const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> c{"value_re", "value_im", "abs_err", "method", "terms"};
  return c;
}

inline EvalReport eval_fn(const Params& p, cplx z, double tol) {
  const std::string fn = p.str("fn", "ml");
  EvalOptions opt;
  opt.tol = tol;
  if (fn == "ml") return ml_eval(MLParams{p.real("alpha"), p.real("beta", 1.0), 1.0}, z, opt);
  if (fn == "ml3")
    return ml_prabhakar(MLParams{p.real("alpha"), p.real("beta", 1.0), p.real("gamma", 1.0)}, z, opt);
  if (fn == "multi") return ml_multiindex(MultiIndexParams{p.list("rho"), p.list("mu")}, z, tol);
  if (fn == "ks") return ml_kilbas_saigo(p.real("alpha"), p.real("m"), p.real("beta"), z, tol);
  if (fn == "wright") return wright_phi(p.real("alpha"), p.real("beta"), z, tol);
  if (fn == "mseries") return m_series(p.list("a"), p.list("b"), p.real("alpha"), z, tol);
  throw ArgError("unknown --fn " + fn + " (ml, ml3, multi, ks, wright, mseries)");
}

inline std::uint64_t seed_of(const Params& p) {
  if (const char* env = std::getenv("ML_SEED")) {
    Params e;
    e.values["ML_SEED"] = env;
    return static_cast<std::uint64_t>(e.integer("ML_SEED", 0));
  }
  return static_cast<std::uint64_t>(p.integer("seed", 1));
}

inline Table cmd_eval(const Params& p, double tol) {
  Table t;
  t.columns = report_columns();
  t.rows.push_back(report_cells(eval_fn(p, p.complex("z"), tol)));
  return t;
}

inline Table cmd_table(const Params& p, double tol) {
  const double a = p.real("zmin"), b = p.real("zmax");
  const long long n = p.integer("n", 11);
  if (n < 1) throw ArgError("--n must be at least 1");
  Table t;
  t.columns = {"z"};
  for (const auto& c : report_columns()) t.columns.push_back(c);
  for (long long i = 0; i < n; ++i) {
    const double z = n == 1 ? a : a + (b - a) * double(i) / double(n - 1);
    auto row = report_cells(eval_fn(p, z, tol));
    row.insert(row.begin(), z);
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline Table cmd_sample(const Params& p) {
  const std::string dist = p.str("dist", "ml");
  const long long n = p.integer("n", 1000);
  if (n < 2) throw ArgError("--n must be at least 2");
  const std::uint64_t seed = seed_of(p);
  RandomStream rng(seed);
  std::vector<double> xs;
  if (dist == "ml") {
    const double a = p.real("alpha");
    for (long long i = 0; i < n; ++i) xs.push_back(ml_sample(a, rng));
  } else if (dist == "genml") {
    const DistParams d{p.real("alpha"), p.real("eta", 1.0), p.real("delta", 1.0)};
    for (long long i = 0; i < n; ++i) xs.push_back(genml_sample(d, rng));
  } else if (dist == "levy") {
    const auto alphas = p.list("alpha");
    for (long long i = 0; i < n; ++i) xs.push_back(levy_product_sample(alphas, rng));
  } else if (dist == "mlar1") {
    xs = mlar1_simulate(p.real("alpha"), p.real("a"), p.real("p", 0.0), size_t(n), rng);
  } else {
    throw ArgError("unknown --dist " + dist + " (ml, genml, levy, mlar1)");
  }
  Table t;
  t.columns = {"i", "x"};
  if (p.integer("draws", 1) != 0)
    for (size_t i = 0; i < xs.size(); ++i) t.rows.push_back({static_cast<long long>(i), xs[i]});
  const auto lap = mean_se(xs, [](double x) { return std::exp(-x); });
  const auto lg = mean_se(xs, [](double x) { return std::log(x); });
  t.summary = {{"n", static_cast<long long>(xs.size())},
               {"seed", static_cast<long long>(seed)},
               {"mean_exp_neg_x", lap.mean},
               {"se_exp_neg_x", lap.se},
               {"mean_log_x", lg.mean},
               {"se_log_x", lg.se}};
  return t;
}

// Source samples from a CSV file: `t,f` rows on a uniform grid, '#' lines skipped.
inline Grid1D read_source(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgError("cannot open source file " + path);
  std::vector<double> ts, fs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string a, b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',')) throw ArgError(path + ": expected t,f rows");
    Params q;
    q.values = {{"t", a}, {"f", b}};
    ts.push_back(q.real("t"));
    fs.push_back(q.real("f"));
  }
  if (ts.size() < 2) throw ArgError(path + ": need at least two rows");
  const double dt = (ts.back() - ts.front()) / double(ts.size() - 1);
  for (size_t i = 1; i < ts.size(); ++i)
    if (std::abs(ts[i] - ts.front() - dt * double(i)) > 1e-9 * std::max(1.0, std::abs(ts.back())))
      throw ArgError(path + ": t must be uniformly spaced");
  return Grid1D{ts.front(), dt, fs};
}

inline Table cmd_kinetic(const Params& p) {
  const double nu = p.real("nu"), c = p.real("c"), N0 = p.real("N0", 1.0);
  Table t;
  if (p.has("source")) {
    const Grid1D f = read_source(p.str("source"));
    const Grid1D N = kinetic_volterra(f, c, nu, N0);
    t.columns = {"t", "N"};
    for (size_t i = 0; i < N.size(); ++i) t.rows.push_back({N.t(i), N.values[i]});
    return t;
  }
  const double mu = p.real("mu", 1.0), T = p.real("T", 1.0);
  const long long n = p.integer("n", 100);
  if (n < 1 || !(T > 0.0)) throw ArgError("need --T > 0 and --n >= 1");
  const KineticParams k{N0, c, nu, mu};
  const Grid1D f = sample_grid([&](double s) { return s > 0.0 ? std::pow(s, mu - 1.0) : (mu == 1.0 ? 1.0 : 0.0); },
                               T, size_t(n));
  mlf::detail::check_kinetic(k);
  const Grid1D N = kinetic_volterra(f, c, nu, N0, kinetic_start_exponents(nu, mu));
  t.columns = {"t", "N_volterra", "N_closed"};
  for (size_t i = 0; i < N.size(); ++i) {
    const double s = N.t(i);
    double closed;
    if (s == 0.0) closed = mu == 1.0 ? N0 : (mu > 1.0 ? 0.0 : std::numeric_limits<double>::infinity());
    else closed = kinetic_solution_power(k, s);
    t.rows.push_back({s, N.values[i], closed});
  }
  return t;
}

inline Table cmd_diffuse(const Params& p) {
  const DiffusionParams d{p.real("alpha", 2.0), p.real("beta", 1.0), p.real("eta", 1.0)};
  const double time = p.real("t", 1.0), xmax = p.real("xmax", 5.0);
  const long long n = p.integer("n", 51);
  if (n < 1) throw ArgError("--n must be at least 1");
  Table t;
  t.columns = {"x", "density", "abs_err"};
  for (long long i = 0; i < n; ++i) {
    const double x = n == 1 ? xmax : xmax * double(i) / double(n - 1);
    const auto r = frd_green_report(d, x, time);
    if (!r.converged) throw convergence_error("frd_green", "cosine quadrature did not converge");
    t.rows.push_back({x, r.value, r.abs_err});
  }
  return t;
}

inline Table cmd_relax(const Params& p) {
  const WaveParams w{p.real("alpha"), p.real("beta"), p.real("a")};
  const double b = p.real("b"), rho = p.real("rho", w.alpha), time = p.real("t");
  const auto r = three_term_relax_report(w, b, rho, time, int(p.integer("terms", 200)));
  const auto tl = talbot_ilt(
      [&](cplx s) { return std::pow(s, rho - 1.0) / (std::pow(s, w.alpha) + w.a * std::pow(s, w.beta) + b); }, time);
  Table t;
  t.columns = {"t", "value", "abs_err", "terms", "talbot", "talbot_err"};
  t.rows.push_back({time, r.value, r.abs_err, static_cast<long long>(r.terms), tl.value, tl.abs_err});
  return t;
}

}  // namespace detail

/// Runs the command line; output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Mittag-Leffler functions, fractional operators and their applications"};
  app.require_subcommand(1);
  std::string format = "csv", config;
  double tol = 1e-14;
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--config", config, "key=value file merged under explicit flags");
  app.add_option("--tol", tol, "target accuracy for evaluations")->check(CLI::PositiveNumber);

  std::map<std::string, std::string> flags;
  const std::map<std::string, std::vector<std::string>> keys{
      {"eval", {"fn", "alpha", "beta", "gamma", "z", "rho", "mu", "m", "a", "b"}},
      {"table", {"fn", "alpha", "beta", "gamma", "zmin", "zmax", "n", "rho", "mu", "m", "a", "b"}},
      {"sample", {"dist", "alpha", "eta", "delta", "a", "p", "n", "seed", "draws"}},
      {"kinetic", {"nu", "c", "mu", "N0", "source", "T", "n"}},
      {"diffuse", {"alpha", "beta", "eta", "t", "xmax", "n"}},
      {"relax", {"alpha", "beta", "a", "b", "rho", "t", "terms"}},
      {"selftest", {}},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, ks] : keys) {
    CLI::App* s = app.add_subcommand(name);
    subs[name] = s;
    for (const auto& k : ks) s->add_option("--" + k, flags[name + "." + k]);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_args;
  }

  std::string cmd;
  for (const auto& [name, s] : subs)
    if (s->parsed()) cmd = name;

  try {
    Params p;
    if (!config.empty()) {
      for (const auto& [k, v] : read_config(config)) {
        const auto& ks = keys.at(cmd);
        if (std::find(ks.begin(), ks.end(), k) == ks.end()) throw ArgError("config key not used by " + cmd + ": " + k);
        p.values[k] = v;
      }
    }
    for (const auto& k : keys.at(cmd))
      if (subs[cmd]->count("--" + k) > 0) p.values[k] = flags[cmd + "." + k];

    const Format f = format == "json" ? Format::json : Format::csv;
    if (cmd == "selftest") return run_selftest(out) == 0 ? exit_ok : exit_selftest;
    Table t;
    if (cmd == "eval") t = detail::cmd_eval(p, tol);
    else if (cmd == "table") t = detail::cmd_table(p, tol);
    else if (cmd == "sample") t = detail::cmd_sample(p);
    else if (cmd == "kinetic") t = detail::cmd_kinetic(p);
    else if (cmd == "diffuse") t = detail::cmd_diffuse(p);
    else t = detail::cmd_relax(p);
    emit(t, f, out);
    return exit_ok;
  } catch (const ArgError& e) {
    err << "argument error: " << e.what() << '\n';
    return exit_args;
  } catch (const convergence_error& e) {
    err << "numerical non-convergence in " << e.regime << ": " << e.what() << '\n';
    return exit_numerics;
  } catch (const overflow_error& e) {
    err << "numerical overflow: " << e.what() << '\n';
    return exit_numerics;
  } catch (const domain_error& e) {
    err << "argument error: " << e.what() << '\n';
    return exit_args;
  } catch (const error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return exit_numerics;
  }
}

}  // namespace mlf::cli
