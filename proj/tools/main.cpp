// eigenpoly: command-line driver for eigenpolynomial experiments.

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eigenpoly/analysis.hpp"
#include "eigenpoly/io.hpp"

namespace fs = std::filesystem;
using namespace eigenpoly;

namespace {

struct RunConfig {
  std::string operator_path;
  std::vector<long> ns;
  std::vector<long> n_grid;
  Precision precision_bits = 192;
  std::optional<double> prefactor;
  std::string out_dir = ".";
  std::string cache_dir;
  int samples = 64;
  double radius_factor = 2.0;
  double imag_tol = 1e-9;
  std::string d_override;
  bool dump = false;
  bool unscaled = false;
};

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

struct Session {
  const RunConfig& cfg;
  Operator op;
  std::string name;
  EigenCache cache;
  std::vector<long> ns;

  explicit Session(const RunConfig& c)
      : cfg(c), op(Operator::load(c.operator_path)), name(op.name()), cache(cache_path(c)), ns(grid(c)) {
    if (name.empty()) name = fs::path(c.operator_path).stem().string();
  }

  static fs::path cache_path(const RunConfig& c) {
    return c.cache_dir.empty() ? fs::path(c.out_dir) / "cache" : fs::path(c.cache_dir);
  }

  static std::vector<long> grid(const RunConfig& c) {
    std::vector<long> ns = c.ns;
    ns.insert(ns.end(), c.n_grid.begin(), c.n_grid.end());
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (ns[i] < 1) throw Error(ErrorKind::Precondition, "degrees must be positive");
      if (i > 0 && ns[i] <= ns[i - 1]) throw Error(ErrorKind::Precondition, "n grid must be strictly ascending");
    }
    return ns;
  }

  fs::path out(const std::string& file) const { return fs::path(cfg.out_dir) / file; }

  void require_grid(std::size_t at_least = 1) const {
    if (ns.size() < at_least) {
      throw Error(ErrorKind::Precondition, "need at least " + std::to_string(at_least) + " degree(s) via --n or --n-grid");
    }
  }

  Rational scale_exponent() const {
    if (!cfg.d_override.empty()) return parse_rational(cfg.d_override);
    return exponent_d(op);
  }

  // Eigenpairs for the grid; failures are reported on stderr and counted.
  std::vector<EigenOutcome> pairs(int& failures) const {
    auto outcomes = eigenpolynomial_range(op, ns, &cache);
    for (const auto& o : outcomes) {
      if (!o.ok()) {
        std::cerr << "n=" << o.n << ": " << o.error << "\n";
        ++failures;
      }
    }
    return outcomes;
  }
};

std::string quoted_list(const std::vector<std::string>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ",\"" : "\"") + xs[i] + "\"";
  return s + "]";
}

int cmd_classify(const RunConfig& cfg) {
  Session s(cfg);
  const Classification c = classify(s.op);
  std::ostringstream text;
  text << s.name << ": k=" << c.k << ", exactly-solvable, " << (c.degenerate ? "degenerate" : "non-degenerate");
  if (c.j0) text << ", j0=" << *c.j0;
  if (c.d) text << ", d=" << to_string(*c.d);
  if (c.b) text << ", b=" << to_string(*c.b);
  if (c.d) {
    text << ", A={";
    bool first = true;
    for (int j : c.attainment) {
      text << (first ? "" : ",") << j;
      first = false;
    }
    text << "}";
  }
  if (c.b && c.d) text << ", b=d: " << (*c.b == *c.d ? "true" : "false");
  std::cout << text.str() << "\n";
  nlohmann::json report = c.to_json();
  report["name"] = s.name;
  report["digest"] = s.op.digest();
  write_atomic(s.out(s.name + "-classify.json"), report.dump(2) + "\n");
  return 0;
}

int cmd_eigen(const RunConfig& cfg) {
  Session s(cfg);
  s.require_grid();
  classify(s.op);
  int warnings = 0;
  for (const auto& o : s.pairs(warnings)) {
    if (!o.ok()) continue;
    const Eigenpair& e = *o.pair;
    std::cout << "n=" << e.n << " lambda=" << to_display(e.lambda) << " bits=" << e.p.max_coeff_bits();
    if (cfg.dump) {
      std::vector<std::string> cs;
      for (const auto& a : e.p.coeffs()) cs.push_back(to_display(a));
      std::cout << " coeffs=" << quoted_list(cs);
    }
    std::cout << "\n";
  }
  std::cout << "warnings: " << warnings << "\n";
  return 0;
}

int cmd_growth(const RunConfig& cfg) {
  Session s(cfg);
  s.require_grid();
  const GrowthReport report = growth_report(s.op, s.ns, cfg.prefactor, cfg.precision_bits, &s.cache);
  const std::string csv = report.to_csv();
  write_atomic(s.out(s.name + "-growth.csv"), csv);
  std::cout << csv;
  return 0;
}

int cmd_scaled(const RunConfig& cfg) {
  Session s(cfg);
  s.require_grid();
  const Rational d = s.scale_exponent();
  int failures = 0;
  for (const auto& o : s.pairs(failures)) {
    if (!o.ok()) continue;
    const RootCloud cloud = roots(o.pair->p, cfg.precision_bits);
    const RootCloud scaled = scale_cloud(cloud, o.n, d);
    write_atomic(s.out(s.name + "-roots-" + std::to_string(o.n) + ".csv"), roots_csv(cloud, o.n));
    write_atomic(s.out(s.name + "-scaled-" + std::to_string(o.n) + ".csv"), roots_csv(scaled, o.n, true));
    std::cout << "n=" << o.n << " d=" << to_string(d) << " r_n=" << fmt(largest_modulus(cloud).to_double())
              << " scaled_max=" << fmt(largest_modulus(scaled).to_double()) << "\n";
  }
  return failures ? 1 : 0;
}

int cmd_cauchy(const RunConfig& cfg) {
  Session s(cfg);
  s.require_grid();
  const Rational d = s.scale_exponent();
  const Classification c = classify(s.op);
  std::cout << "equation: " << cauchy_equation(s.op).to_string() << "\n";
  const CircleOptions circle{cfg.samples, cfg.radius_factor, cfg.precision_bits};
  int failures = 0;
  std::string csv = "n,sample_re,sample_im,residual\n";
  for (const auto& o : s.pairs(failures)) {
    if (!o.ok()) continue;
    const RootCloud scaled = scaled_cloud(*o.pair, d, cfg.precision_bits);
    const ResidualReport r = cauchy_residual(s.op, *o.pair, d, circle, &scaled);
    const std::string body = r.to_csv();
    csv += body.substr(body.find('\n') + 1);
    std::vector<int> orders;
    for (int j = 0; j < c.k && j < o.n; ++j) orders.push_back(j);
    const double dist = derivative_measure_distance(*o.pair, d, orders, circle, &scaled);
    std::cout << "n=" << o.n << " median_residual=" << fmt(r.median) << " skipped=" << r.skipped.size()
              << " derivative_distance=" << fmt(dist) << "\n";
  }
  write_atomic(s.out(s.name + "-residual.csv"), csv);
  return failures ? 1 : 0;
}

struct CheckRow {
  std::string check;
  std::string n;
  std::string param;
  double value;
  double threshold;
  bool pass;
};

int cmd_checks(const RunConfig& cfg) {
  Session s(cfg);
  s.require_grid();
  const Classification c = classify(s.op);
  if (!c.degenerate) throw Error(ErrorKind::NotDegenerate, "checks require a degenerate operator");
  int failures = 0;
  std::vector<CheckRow> rows;
  std::vector<double> ns, rs;
  for (const auto& o : s.pairs(failures)) {
    if (!o.ok()) continue;
    const Eigenpair& e = *o.pair;
    const std::string n = std::to_string(o.n);
    const RootCloud cloud = roots(e.p, cfg.precision_bits);
    const double r = largest_modulus(cloud).to_double();
    ns.push_back(static_cast<double>(o.n));
    rs.push_back(r);

    const Precision prec = std::max(cloud.precision_bits, cfg.precision_bits);
    const BigFloat radius(1.0001 * r, prec);
    const BigFloat step = pi(prec) * BigFloat(2.0, prec) / BigFloat(32.0, prec);
    for (int j = 0; j < c.k && j < o.n; ++j) {
      double worst = INFINITY;
      for (int m = 0; m < 32; ++m) {
        const BigComplex z0 = polar(radius, step * BigFloat(static_cast<double>(m), prec));
        worst = std::min(worst, lemma2_margin(e, j, z0, r));
      }
      rows.push_back({"lemma2", n, "j=" + std::to_string(j), worst, -1e-9, worst >= -1e-9});
    }
    if (o.n > c.k) {
      const double rhs = lemma3_rhs(s.op, o.n, r);
      rows.push_back({"lemma3", n, "", rhs, 1.0 - 1e-9, rhs >= 1.0 - 1e-9});
    }
    const GaussLucasResult gl = gauss_lucas_chain(e.p, c.k, cfg.precision_bits, 1e-6);
    for (std::size_t j = 0; j < gl.contained.size(); ++j) {
      rows.push_back({"gauss_lucas", n, "j=" + std::to_string(j), gl.contained[j] ? 1.0 : 0.0, 1.0, gl.contained[j]});
    }
  }
  if (rs.size() >= 2) {
    rows.push_back({"r_n_increasing", "all", "", static_cast<double>(rs.size()), 0.0, strictly_increasing(rs)});
    if (c.b) {
      const double gamma = c.b->get_d() / 2.0;
      std::vector<double> ratio;
      for (std::size_t i = 0; i < rs.size(); ++i) ratio.push_back(rs[i] / std::pow(ns[i], gamma));
      rows.push_back({"r_n_over_n^(b/2)_increasing", "all", "gamma=" + fmt(gamma), static_cast<double>(rs.size()),
                      0.0, strictly_increasing(ratio)});
    }
  }
  std::string csv = "check,n,param,value,threshold,status\n";
  for (const auto& row : rows) {
    csv += row.check + "," + row.n + "," + row.param + "," + fmt(row.value) + "," + fmt(row.threshold) + "," +
           (row.pass ? "pass" : "fail") + "\n";
    if (!row.pass) ++failures;
  }
  write_atomic(s.out(s.name + "-checks.csv"), csv);
  std::cout << csv;
  return failures ? 1 : 0;
}

int cmd_interlace(const RunConfig& cfg) {
  Session s(cfg);
  if (s.ns.size() != 2 || s.ns[1] != s.ns[0] + 1) {
    throw Error(ErrorKind::Precondition, "interlace needs two consecutive degrees");
  }
  int failures = 0;
  const auto outcomes = s.pairs(failures);
  if (failures) return 1;
  std::vector<RootCloud> clouds;
  for (const auto& o : outcomes) {
    RootCloud cloud = roots(o.pair->p, cfg.precision_bits);
    clouds.push_back(cfg.unscaled ? std::move(cloud) : scale_cloud(cloud, o.n, s.scale_exponent()));
  }
  const Interlacing v = interlace_real(clouds[1], clouds[0], cfg.imag_tol);
  std::cout << "interlace: " << to_string(v) << "\n";
  return v == Interlacing::Interlaced ? 0 : 1;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--operator", cfg.operator_path, "operator JSON file")->required();
  sub->add_option("--n", cfg.ns, "degree (repeatable)");
  sub->add_option("--n-grid", cfg.n_grid, "comma-separated degrees")->delimiter(',');
  sub->add_option("--precision-bits", cfg.precision_bits, "requested working precision")
      ->check(CLI::Range(Precision{64}, Precision{1} << 20));
  sub->add_option("--prefactor", cfg.prefactor, "c in r_n = c n^exponent");
  sub->add_option("--out", cfg.out_dir, "output directory");
  sub->add_option("--cache", cfg.cache_dir, "eigenpair cache directory (default <out>/cache)");
  sub->add_option("--samples", cfg.samples, "sample points on the residual circle")->check(CLI::PositiveNumber);
  sub->add_option("--radius-factor", cfg.radius_factor, "residual circle radius over max scaled modulus")
      ->check([](const std::string& v) { return std::stod(v) > 1.0 ? std::string() : "must exceed 1"; });
  sub->add_option("--imag-tol", cfg.imag_tol, "imaginary-part tolerance for real-rootedness");
  sub->add_option("--d", cfg.d_override, "scaling exponent override, e.g. 2/3");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenpolynomials of exactly-solvable differential operators"};
  app.require_subcommand(1);
  RunConfig cfg;

  struct Entry {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
  };
  const Entry entries[] = {
      {"classify", "print k, j0, d, b, A and write <name>-classify.json", cmd_classify},
      {"eigen", "compute and cache eigenpolynomials", cmd_eigen},
      {"growth", "largest root modulus per n and power-law fit", cmd_growth},
      {"scaled", "root clouds of p_n and q_n(z) = p_n(n^d z)", cmd_scaled},
      {"cauchy", "residual of the algebraic Cauchy-transform equation", cmd_cauchy},
      {"checks", "inequality, hull and monotonicity checks", cmd_checks},
      {"interlace", "interlacing of real roots of consecutive degrees", cmd_interlace},
  };
  std::vector<std::pair<CLI::App*, int (*)(const RunConfig&)>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub, cfg);
    if (std::string(e.name) == "eigen") sub->add_flag("--dump", cfg.dump, "print exact coefficients");
    if (std::string(e.name) == "interlace") sub->add_flag("--unscaled", cfg.unscaled, "compare p_n instead of q_n");
    subs.emplace_back(sub, e.run);
  }

  CLI11_PARSE(app, argc, argv);
  try {
    for (const auto& [sub, run] : subs) {
      if (sub->parsed()) return run(cfg);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
