#include "eigenpoly/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "eigenpoly/error.hpp"

namespace eigenpoly {

namespace {

std::string fmt17(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

double median_of(std::vector<double> xs) {
  if (xs.empty()) return std::numeric_limits<double>::quiet_NaN();
  const std::size_t mid = xs.size() / 2;
  std::nth_element(xs.begin(), xs.begin() + static_cast<long>(mid), xs.end());
  const double upper = xs[mid];
  if (xs.size() % 2 == 1) return upper;
  const double lower = *std::max_element(xs.begin(), xs.begin() + static_cast<long>(mid));
  return 0.5 * (lower + upper);
}

// Precision for evaluating p: the requested bits, at least the solver floor.
Precision eval_precision(const Polynomial& p, Precision requested) { return initial_precision(p, requested); }

std::vector<BigComplex> circle_points(double radius, int samples, Precision prec) {
  std::vector<BigComplex> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  const BigFloat r(radius, prec);
  const BigFloat step = pi(prec) * BigFloat(2.0, prec) / BigFloat(static_cast<double>(samples), prec);
  for (int m = 0; m < samples; ++m) pts.push_back(polar(r, step * BigFloat(static_cast<double>(m), prec)));
  return pts;
}

double circle_radius(const RootCloud& scaled, double radius_factor) {
  const double r = largest_modulus(scaled).to_double();
  return radius_factor * (r > 0.0 ? r : 1.0);
}

NumericPolynomial scaled_polynomial(const Eigenpair& e, const Rational& d, Precision prec) {
  BigFloat s = pow_rational(e.n, d, prec);
  return poly_scale_arg(e.p, BigComplex(s, BigFloat(0.0, prec)));
}

template <typename Poly>
BigComplex cauchy_impl(const Poly& p, const Poly& pj, const Poly& pj1, int j, const BigComplex& z) {
  const int n = p.degree();
  if (j < 0 || j >= n) throw Error(ErrorKind::Precondition, "empirical_cauchy: order must lie in [0, n-1]");
  BoundedValue v = poly_eval_bounded(pj, z);
  const Precision prec = z.precision();
  // Values within a few ulps of the rounding scale carry no information.
  BigFloat floor = v.magnitude * exp2i(-static_cast<long>(prec) + 16, prec);
  if (v.value.abs() <= floor) {
    throw Error(ErrorKind::EvaluationAtRoot, "empirical_cauchy: p^(" + std::to_string(j) + ") vanishes at sample");
  }
  BoundedValue w = poly_eval_bounded(pj1, z);
  BigComplex c = w.value / v.value;
  c /= BigFloat(static_cast<double>(n - j), prec);
  return c;
}

}  // namespace

RootCloud scale_cloud(const RootCloud& cloud, long n, const Rational& d) {
  if (sgn(d) <= 0) throw Error(ErrorKind::Precondition, "scaling exponent d must be positive");
  const Precision prec = std::max(cloud.precision_bits, kMinComplexPrecision);
  const BigFloat s = pow_rational(n, d, prec);
  const double sd = s.to_double();
  RootCloud out = cloud;
  for (auto& r : out.roots) {
    r.value /= s;
    r.err_radius /= sd;
  }
  return out;
}

RootCloud scaled_cloud(const Eigenpair& e, const Rational& d, Precision precision_bits) {
  return scale_cloud(roots(e.p, precision_bits), e.n, d);
}

PowerFit fit_power_law(const std::vector<double>& ns, const std::vector<double>& rs) {
  if (ns.size() != rs.size()) throw Error(ErrorKind::Precondition, "fit_power_law: size mismatch");
  const std::size_t m = ns.size();
  if (m < 2) return {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += std::log(ns[i]);
    sy += std::log(rs[i]);
  }
  const double mx = sx / static_cast<double>(m);
  const double my = sy / static_cast<double>(m);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double dx = std::log(ns[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(rs[i]) - my);
  }
  const double gamma = sxy / sxx;
  return {gamma, std::exp(my - gamma * mx)};
}

GrowthReport growth_report_from(std::vector<GrowthRow> rows, std::optional<double> prefactor) {
  GrowthReport report;
  report.prefactor_used = prefactor;
  std::vector<double> ns, rs;
  for (auto& row : rows) {
    if (prefactor) row.exponent = std::log(row.r_n / *prefactor) / std::log(static_cast<double>(row.n));
    ns.push_back(static_cast<double>(row.n));
    rs.push_back(row.r_n);
  }
  const PowerFit fit = fit_power_law(ns, rs);
  report.fitted_gamma = fit.gamma;
  report.fitted_c = fit.c;
  report.rows = std::move(rows);
  return report;
}

GrowthReport growth_report(const Operator& t, const std::vector<long>& n_grid, std::optional<double> prefactor,
                           Precision precision_bits, const EigenCache* cache) {
  if (!classify(t).degenerate) throw Error(ErrorKind::NotDegenerate, "growth_report requires a degenerate operator");
  if (n_grid.empty()) throw Error(ErrorKind::Precondition, "growth_report: empty n grid");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 1 || (i > 0 && n_grid[i] <= n_grid[i - 1])) {
      throw Error(ErrorKind::Precondition, "growth_report: n grid must be positive and strictly ascending");
    }
  }
  std::vector<GrowthRow> rows;
  for (long n : n_grid) {
    std::optional<Eigenpair> e;
    if (cache) e = cache->load(t, n);
    if (!e) {
      e = eigenpolynomial(t, n);
      if (cache) cache->store(*e);
    }
    const Modulus r = largest_modulus(roots(e->p, precision_bits));
    rows.push_back({n, r.to_double(), r.err_radius, std::nullopt});
  }
  return growth_report_from(std::move(rows), prefactor);
}

std::string GrowthReport::to_csv() const {
  std::ostringstream out;
  out << "n,r_n,exponent_n\n";
  for (const auto& row : rows) {
    out << row.n << ',' << fmt17(row.r_n) << ',' << (row.exponent ? fmt17(*row.exponent) : std::string()) << "\n";
  }
  out << "fitted_c,fitted_gamma\n" << fmt17(fitted_c) << ',' << fmt17(fitted_gamma) << "\n";
  return out.str();
}

BigComplex empirical_cauchy(const Polynomial& p, int j, const BigComplex& z) {
  if (j < 0 || j >= p.degree()) throw Error(ErrorKind::Precondition, "empirical_cauchy: order must lie in [0, n-1]");
  return cauchy_impl(p, poly_derivative(p, j), poly_derivative(p, j + 1), j, z);
}

BigComplex empirical_cauchy(const NumericPolynomial& p, int j, const BigComplex& z) {
  if (j < 0 || j >= p.degree()) throw Error(ErrorKind::Precondition, "empirical_cauchy: order must lie in [0, n-1]");
  return cauchy_impl(p, p.derivative(j), p.derivative(j + 1), j, z);
}

BigComplex empirical_cauchy(const Eigenpair& e, int j, const BigComplex& z) { return empirical_cauchy(e.p, j, z); }

BigComplex CauchyEquation::lhs(const BigComplex& z, const BigComplex& c) const {
  const Precision prec = std::max(z.precision(), c.precision());
  BigComplex sum(prec);
  for (const auto& term : terms) {
    sum += BigComplex(term.coeff, prec) * pow(z, static_cast<unsigned long>(term.zpow)) *
           pow(c, static_cast<unsigned long>(term.j));
  }
  return sum;
}

std::string CauchyEquation::to_string() const {
  std::string out;
  for (const auto& term : terms) {
    std::string piece;
    if (term.coeff == GaussianRational(-1)) piece = "-";
    else if (term.coeff == GaussianRational(1)) piece = "";
    else if (term.coeff.is_real()) piece = eigenpoly::to_string(term.coeff.re());
    else piece = "(" + to_display(term.coeff) + ")";
    if (term.zpow == 1) piece += "z";
    else if (term.zpow > 1) piece += "z^" + std::to_string(term.zpow);
    piece += term.j == 1 ? "C" : "C^" + std::to_string(term.j);
    if (!out.empty() && piece.front() != '-') out += "+";
    out += piece;
  }
  return out + "=1";
}

CauchyEquation cauchy_equation(const Operator& t) {
  const Classification c = classify(t);
  if (!c.degenerate) throw Error(ErrorKind::NotDegenerate, "cauchy_equation requires a degenerate operator");
  const int j0 = *c.j0;
  const GaussianRational norm = t.alpha(j0, j0);
  CauchyEquation eq;
  eq.j0 = j0;
  eq.terms.push_back({j0, GaussianRational(1), j0});
  for (int j : c.attainment) {
    const int deg = t.degree_of(j);
    eq.terms.push_back({j, t.alpha(j, deg) / norm, deg});
  }
  return eq;
}

std::string ResidualReport::to_csv() const {
  std::ostringstream out;
  out << "n,sample_re,sample_im,residual\n";
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    out << n << ',' << sample_points[i].re().to_string() << ',' << sample_points[i].im().to_string() << ','
        << fmt17(residuals[i]) << "\n";
  }
  return out.str();
}

ResidualReport cauchy_residual(const Operator& t, const Eigenpair& e, const Rational& d, const CircleOptions& opts,
                               const RootCloud* scaled) {
  const CauchyEquation eq = cauchy_equation(t);
  if (opts.samples < 1) throw Error(ErrorKind::Precondition, "cauchy_residual: need at least one sample");
  const Precision prec = eval_precision(e.p, opts.precision_bits);
  std::optional<RootCloud> own;
  if (!scaled) own = scaled_cloud(e, d, opts.precision_bits);
  const RootCloud& cloud = scaled ? *scaled : *own;

  const NumericPolynomial q = scaled_polynomial(e, d, prec);
  ResidualReport report;
  report.n = e.n;
  const BigComplex one(BigFloat(1.0, prec), BigFloat(0.0, prec));
  for (auto& z : circle_points(circle_radius(cloud, opts.radius_factor), opts.samples, prec)) {
    try {
      const BigComplex c = empirical_cauchy(q, 0, z);
      report.residuals.push_back((eq.lhs(z, c) - one).abs().to_double());
      report.sample_points.push_back(std::move(z));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::EvaluationAtRoot) throw;
      report.skipped.push_back(std::move(z));
    }
  }
  report.median = median_of(report.residuals);
  return report;
}

ResidualReport cauchy_residual(const Operator& t, const Eigenpair& e, const Rational& d, int num_samples,
                               double radius_factor, Precision precision_bits) {
  return cauchy_residual(t, e, d, CircleOptions{num_samples, radius_factor, precision_bits});
}

double derivative_measure_distance(const Eigenpair& e, const Rational& d, const std::vector<int>& orders,
                                   const CircleOptions& opts, const RootCloud* scaled) {
  if (orders.empty()) throw Error(ErrorKind::Precondition, "derivative_measure_distance: no orders given");
  const int max_order = *std::max_element(orders.begin(), orders.end());
  if (*std::min_element(orders.begin(), orders.end()) < 0 || e.n <= max_order) {
    throw Error(ErrorKind::Precondition, "derivative_measure_distance: orders must lie in [0, n-1]");
  }
  if (orders.size() < 2) return 0.0;
  const Precision prec = eval_precision(e.p, opts.precision_bits);
  std::optional<RootCloud> own;
  if (!scaled) own = scaled_cloud(e, d, opts.precision_bits);
  const RootCloud& cloud = scaled ? *scaled : *own;
  const NumericPolynomial q = scaled_polynomial(e, d, prec);

  double worst = 0.0;
  for (const auto& z : circle_points(circle_radius(cloud, opts.radius_factor), opts.samples, prec)) {
    std::vector<BigComplex> cs;
    try {
      for (int j : orders) cs.push_back(empirical_cauchy(q, j, z));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::EvaluationAtRoot) throw;
      continue;
    }
    for (std::size_t a = 0; a < cs.size(); ++a) {
      for (std::size_t b = a + 1; b < cs.size(); ++b) worst = std::max(worst, (cs[a] - cs[b]).abs().to_double());
    }
  }
  return worst;
}

double lemma2_margin(const Eigenpair& e, int j, const BigComplex& z0, double r_n) {
  const double r0 = z0.abs().to_double();
  if (r0 < r_n) throw Error(ErrorKind::Precondition, "lemma2_margin: |z0| must be at least r_n");
  BigComplex z = z0;
  z.set_precision(std::max(z0.precision(), eval_precision(e.p, z0.precision())));
  const BigComplex c = empirical_cauchy(e.p, j, z);
  return c.abs().to_double() - 0.5 / r0;
}

double lemma3_rhs(const Operator& t, long n, double r_n) {
  const Classification c = classify(t);
  if (!c.degenerate) throw Error(ErrorKind::NotDegenerate, "lemma3_rhs requires a degenerate operator");
  const int k = c.k;
  if (n <= k) throw Error(ErrorKind::Precondition, "lemma3_rhs: n must exceed the order k");
  if (!(r_n > 0.0)) throw Error(ErrorKind::Precondition, "lemma3_rhs: r_n must be positive");
  const int deg_k = t.degree_of(k);
  const double lead = t.alpha(k, deg_k).abs();
  const double base = static_cast<double>(n - k + 1);
  double rhs = 0.0;
  for (const auto& [j, q] : t.terms()) {
    if (j >= k) continue;
    for (int i = 0; i <= q.degree(); ++i) {
      const double a = q.coeff(i).abs() / lead;
      if (a == 0.0) continue;
      rhs += a * std::pow(2.0, k - j) * std::pow(r_n, k - j - deg_k + i) / std::pow(base, k - j);
    }
  }
  for (int i = 0; i < deg_k; ++i) rhs += t.alpha(k, i).abs() / lead / std::pow(r_n, deg_k - i);
  return rhs;
}

bool GaussLucasResult::all() const {
  return std::all_of(contained.begin(), contained.end(), [](bool b) { return b; });
}

GaussLucasResult gauss_lucas_chain(const Polynomial& p, int orders, Precision precision_bits, double tol_rel) {
  GaussLucasResult result;
  RootCloud outer = roots(p, precision_bits);
  const double tol = tol_rel * largest_modulus(outer).to_double();
  Polynomial current = p;
  for (int j = 0; j < orders; ++j) {
    Polynomial next = poly_derivative(current, 1);
    if (next.degree() < 1) {
      result.contained.push_back(true);
      break;
    }
    RootCloud inner = roots(next, precision_bits);
    result.contained.push_back(hull_contains(outer, inner, tol));
    outer = std::move(inner);
    current = std::move(next);
  }
  return result;
}

double hausdorff_distance(const RootCloud& a, const RootCloud& b) {
  const auto pa = a.points();
  const auto pb = b.points();
  if (pa.empty() || pb.empty()) throw Error(ErrorKind::Precondition, "hausdorff_distance: empty cloud");
  auto directed = [](const std::vector<std::complex<double>>& from, const std::vector<std::complex<double>>& to) {
    double worst = 0.0;
    for (const auto& x : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& y : to) best = std::min(best, std::abs(x - y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(pa, pb), directed(pb, pa));
}

const char* to_string(Interlacing v) {
  switch (v) {
    case Interlacing::Interlaced: return "true";
    case Interlacing::NotInterlaced: return "false";
    case Interlacing::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

Interlacing interlace_real(const RootCloud& a, const RootCloud& b, double imag_tol) {
  if (a.roots.size() != b.roots.size() + 1) {
    throw Error(ErrorKind::Precondition, "interlace_real: first cloud must have exactly one more root");
  }
  auto real_parts = [imag_tol](const RootCloud& c) {
    std::vector<double> xs;
    for (const auto& z : c.points()) {
      if (std::abs(z.imag()) > imag_tol) {
        throw Error(ErrorKind::NotRealRooted, "interlace_real: cloud has a root off the real axis");
      }
      xs.push_back(z.real());
    }
    std::sort(xs.begin(), xs.end());
    return xs;
  };
  const auto xa = real_parts(a);
  const auto xb = real_parts(b);
  std::vector<double> merged;
  for (std::size_t i = 0; i < xb.size(); ++i) {
    merged.push_back(xa[i]);
    merged.push_back(xb[i]);
  }
  merged.push_back(xa.back());
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    const double scale = std::max({1.0, std::abs(merged[i]), std::abs(merged[i + 1])});
    if (std::abs(merged[i + 1] - merged[i]) <= 1e-12 * scale) return Interlacing::Indeterminate;
  }
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    if (!(merged[i] < merged[i + 1])) return Interlacing::NotInterlaced;
  }
  return Interlacing::Interlaced;
}

bool strictly_increasing(const std::vector<double>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) return false;
  }
  return true;
}

}  // namespace eigenpoly
