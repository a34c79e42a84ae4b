#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "support.hpp"

using namespace eptest;

TEST_CASE("scaled clouds") {
  const Eigenpair lag = eigenpolynomial(load_op("laguerre"), 2);
  const RootCloud s = scaled_cloud(lag, 1, 192);
  std::vector<double> xs;
  for (const auto& z : s.points()) xs.push_back(z.real());
  std::sort(xs.begin(), xs.end());
  CHECK(xs[0] == doctest::Approx((2.0 - std::sqrt(2.0)) / 2.0).epsilon(1e-14));
  CHECK(xs[1] == doctest::Approx((2.0 + std::sqrt(2.0)) / 2.0).epsilon(1e-14));

  const Eigenpair one = eigenpolynomial(load_op("laguerre"), 1);
  const RootCloud c = roots(one.p, 192);
  const RootCloud same = scale_cloud(c, 1, Q("5/7"));
  CHECK((same.roots[0].value - c.roots[0].value).is_zero());

  const Eigenpair t1 = eigenpolynomial(load_op("T1"), 100);
  const RootCloud q = scaled_cloud(t1, 1, 192);
  CHECK(q.roots.size() == 100);
  for (const auto& z : q.points()) CHECK(std::abs(z) <= 3.0);
}

TEST_CASE("scaling consistency: max scaled modulus equals r_n / n^d") {
  for (const char* name : {"T2", "T4", "T6_tilde"}) {
    const Operator t = load_op(name);
    const Rational d = exponent_d(t);
    const Eigenpair e = eigenpolynomial(t, 50);
    const RootCloud c = roots(e.p, 192);
    const Modulus r = largest_modulus(c);
    const Modulus rs = largest_modulus(scale_cloud(c, 50, d));
    const double nd = std::pow(50.0, d.get_d());
    CHECK(std::abs(rs.to_double() - r.to_double() / nd) <= r.err_radius / nd + rs.err_radius + 1e-15 * rs.to_double());
  }
}

TEST_CASE("growth report") {
  const GrowthReport g = growth_report(load_op("T2"), {50, 100}, 1.3, 192);
  REQUIRE(g.rows.size() == 2);
  CHECK(std::abs(*g.rows[0].exponent - 0.671977) <= 1e-3);
  CHECK(std::abs(*g.rows[1].exponent - 0.694847) <= 1e-3);
  CHECK(*g.prefactor_used == 1.3);
  const double lhs = std::log(g.rows[1].r_n / g.rows[0].r_n) / std::log(2.0);
  CHECK(g.fitted_gamma == doctest::Approx(lhs));
  const std::string csv = g.to_csv();
  CHECK(csv.rfind("n,r_n,exponent_n\n50,", 0) == 0);
  CHECK(csv.find("\nfitted_c,fitted_gamma\n") != std::string::npos);

  CHECK_THROWS_AS(growth_report(load_op("zD"), {5}, std::nullopt, 192), Error);
  CHECK_THROWS_AS(growth_report(load_op("T2"), {10, 5}, std::nullopt, 192), Error);
  CHECK_THROWS_AS(growth_report(load_op("T2"), {}, std::nullopt, 192), Error);

  const PowerFit f = fit_power_law({1, 2, 4, 8}, {3, 3 * std::sqrt(2.0), 6, 6 * std::sqrt(2.0)});
  CHECK(f.gamma == doctest::Approx(0.5));
  CHECK(f.c == doctest::Approx(3.0));
  CHECK(std::isnan(fit_power_law({2}, {3}).gamma));
}

TEST_CASE("empirical Cauchy transform examples") {
  CHECK(empirical_cauchy(P({0, 0, 1}), 0, C(2)).re().to_double() == doctest::Approx(0.5));
  const Polynomial h = P({GaussianRational(Q("-1/2")), 0, 1});
  CHECK(empirical_cauchy(h, 0, C(1)).re().to_double() == doctest::Approx(2.0));
  CHECK(empirical_cauchy(h, 1, C(1)).re().to_double() == doctest::Approx(1.0));
  CHECK_THROWS_AS(empirical_cauchy(P({-1, 1}), 0, C(1)), Error);
  CHECK_THROWS_AS(empirical_cauchy(h, 2, C(1)), Error);

  // Degree one: C = 1/(z - a) exactly.
  const Eigenpair one = eigenpolynomial(load_op("laguerre"), 1);
  const BigComplex z = C(0.3, 2.0);
  const BigComplex want = BigComplex(GaussianRational(1), 192) / (z - C(1));
  CHECK((empirical_cauchy(one, 0, z) - want).abs().to_double() < 1e-50);
}

TEST_CASE("Cauchy equations print as published") {
  CHECK(cauchy_equation(load_op("T4")).to_string() == "z^3C^3+z^2C^5=1");
  CHECK(cauchy_equation(load_op("T5")).to_string() == "z^5C^5+z^4C^6+z^2C^8=1");
  CHECK(cauchy_equation(load_op("T1")).to_string() == "zC+zC^2+zC^3+zC^4+zC^5=1");
  for (const char* name : {"T1", "T4", "T5"}) {
    const Operator t = load_op(name);
    CHECK(cauchy_equation(t).terms.size() == attainment_set(t).size() + 1);
  }
  const CauchyEquation norm = cauchy_equation(Operator::parse("2z^3D^3+z^2D^5"));
  CHECK(norm.terms[0].coeff == GaussianRational(1));
  CHECK(norm.terms[1].coeff == GaussianRational(Q("1/2")));
}

TEST_CASE("Cauchy equation vanishes at an exact solution") {
  // T4 at z = 1: C^3 + C^5 = 1 has a real root in (0, 1); bisect it.
  const CauchyEquation eq = cauchy_equation(load_op("T4"));
  const Precision prec = 256;
  BigFloat lo(0.0, prec), hi(1.0, prec);
  const BigFloat one(1.0, prec), half(0.5, prec);
  for (int it = 0; it < 250; ++it) {
    const BigFloat mid = (lo + hi) * half;
    const BigFloat m3 = mid * mid * mid;
    if (m3 + m3 * mid * mid < one) lo = mid;
    else hi = mid;
  }
  const BigComplex c(lo, BigFloat(prec));
  const BigComplex z(one, BigFloat(prec));
  CHECK((eq.lhs(z, c) - BigComplex(GaussianRational(1), prec)).abs().to_double() < 1e-70);
}

TEST_CASE("residual report shape") {
  const Operator t = load_op("T4");
  const Eigenpair e = eigenpolynomial(t, 25);
  const ResidualReport r = cauchy_residual(t, e, Q("2/3"), 16, 2.0, 192);
  CHECK(r.n == 25);
  CHECK(r.sample_points.size() + r.skipped.size() == 16);
  CHECK(r.residuals.size() == r.sample_points.size());
  CHECK(r.to_csv().rfind("n,sample_re,sample_im,residual\n", 0) == 0);
  CHECK(std::isfinite(r.median));
}

TEST_CASE("T4 residual decreases with n") {
  const Operator t = load_op("T4");
  std::vector<double> medians;
  for (long n : {25L, 50L, 100L}) medians.push_back(cauchy_residual(t, eigenpolynomial(t, n), Q("2/3"), 64, 2.0, 192).median);
  CHECK(medians[1] < medians[0]);
  CHECK(medians[2] < medians[1]);
}

TEST_CASE("derivative measure distance") {
  const CircleOptions opts;
  CHECK(derivative_measure_distance(eigenpolynomial(load_op("laguerre"), 1), 1, {0}, opts) == 0.0);
  const Eigenpair mono{7, GaussianRational(7), P({0, 0, 0, 0, 0, 0, 0, 1}), ""};
  const RootCloud origin = make_cloud(std::vector<std::complex<double>>(7, {0.0, 0.0}), 192);
  CHECK(derivative_measure_distance(mono, 1, {0, 1, 2, 3}, opts, &origin) < 1e-50);

  const Operator t7 = load_op("T7");
  const double d50 = derivative_measure_distance(eigenpolynomial(t7, 50), Q("2/3"), {0, 1, 2}, opts);
  const double d100 = derivative_measure_distance(eigenpolynomial(t7, 100), Q("2/3"), {0, 1, 2}, opts);
  CHECK(d100 < d50);
}

TEST_CASE("lemma2_margin examples") {
  const Eigenpair h{2, GaussianRational(-4), P({GaussianRational(Q("-1/2")), 0, 1}), ""};
  CHECK(lemma2_margin(h, 0, C(1), std::sqrt(0.5)) == doctest::Approx(1.5));
  CHECK_THROWS_AS(lemma2_margin(h, 0, C(0.5), std::sqrt(0.5)), Error);

  const Eigenpair mono{5, GaussianRational(5), P({0, 0, 0, 0, 0, 1}), ""};
  const double r = 3.0;
  CHECK(lemma2_margin(mono, 0, C(0, r), 0.0) == doctest::Approx(1.0 / (2 * r)));

  const Eigenpair lag = eigenpolynomial(load_op("laguerre"), 2);
  const double r2 = 2.0 + std::sqrt(2.0);
  CHECK(lemma2_margin(lag, 0, C(1.0001 * r2), r2) >= 0.0);
}

TEST_CASE("lemma3_rhs examples") {
  const Operator h = load_op("hermite");
  const double r50 = hermite_largest_zero(50);
  CHECK(lemma3_rhs(h, 50, r50) == doctest::Approx(4 * r50 * r50 / 49.0));
  CHECK(lemma3_rhs(h, 50, 10.0) == doctest::Approx(400.0 / 49.0));
  CHECK(lemma3_rhs(h, 50, r50) >= 1.0);

  // Two-term case: K r^{k - deg Q_k} / (n - k + 1)^{k - j0} with K = 2^{k - j0}.
  const Operator t6 = load_op("T6");
  const double r = 7.5;
  CHECK(lemma3_rhs(t6, 40, r) == doctest::Approx(8.0 * std::pow(r, 4) / std::pow(35.0, 3)));
  CHECK_THROWS_AS(lemma3_rhs(t6, 6, r), Error);
}

TEST_CASE("Gauss-Lucas chain") {
  for (const char* name : {"T1", "T3", "T6_tilde"}) {
    const Operator t = load_op(name);
    const GaussLucasResult gl = gauss_lucas_chain(eigenpolynomial(t, 30).p, t.order(), 192, 1e-6);
    CHECK(gl.contained.size() == static_cast<std::size_t>(t.order()));
    CHECK(gl.all());
  }
}

TEST_CASE("Hausdorff distance") {
  const RootCloud a = make_cloud({{0, 0}, {1, 0}});
  const RootCloud b = make_cloud({{0, 0}, {1, 0}, {4, 0}});
  CHECK(hausdorff_distance(a, a) == 0.0);
  CHECK(hausdorff_distance(a, b) == doctest::Approx(3.0));
  CHECK(hausdorff_distance(b, a) == doctest::Approx(3.0));
}

TEST_CASE("interlacing examples") {
  const RootCloud lag2 = roots(P({2, -4, 1}), 128);
  CHECK(interlace_real(lag2, roots(P({-1, 1}), 128), 1e-9) == Interlacing::Interlaced);
  CHECK(interlace_real(make_cloud({{0, 0}, {2, 0}}), make_cloud({{3, 0}}), 1e-9) == Interlacing::NotInterlaced);
  const auto herm = monic_hermite(3);
  CHECK(interlace_real(roots(herm[3], 128), roots(herm[2], 128), 1e-9) == Interlacing::Interlaced);
  CHECK(interlace_real(make_cloud({{0, 0}, {2, 0}}), make_cloud({{1e-14, 0}}), 1e-9) == Interlacing::Indeterminate);
  CHECK_THROWS_AS(interlace_real(roots(P({1, 0, 1}), 128), make_cloud({{0, 0}}), 1e-9), Error);
  CHECK_THROWS_AS(interlace_real(lag2, lag2, 1e-9), Error);
  CHECK(std::string(to_string(Interlacing::Interlaced)) == "true");
}

TEST_CASE("strictly_increasing") {
  CHECK(strictly_increasing({1, 2, 3}));
  CHECK_FALSE(strictly_increasing({1, 1, 3}));
  CHECK(strictly_increasing({}));
}
