#include "eigenpoly/rootfinder.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include "eigenpoly/error.hpp"
#include "eigenpoly/operator.hpp"

namespace eigenpoly {

namespace {

// Fixed-size array of initialized mpfr values.
class MpfrArray {
 public:
  MpfrArray(std::size_t n, Precision prec) : v_(n) {
    for (auto& x : v_) mpfr_init2(&x, prec);
  }
  MpfrArray(const MpfrArray&) = delete;
  MpfrArray& operator=(const MpfrArray&) = delete;
  ~MpfrArray() {
    for (auto& x : v_) mpfr_clear(&x);
  }
  mpfr_ptr operator[](std::size_t i) { return &v_[i]; }
  std::size_t size() const { return v_.size(); }

 private:
  std::vector<__mpfr_struct> v_;
};

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

// One precision level of the Aberth-Ehrlich iteration on a monic polynomial.
class AberthLevel {
 public:
  AberthLevel(const Polynomial& p, Precision prec)
      : n_(static_cast<std::size_t>(p.degree())),
        prec_(prec),
        cre_(n_ + 1, prec),
        cim_(n_ + 1, prec),
        cabs_(n_ + 1, prec),
        zre_(n_, prec),
        zim_(n_, prec),
        t_(24, prec) {
    // Normalize to monic while rounding once.
    BigComplex lead(p.leading(), prec + 64);
    for (std::size_t i = 0; i <= n_; ++i) {
      BigComplex c(p.coeffs()[i], prec + 64);
      c /= lead;
      mpfr_set(cre_[i], c.re().raw(), kRnd);
      mpfr_set(cim_[i], c.im().raw(), kRnd);
    }
    mpfr_set_ui(cre_[n_], 1, kRnd);
    mpfr_set_ui(cim_[n_], 0, kRnd);
    for (std::size_t i = 0; i <= n_; ++i) mpfr_hypot(cabs_[i], cre_[i], cim_[i], kRnd);
    noise_bits_ = 8 + static_cast<long>(std::ceil(std::log2(static_cast<double>(n_) + 1.0)));
    converged_.assign(n_, false);
  }

  std::size_t degree() const { return n_; }

  void start_on_circle(double offset) {
    // Fujiwara bound: 2 max(|a_{n-1}|, |a_{n-2}|^{1/2}, ..., |a_0/2|^{1/n}).
    double log2_bound = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_; ++i) {
      double l = log2_abs(i);
      if (!std::isfinite(l)) continue;
      if (i == 0) l -= 1.0;
      log2_bound = std::max(log2_bound, l / static_cast<double>(n_ - i));
    }
    const double radius = std::isfinite(log2_bound) ? std::exp2(log2_bound + 1.0) : 1.0;
    place_ring(0, n_, radius, offset);
  }

  // Bini's start: one ring per edge of the upper convex hull of
  // (i, log2|a_i|), with radius (|a_lo| / |a_hi|)^{1/(hi-lo)} and as many
  // points as the edge spans.
  void start_newton_polygon(double offset) {
    std::vector<std::pair<double, double>> hull;
    for (std::size_t i = 0; i <= n_; ++i) {
      const double l = log2_abs(i);
      if (!std::isfinite(l)) continue;
      const std::pair<double, double> pt{static_cast<double>(i), l};
      while (hull.size() >= 2) {
        const auto& a = hull[hull.size() - 2];
        const auto& b = hull.back();
        const double cr = (b.first - a.first) * (pt.second - a.second) - (b.second - a.second) * (pt.first - a.first);
        if (cr >= 0) hull.pop_back();
        else break;
      }
      hull.push_back(pt);
    }
    // Zero low-order coefficients mean roots at the origin; they get a small
    // ring below the smallest hull radius.
    const auto lowest = static_cast<std::size_t>(hull.front().first);
    double smallest = std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
      const auto lo = static_cast<std::size_t>(hull[e].first);
      const auto hi = static_cast<std::size_t>(hull[e + 1].first);
      const double log2_r = (hull[e].second - hull[e + 1].second) / static_cast<double>(hi - lo);
      smallest = std::min(smallest, log2_r);
      place_ring(lo, hi - lo, std::exp2(log2_r),
                 offset + 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n_));
    }
    if (lowest > 0) {
      const double r = std::isfinite(smallest) ? std::exp2(smallest - 8.0) : 1.0;
      place_ring(0, lowest, r, offset);
    }
  }

  void start_from(const std::vector<BigComplex>& guesses) {
    for (std::size_t k = 0; k < n_; ++k) {
      mpfr_set(zre_[k], guesses[k].re().raw(), kRnd);
      mpfr_set(zim_[k], guesses[k].im().raw(), kRnd);
    }
  }

  // Runs until every root's last correction is below 2^{-prec/2}(1+|z|), or
  // its residual has sat at the rounding floor for several sweeps (members of
  // a multiple-root cluster). Returns false if the iteration budget runs out.
  bool iterate() {
    const std::size_t max_iter = 400 + 8 * n_;
    const int noise_patience = 5;
    std::vector<int> noisy(n_, 0);
    std::size_t remaining = n_;
    for (std::size_t iter = 1; iter <= max_iter && remaining > 0; ++iter) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (converged_[k]) continue;
        bool at_floor = false;
        const double rel = step(k, at_floor);
        if (rel < -0.5 * static_cast<double>(prec_)) {
          converged_[k] = true;
          --remaining;
          continue;
        }
        noisy[k] = at_floor ? noisy[k] + 1 : 0;
        if (noisy[k] >= noise_patience) {
          converged_[k] = true;
          --remaining;
        }
      }
    }
    return remaining == 0;
  }

  std::vector<BigComplex> values() {
    std::vector<BigComplex> out;
    out.reserve(n_);
    for (std::size_t k = 0; k < n_; ++k) out.emplace_back(copy(zre_[k]), copy(zim_[k]));
    return out;
  }

 private:
  double log2_abs(std::size_t i) {
    if (mpfr_zero_p(cabs_[i])) return -std::numeric_limits<double>::infinity();
    long e = 0;
    const double m = mpfr_get_d_2exp(&e, cabs_[i], kRnd);
    return std::log2(m) + static_cast<double>(e);
  }

  void place_ring(std::size_t first, std::size_t count, double radius, double offset) {
    const BigFloat r(radius, prec_);
    const BigFloat two_pi = pi(prec_) * BigFloat(2.0, prec_);
    for (std::size_t m = 0; m < count; ++m) {
      const BigFloat theta = two_pi * BigFloat(static_cast<double>(m), prec_) /
                                 BigFloat(static_cast<double>(count), prec_) +
                             BigFloat(offset, prec_);
      const BigComplex z = polar(r, theta);
      mpfr_set(zre_[first + m], z.re().raw(), kRnd);
      mpfr_set(zim_[first + m], z.im().raw(), kRnd);
    }
  }

  static BigFloat copy(mpfr_srcptr x) {
    BigFloat r(mpfr_get_prec(x));
    mpfr_set(r.raw(), x, kRnd);
    return r;
  }

  // One Gauss-Seidel Aberth update of root k. Returns log2 of
  // |correction| / (1 + |z_k|).
  double step(std::size_t k, bool& at_floor) {
    mpfr_ptr zr = zre_[k];
    mpfr_ptr zi = zim_[k];
    mpfr_ptr pr = t_[0], pi_ = t_[1], dr = t_[2], di = t_[3], tmp = t_[4], tmp2 = t_[5];
    // Horner for p and p'.
    mpfr_set_ui(pr, 1, kRnd);
    mpfr_set_ui(pi_, 0, kRnd);
    mpfr_set_ui(dr, 0, kRnd);
    mpfr_set_ui(di, 0, kRnd);
    mpfr_ptr mag = t_[19], az0 = t_[20];
    mpfr_set_ui(mag, 1, kRnd);
    mpfr_hypot(az0, zr, zi, kRnd);
    for (std::size_t i = n_; i-- > 0;) {
      mpfr_fma(mag, mag, az0, cabs_[i], kRnd);
      // d = d*z + p
      mpfr_fmms(tmp, dr, zr, di, zi, kRnd);
      mpfr_fmma(tmp2, dr, zi, di, zr, kRnd);
      mpfr_add(dr, tmp, pr, kRnd);
      mpfr_add(di, tmp2, pi_, kRnd);
      // p = p*z + c_i
      mpfr_fmms(tmp, pr, zr, pi_, zi, kRnd);
      mpfr_fmma(tmp2, pr, zi, pi_, zr, kRnd);
      mpfr_add(pr, tmp, cre_[i], kRnd);
      mpfr_add(pi_, tmp2, cim_[i], kRnd);
    }
    if (mpfr_zero_p(pr) && mpfr_zero_p(pi_)) return -std::numeric_limits<double>::infinity();
    // |p(z)| within a few hundred ulps of sum |c_i||z|^i is rounding noise.
    mpfr_hypot(tmp, pr, pi_, kRnd);
    mpfr_mul_2si(tmp2, mag, -static_cast<long>(prec_) + noise_bits_, kRnd);
    at_floor = mpfr_lessequal_p(tmp, tmp2) != 0;

    // Newton quotient N = p / p'.
    mpfr_ptr nr = t_[6], ni = t_[7], den = t_[8];
    mpfr_fmma(den, dr, dr, di, di, kRnd);
    if (mpfr_zero_p(den)) {
      // Stationary point: nudge outward and retry next sweep.
      mpfr_mul_2si(tmp, zr, -static_cast<long>(prec_ / 4), kRnd);
      mpfr_add(zr, zr, tmp, kRnd);
      mpfr_add_d(zr, zr, std::ldexp(1.0, -static_cast<int>(prec_ / 4)), kRnd);
      return 0.0;
    }
    mpfr_fmma(nr, pr, dr, pi_, di, kRnd);
    mpfr_fmms(ni, pi_, dr, pr, di, kRnd);
    mpfr_div(nr, nr, den, kRnd);
    mpfr_div(ni, ni, den, kRnd);

    // S = sum_{j != k} 1 / (z_k - z_j).
    mpfr_ptr sr = t_[9], si = t_[10], er = t_[11], ei = t_[12];
    mpfr_set_ui(sr, 0, kRnd);
    mpfr_set_ui(si, 0, kRnd);
    for (std::size_t j = 0; j < n_; ++j) {
      if (j == k) continue;
      mpfr_sub(er, zr, zre_[j], kRnd);
      mpfr_sub(ei, zi, zim_[j], kRnd);
      mpfr_fmma(den, er, er, ei, ei, kRnd);
      if (mpfr_zero_p(den)) continue;
      mpfr_div(er, er, den, kRnd);
      mpfr_div(ei, ei, den, kRnd);
      mpfr_add(sr, sr, er, kRnd);
      mpfr_sub(si, si, ei, kRnd);
    }

    // w = N / (1 - N S)
    mpfr_ptr qr = t_[13], qi = t_[14], wr = t_[15], wi = t_[16];
    mpfr_fmms(qr, nr, sr, ni, si, kRnd);
    mpfr_fmma(qi, nr, si, ni, sr, kRnd);
    mpfr_ui_sub(qr, 1, qr, kRnd);
    mpfr_neg(qi, qi, kRnd);
    mpfr_fmma(den, qr, qr, qi, qi, kRnd);
    if (mpfr_zero_p(den)) {
      mpfr_set(wr, nr, kRnd);
      mpfr_set(wi, ni, kRnd);
    } else {
      mpfr_fmma(wr, nr, qr, ni, qi, kRnd);
      mpfr_fmms(wi, ni, qr, nr, qi, kRnd);
      mpfr_div(wr, wr, den, kRnd);
      mpfr_div(wi, wi, den, kRnd);
    }
    mpfr_sub(zr, zr, wr, kRnd);
    mpfr_sub(zi, zi, wi, kRnd);

    mpfr_ptr aw = t_[17], az = t_[18];
    mpfr_hypot(aw, wr, wi, kRnd);
    mpfr_hypot(az, zr, zi, kRnd);
    mpfr_add_ui(az, az, 1, kRnd);
    if (mpfr_zero_p(aw)) return -std::numeric_limits<double>::infinity();
    long ew = 0, ez = 0;
    const double mw = mpfr_get_d_2exp(&ew, aw, kRnd);
    const double mz = mpfr_get_d_2exp(&ez, az, kRnd);
    return std::log2(mw / mz) + static_cast<double>(ew - ez);
  }

  std::size_t n_;
  Precision prec_;
  MpfrArray cre_, cim_, cabs_;
  MpfrArray zre_, zim_;
  MpfrArray t_;
  std::vector<bool> converged_;
  long noise_bits_ = 8;
};

// deg |p(z)| / |p'(z)| evaluated at prec.
double newton_radius(const NumericPolynomial& p, const NumericPolynomial& dp, const BigComplex& z, int degree) {
  BigComplex zz = z;
  zz.set_precision(p.precision());
  BigComplex v = p.eval(zz);
  BigComplex dv = dp.eval(zz);
  BigFloat den = dv.abs();
  if (den.is_zero()) return std::numeric_limits<double>::infinity();
  BigFloat r = v.abs() / den * BigFloat(static_cast<double>(degree), p.precision());
  return r.to_double();
}

}  // namespace

std::vector<std::complex<double>> RootCloud::points() const {
  std::vector<std::complex<double>> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(r.value.to_complex());
  return out;
}

Precision initial_precision(const Polynomial& p, Precision requested) {
  const auto floor = static_cast<Precision>(p.max_coeff_bits() / 8);
  return std::max({requested, floor, kMinComplexPrecision});
}

RootCloud roots(const Polynomial& p, Precision precision_bits) {
  RootOptions opts;
  opts.precision_bits = precision_bits;
  return roots(p, opts);
}

RootCloud roots(const Polynomial& p, const RootOptions& opts) {
  if (p.degree() < 1) throw Error(ErrorKind::DegreeZero, "roots: polynomial must have degree >= 1");
  const int deg = p.degree();
  Precision prec = initial_precision(p, opts.precision_bits);
  std::vector<BigComplex> guesses;

  for (int level = 0; level <= opts.max_doublings; ++level, prec *= 2) {
    AberthLevel solver(p, prec);
    if (!guesses.empty()) solver.start_from(guesses);
    else if (opts.start == StartStrategy::FujiwaraCircle) solver.start_on_circle(opts.angular_offset);
    else solver.start_newton_polygon(opts.angular_offset);
    const bool ok = solver.iterate();
    guesses = solver.values();
    if (!ok) continue;

    const NumericPolynomial hi(p, 2 * prec);
    const NumericPolynomial dhi = hi.derivative();
    RootCloud cloud;
    cloud.degree = deg;
    cloud.precision_bits = prec;
    cloud.source_digest = sha256_hex(p.canonical_string());
    bool certified = true;
    for (auto& z : guesses) {
      const double err = newton_radius(hi, dhi, z, deg);
      const double bound = std::exp2(-static_cast<double>(prec) / 4.0) * (1.0 + z.abs().to_double());
      if (!(err <= bound)) certified = false;
      cloud.roots.push_back({z, err});
    }
    if (certified) return cloud;
  }
  throw Error(ErrorKind::NoConvergence, "roots: Aberth iteration did not converge for degree " + std::to_string(deg) +
                                            " after " + std::to_string(opts.max_doublings) + " precision doublings");
}

Modulus largest_modulus(const RootCloud& cloud) {
  if (cloud.roots.empty()) throw Error(ErrorKind::Precondition, "largest_modulus: empty cloud");
  Modulus best{cloud.roots.front().value.abs(), cloud.roots.front().err_radius};
  for (std::size_t i = 1; i < cloud.roots.size(); ++i) {
    BigFloat a = cloud.roots[i].value.abs();
    if (a > best.value) best = {std::move(a), cloud.roots[i].err_radius};
  }
  // Roots whose disks could reach the maximum are all argmax candidates.
  for (const auto& r : cloud.roots) {
    if (r.value.abs().to_double() + r.err_radius >= best.value.to_double() - best.err_radius) {
      best.err_radius = std::max(best.err_radius, r.err_radius);
    }
  }
  return best;
}

namespace {

using Pt = std::complex<double>;

double cross(Pt o, Pt a, Pt b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

// Andrew's monotone chain; collinear points are dropped.
std::vector<Pt> convex_hull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end(), [](Pt a, Pt b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Pt> hull(2 * pts.size());
  std::size_t h = 0;
  for (const auto& p : pts) {
    while (h >= 2 && cross(hull[h - 2], hull[h - 1], p) <= 0) --h;
    hull[h++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = h + 1; i-- > 0;) {
    while (h >= lower && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
    hull[h++] = pts[i];
  }
  hull.resize(h - 1);
  return hull;
}

double segment_distance(Pt a, Pt b, Pt z) {
  const Pt ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  double t = ((z - a).real() * ab.real() + (z - a).imag() * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

double distance_to_polygon(const std::vector<Pt>& hull, Pt z) {
  if (hull.empty()) return std::numeric_limits<double>::infinity();
  if (hull.size() == 1) return std::abs(z - hull[0]);
  if (hull.size() == 2) return segment_distance(hull[0], hull[1], z);
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Pt a = hull[i];
    const Pt b = hull[(i + 1) % hull.size()];
    if (cross(a, b, z) < 0) inside = false;
    best = std::min(best, segment_distance(a, b, z));
  }
  return inside ? 0.0 : best;
}

}  // namespace

double distance_to_hull(const std::vector<std::complex<double>>& hull_points, std::complex<double> z) {
  return distance_to_polygon(convex_hull(hull_points), z);
}

bool hull_contains(const RootCloud& outer, const RootCloud& inner, double tol) {
  if (outer.roots.empty() || inner.roots.empty()) {
    throw Error(ErrorKind::Precondition, "hull_contains: clouds must be nonempty");
  }
  const auto hull = convex_hull(outer.points());
  for (const auto& z : inner.points()) {
    if (distance_to_polygon(hull, z) > tol) return false;
  }
  return true;
}

RootCloud make_cloud(const std::vector<std::complex<double>>& points, Precision prec) {
  RootCloud c;
  c.degree = static_cast<int>(points.size());
  c.precision_bits = prec;
  for (const auto& z : points) c.roots.push_back({BigComplex(z, prec), 0.0});
  return c;
}

std::string roots_csv(const RootCloud& cloud, long n, bool scaled) {
  std::ostringstream out;
  out << "n,index,re,im,abs,err_radius" << (scaled ? ",scaled" : "") << "\n";
  out << std::setprecision(17);
  for (std::size_t i = 0; i < cloud.roots.size(); ++i) {
    const auto& r = cloud.roots[i];
    out << n << ',' << i << ',' << r.value.re().to_string() << ',' << r.value.im().to_string() << ','
        << r.value.abs().to_string() << ',' << r.err_radius << (scaled ? ",1" : "") << "\n";
  }
  return out.str();
}

}  // namespace eigenpoly
