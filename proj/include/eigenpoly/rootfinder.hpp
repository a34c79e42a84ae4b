#pragma once

#include <string>
#include <vector>

#include "eigenpoly/polynomial.hpp"

namespace eigenpoly {

struct Root {
  BigComplex value;
  // First-order Newton bound deg |p(z)/p'(z)|; heuristic, not a proof.
  double err_radius = 0.0;
};

/// All roots of a polynomial, with multiplicity, at a recorded precision.
struct RootCloud {
  std::vector<Root> roots;
  int degree = 0;
  Precision precision_bits = 0;
  std::string source_digest;

  std::vector<std::complex<double>> points() const;
};

enum class StartStrategy {
  // Rings from the Newton polygon of log|a_i|, one per hull edge.
  NewtonPolygon,
  // A single circle at the Fujiwara upper root bound.
  FujiwaraCircle,
};

struct RootOptions {
  Precision precision_bits = 192;
  StartStrategy start = StartStrategy::NewtonPolygon;
  int max_doublings = 4;
  double angular_offset = 0.376;
};

// Working precision actually used for a polynomial: the requested bits,
// raised to (bit length of the largest coefficient part) / 8.
Precision initial_precision(const Polynomial& p, Precision requested);

// Simultaneous Aberth-Ehrlich iteration from deterministic initial guesses
// rotated by opts.angular_offset; on failure the precision doubles (up to
// max_doublings times), warm-starting from the previous approximations.
// Throws DegreeZero for constant input and NoConvergence on failure.
RootCloud roots(const Polynomial& p, const RootOptions& opts = {});
RootCloud roots(const Polynomial& p, Precision precision_bits);

struct Modulus {
  BigFloat value;
  double err_radius = 0.0;  // largest err_radius among the argmax candidates

  double to_double() const { return value.to_double(); }
};

// r = max |root|. Throws Precondition for an empty cloud.
Modulus largest_modulus(const RootCloud& cloud);

// True iff every inner root lies within Euclidean distance tol of the
// convex hull of the outer roots.
bool hull_contains(const RootCloud& outer, const RootCloud& inner, double tol);

// Distance from a point to the convex hull of a point set; zero inside.
double distance_to_hull(const std::vector<std::complex<double>>& hull_points, std::complex<double> z);

// Cloud built from given points (no solve); err radii zero.
RootCloud make_cloud(const std::vector<std::complex<double>>& points, Precision prec = 64);

// CSV with header n,index,re,im,abs,err_radius. When scaled is true an
// extra column scaled=1 is appended.
std::string roots_csv(const RootCloud& cloud, long n, bool scaled = false);

}  // namespace eigenpoly
