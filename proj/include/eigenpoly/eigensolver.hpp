#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "eigenpoly/error.hpp"
#include "eigenpoly/operator.hpp"

namespace eigenpoly {

/// The monic degree-n eigenpolynomial p of T with T(p) = lambda p.
struct Eigenpair {
  long n = 0;
  GaussianRational lambda;
  Polynomial p;
  std::string operator_digest;
};

// lambda_n = sum_j alpha_{j,j} n!/(n-j)!.
GaussianRational eigenvalue(const Operator& t, long n);

// Diagonal of the triangular system at row s:
// sum_j alpha_{j,j} (s!/(s-j)! - n!/(n-j)!).
GaussianRational diagonal_entry(const Operator& t, long n, long s);

// Exact back-substitution from a_n = 1 down to a_0, followed by an exact
// residual check. Throws NonUniqueError naming the first row s (scanning
// downward) whose diagonal vanishes.
Eigenpair eigenpolynomial(const Operator& t, long n);

// True iff T(p) - lambda p is identically zero.
bool residual_is_zero(const Operator& t, const Eigenpair& e);

/// On-disk store of eigenpairs keyed by operator digest and degree.
/// Files are <dir>/<digest>-<n>.json and are written atomically.
class EigenCache {
 public:
  explicit EigenCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(const std::string& digest, long n) const;

  // Returns the stored pair only if it parses and passes the exact residual
  // check against t; anything else is a miss.
  std::optional<Eigenpair> load(const Operator& t, long n) const;
  void store(const Eigenpair& e) const;

 private:
  std::filesystem::path dir_;
};

struct EigenOutcome {
  long n = 0;
  std::optional<Eigenpair> pair;
  std::optional<ErrorKind> error_kind;
  std::string error;
  std::optional<long> singular_index;  // set for non-unique failures
  bool from_cache = false;

  bool ok() const noexcept { return pair.has_value(); }
};

// Per-n failures are recorded in the outcome; the batch always completes.
std::vector<EigenOutcome> eigenpolynomial_range(const Operator& t, const std::vector<long>& ns,
                                                const EigenCache* cache = nullptr);

nlohmann::json eigenpair_to_json(const Eigenpair& e);
Eigenpair eigenpair_from_json(const nlohmann::json& j, const std::string& digest);

}  // namespace eigenpoly
