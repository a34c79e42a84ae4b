#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "eigenpoly/polynomial.hpp"

namespace eigenpoly {

/// T = sum_j Q_j D^j with D = d/dz. Orders are >= 1 and no stored Q_j is zero.
class Operator {
 public:
  Operator(std::map<int, Polynomial> terms, std::string name = {});

  const std::map<int, Polynomial>& terms() const noexcept { return terms_; }
  const std::string& name() const noexcept { return name_; }

  // Highest order with a nonzero coefficient.
  int order() const { return terms_.rbegin()->first; }
  // Q_j, or the zero polynomial when the term is absent.
  Polynomial coefficient(int j) const;
  // deg Q_j, -1 when absent.
  int degree_of(int j) const;
  // alpha_{j,i}: coefficient of z^i in Q_j.
  GaussianRational alpha(int j, int i) const;

  // T(p) = sum_j Q_j p^{(j)}, computed exactly.
  Polynomial apply(const Polynomial& p) const;

  // Sorted canonical text of the terms; the name is not part of it.
  std::string canonical_string() const;
  // SHA-256 hex of canonical_string().
  std::string digest() const;

  nlohmann::json to_json() const;
  static Operator from_json(const nlohmann::json& j);
  static Operator load(const std::filesystem::path& path);

  // Parses a compact textual form such as "z^2 D^2 + D^7" or
  // "(1+13i) D^3 + z^3 D^3". Each summand is [coeff] [z[^i]] D[^j].
  static Operator parse(const std::string& text, std::string name = {});

 private:
  std::map<int, Polynomial> terms_;
  std::string name_;
};

struct Classification {
  int k = 0;
  bool exactly_solvable = false;
  bool degenerate = false;
  std::optional<int> j0;
  std::optional<Rational> d;
  std::optional<Rational> b;
  std::set<int> attainment;  // the set A; empty unless d is present

  nlohmann::json to_json() const;
};

// Throws NotExactlySolvable when some deg Q_j > j and NoJ0 when no order
// has deg Q_j == j.
Classification classify(const Operator& t);

// d = max over present j in (j0, k] of (j - j0) / (j - deg Q_j).
// Throws NotDegenerate for non-degenerate operators.
Rational exponent_d(const Operator& t);

// b = min over j in [1, k-1] with positive (k - j + deg Q_j - deg Q_k) of
// (k - j) / (k - j + deg Q_j - deg Q_k); nullopt when no term qualifies.
std::optional<Rational> exponent_b(const Operator& t);

std::set<int> attainment_set(const Operator& t);

// Throws ConditionInapplicable when b is absent.
bool check_b_equals_d(const Operator& t);

// SHA-256 of arbitrary text as lowercase hex.
std::string sha256_hex(const std::string& text);

}  // namespace eigenpoly
