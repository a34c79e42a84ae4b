#include "eigenpoly/operator.hpp"

#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "eigenpoly/error.hpp"

namespace eigenpoly {

Operator::Operator(std::map<int, Polynomial> terms, std::string name)
    : terms_(std::move(terms)), name_(std::move(name)) {
  if (terms_.empty()) throw Error(ErrorKind::InvalidOperator, "operator has no terms");
  for (const auto& [j, q] : terms_) {
    if (j < 1) throw Error(ErrorKind::InvalidOperator, "derivative order must be >= 1, got " + std::to_string(j));
    if (q.is_zero()) {
      throw Error(ErrorKind::InvalidOperator, "coefficient of D^" + std::to_string(j) + " is identically zero");
    }
  }
}

Polynomial Operator::coefficient(int j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? Polynomial{} : it->second;
}

int Operator::degree_of(int j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? -1 : it->second.degree();
}

GaussianRational Operator::alpha(int j, int i) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? GaussianRational{} : it->second.coeff(i);
}

Polynomial Operator::apply(const Polynomial& p) const {
  Polynomial out;
  for (const auto& [j, q] : terms_) out += q * poly_derivative(p, j);
  return out;
}

std::string Operator::canonical_string() const {
  std::string out;
  for (const auto& [j, q] : terms_) out += "D" + std::to_string(j) + ":" + q.canonical_string() + "\n";
  return out;
}

std::string sha256_hex(const std::string& text) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return hex.str();
}

std::string Operator::digest() const { return sha256_hex(canonical_string()); }

nlohmann::json Operator::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [j, q] : terms_) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : q.coeffs()) {
      auto [re, im] = c.to_pair();
      coeffs.push_back({re, im});
    }
    terms.push_back({{"order", j}, {"coeffs", coeffs}});
  }
  return {{"name", name_}, {"terms", terms}};
}

Operator Operator::from_json(const nlohmann::json& j) {
  try {
    std::string name = j.value("name", std::string{});
    std::map<int, Polynomial> terms;
    for (const auto& term : j.at("terms")) {
      const int order = term.at("order").get<int>();
      if (terms.count(order)) {
        throw Error(ErrorKind::Parse, "duplicate derivative order " + std::to_string(order));
      }
      std::vector<GaussianRational> coeffs;
      for (const auto& c : term.at("coeffs")) {
        if (!c.is_array() || c.size() != 2) throw Error(ErrorKind::Parse, "coefficient must be a [re, im] pair");
        coeffs.push_back(GaussianRational::from_pair(c[0].get<std::string>(), c[1].get<std::string>()));
      }
      terms.emplace(order, Polynomial(std::move(coeffs)));
    }
    return Operator(std::move(terms), std::move(name));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed operator JSON: ") + e.what());
  }
}

Operator Operator::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open operator file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
  return from_json(j);
}

namespace {

class TermParser {
 public:
  explicit TermParser(const std::string& text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s_ += c;
    }
  }

  std::map<int, Polynomial> parse() {
    std::map<int, Polynomial> terms;
    if (s_.empty()) fail("empty operator");
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') sign = (s_[pos_++] == '-') ? -1 : 1;
      else if (pos_ != 0) fail("expected '+' or '-'");
      GaussianRational coeff = parse_coefficient() * GaussianRational(sign);
      int zpow = 0;
      if (peek() == 'z') {
        ++pos_;
        zpow = peek() == '^' ? (++pos_, parse_int()) : 1;
      }
      if (peek() != 'D') fail("expected 'D'");
      ++pos_;
      int order = peek() == '^' ? (++pos_, parse_int()) : 1;
      terms[order] += Polynomial::monomial(coeff, zpow);
    }
    std::map<int, Polynomial> out;
    for (auto& [j, q] : terms) {
      if (!q.is_zero()) out.emplace(j, std::move(q));
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, "operator text \"" + s_ + "\" at " + std::to_string(pos_) + ": " + why);
  }

  int parse_int() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  Rational parse_unsigned_rational() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return parse_rational(s_.substr(start, pos_ - start));
  }

  // Optional leading factor: a rational, "ai", "i", or a parenthesized sum.
  GaussianRational parse_coefficient() {
    if (peek() == '(') {
      ++pos_;
      GaussianRational sum;
      bool first = true;
      while (peek() != ')') {
        int sign = 1;
        if (peek() == '+' || peek() == '-') sign = (s_[pos_++] == '-') ? -1 : 1;
        else if (!first) fail("expected '+' or '-' inside parentheses");
        sum += parse_gaussian_atom() * GaussianRational(sign);
        first = false;
        if (pos_ >= s_.size()) fail("unbalanced parenthesis");
      }
      ++pos_;
      return sum;
    }
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == 'i') return parse_gaussian_atom();
    return GaussianRational(1);
  }

  GaussianRational parse_gaussian_atom() {
    Rational mag(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) mag = parse_unsigned_rational();
    else if (peek() != 'i') fail("expected number");
    if (peek() == 'i') {
      ++pos_;
      return {Rational(0), mag};
    }
    return GaussianRational(mag);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Operator Operator::parse(const std::string& text, std::string name) {
  return Operator(TermParser(text).parse(), std::move(name));
}

nlohmann::json Classification::to_json() const {
  nlohmann::json j{{"k", k}, {"exactly_solvable", exactly_solvable}, {"degenerate", degenerate}};
  j["j0"] = j0 ? nlohmann::json(*j0) : nlohmann::json(nullptr);
  j["d"] = d ? nlohmann::json(to_string(*d)) : nlohmann::json(nullptr);
  j["b"] = b ? nlohmann::json(to_string(*b)) : nlohmann::json(nullptr);
  j["A"] = attainment;
  j["b_equals_d"] = (b && d) ? nlohmann::json(*b == *d) : nlohmann::json(nullptr);
  return j;
}

Classification classify(const Operator& t) {
  Classification c;
  c.k = t.order();
  for (const auto& [j, q] : t.terms()) {
    if (q.degree() > j) {
      throw Error(ErrorKind::NotExactlySolvable,
                  "not exactly-solvable: deg Q_" + std::to_string(j) + " = " + std::to_string(q.degree()) +
                      " > " + std::to_string(j));
    }
    if (q.degree() == j) c.j0 = j;
  }
  if (!c.j0) throw Error(ErrorKind::NoJ0, "no order j with deg Q_j = j; every eigenvalue would vanish");
  c.exactly_solvable = true;
  c.degenerate = t.degree_of(c.k) < c.k;
  if (!c.degenerate) return c;

  const int j0 = *c.j0;
  for (const auto& [j, q] : t.terms()) {
    if (j <= j0) continue;
    Rational ratio(j - j0, j - q.degree());
    ratio.canonicalize();
    if (!c.d || ratio > *c.d) {
      c.d = ratio;
      c.attainment = {j};
    } else if (ratio == *c.d) {
      c.attainment.insert(j);
    }
  }

  const int deg_k = t.degree_of(c.k);
  for (const auto& [j, q] : t.terms()) {
    if (j >= c.k) continue;
    const int den = c.k - j + q.degree() - deg_k;
    if (den <= 0) continue;
    Rational ratio(c.k - j, den);
    ratio.canonicalize();
    if (!c.b || ratio < *c.b) c.b = ratio;
  }
  return c;
}

Rational exponent_d(const Operator& t) {
  Classification c = classify(t);
  if (!c.degenerate) throw Error(ErrorKind::NotDegenerate, "operator is not degenerate; d is undefined");
  return *c.d;
}

std::optional<Rational> exponent_b(const Operator& t) {
  Classification c = classify(t);
  if (!c.degenerate) throw Error(ErrorKind::NotDegenerate, "operator is not degenerate; b is undefined");
  return c.b;
}

std::set<int> attainment_set(const Operator& t) {
  Classification c = classify(t);
  if (!c.degenerate) throw Error(ErrorKind::NotDegenerate, "operator is not degenerate; A is undefined");
  return c.attainment;
}

bool check_b_equals_d(const Operator& t) {
  Classification c = classify(t);
  if (!c.degenerate) throw Error(ErrorKind::NotDegenerate, "operator is not degenerate");
  if (!c.b) throw Error(ErrorKind::ConditionInapplicable, "b is absent: no term has a positive denominator");
  return *c.b == *c.d;
}

}  // namespace eigenpoly
