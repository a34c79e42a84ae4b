#include "eigenpoly/eigensolver.hpp"

#include <fstream>

#include "eigenpoly/error.hpp"
#include "eigenpoly/io.hpp"

namespace eigenpoly {

namespace {

// Orders j whose Q_j has degree exactly j; only these reach the diagonal.
std::vector<std::pair<int, GaussianRational>> diagonal_terms(const Operator& t) {
  std::vector<std::pair<int, GaussianRational>> out;
  for (const auto& [j, q] : t.terms()) {
    if (q.degree() == j) out.emplace_back(j, q.leading());
  }
  return out;
}

GaussianRational weighted_falling(const std::vector<std::pair<int, GaussianRational>>& diag, long m) {
  GaussianRational sum;
  for (const auto& [j, a] : diag) {
    Integer ff = falling_factorial(m, j);
    if (ff != 0) sum += a * GaussianRational(Rational(ff));
  }
  return sum;
}

}  // namespace

GaussianRational eigenvalue(const Operator& t, long n) {
  classify(t);
  return weighted_falling(diagonal_terms(t), n);
}

GaussianRational diagonal_entry(const Operator& t, long n, long s) {
  classify(t);
  if (s < 0 || s >= n) throw Error(ErrorKind::Precondition, "diagonal_entry: s must lie in [0, n-1]");
  auto diag = diagonal_terms(t);
  return weighted_falling(diag, s) - weighted_falling(diag, n);
}

Eigenpair eigenpolynomial(const Operator& t, long n) {
  classify(t);
  if (n < 1) throw Error(ErrorKind::Precondition, "eigenpolynomial degree must be positive");
  const auto diag = diagonal_terms(t);
  const GaussianRational lambda = weighted_falling(diag, n);

  // Off-diagonal contributions: alpha_{j,i} with i < j raise the power by j - i.
  struct Shift {
    int j;
    long step;
    GaussianRational alpha;
  };
  std::vector<Shift> shifts;
  for (const auto& [j, q] : t.terms()) {
    for (int i = 0; i <= q.degree() && i < j; ++i) {
      if (!q.coeffs()[static_cast<std::size_t>(i)].is_zero()) shifts.push_back({j, j - i, q.coeffs()[static_cast<std::size_t>(i)]});
    }
  }

  std::vector<GaussianRational> a(static_cast<std::size_t>(n) + 1);
  a[static_cast<std::size_t>(n)] = GaussianRational(1);
  for (long s = n - 1; s >= 0; --s) {
    GaussianRational pivot = lambda - weighted_falling(diag, s);  // = -diagonal_entry
    if (pivot.is_zero()) throw NonUniqueError(n, s);
    GaussianRational rhs;
    for (const auto& sh : shifts) {
      const long m = s + sh.step;
      if (m > n) continue;
      const auto& am = a[static_cast<std::size_t>(m)];
      if (am.is_zero()) continue;
      rhs += sh.alpha * GaussianRational(Rational(falling_factorial(m, sh.j))) * am;
    }
    if (!rhs.is_zero()) a[static_cast<std::size_t>(s)] = rhs / pivot;
  }

  Eigenpair e{n, lambda, Polynomial(std::move(a)), t.digest()};
  if (!residual_is_zero(t, e)) {
    throw Error(ErrorKind::ResidualNonzero, "internal error: T(p) - lambda p != 0 at n=" + std::to_string(n));
  }
  return e;
}

bool residual_is_zero(const Operator& t, const Eigenpair& e) {
  if (e.p.degree() != e.n || !e.p.is_monic()) return false;
  return (t.apply(e.p) - e.p * e.lambda).is_zero();
}

nlohmann::json eigenpair_to_json(const Eigenpair& e) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : e.p.coeffs()) {
    auto [re, im] = c.to_pair();
    coeffs.push_back({re, im});
  }
  auto [lre, lim] = e.lambda.to_pair();
  return {{"n", e.n}, {"lambda", {lre, lim}}, {"coeffs", coeffs}};
}

Eigenpair eigenpair_from_json(const nlohmann::json& j, const std::string& digest) {
  try {
    Eigenpair e;
    e.n = j.at("n").get<long>();
    const auto& l = j.at("lambda");
    e.lambda = GaussianRational::from_pair(l.at(0).get<std::string>(), l.at(1).get<std::string>());
    std::vector<GaussianRational> coeffs;
    for (const auto& c : j.at("coeffs")) {
      coeffs.push_back(GaussianRational::from_pair(c.at(0).get<std::string>(), c.at(1).get<std::string>()));
    }
    e.p = Polynomial(std::move(coeffs));
    e.operator_digest = digest;
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("malformed eigenpair JSON: ") + ex.what());
  }
}

EigenCache::EigenCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path EigenCache::path_for(const std::string& digest, long n) const {
  return dir_ / (digest + "-" + std::to_string(n) + ".json");
}

std::optional<Eigenpair> EigenCache::load(const Operator& t, long n) const {
  const std::string digest = t.digest();
  std::ifstream in(path_for(digest, n));
  if (!in) return std::nullopt;
  try {
    nlohmann::json j;
    in >> j;
    Eigenpair e = eigenpair_from_json(j, digest);
    if (e.n != n || !residual_is_zero(t, e)) return std::nullopt;
    return e;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void EigenCache::store(const Eigenpair& e) const {
  write_atomic(path_for(e.operator_digest, e.n), eigenpair_to_json(e).dump() + "\n");
}

std::vector<EigenOutcome> eigenpolynomial_range(const Operator& t, const std::vector<long>& ns,
                                                const EigenCache* cache) {
  std::vector<EigenOutcome> out;
  out.reserve(ns.size());
  for (long n : ns) {
    EigenOutcome o;
    o.n = n;
    try {
      if (cache) {
        if (auto hit = cache->load(t, n)) {
          o.pair = std::move(hit);
          o.from_cache = true;
        }
      }
      if (!o.pair) {
        o.pair = eigenpolynomial(t, n);
        if (cache) cache->store(*o.pair);
      }
    } catch (const NonUniqueError& e) {
      o.error_kind = e.kind();
      o.error = e.what();
      o.singular_index = e.singular_index();
    } catch (const Error& e) {
      o.error_kind = e.kind();
      o.error = e.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace eigenpoly
