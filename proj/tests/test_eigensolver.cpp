#include <doctest.h>

#include <fstream>

#include "oracles.hpp"
#include "support.hpp"

using namespace eptest;

namespace fs = std::filesystem;

TEST_CASE("eigenvalue examples") {
  CHECK(eigenvalue(load_op("laguerre"), 7) == GaussianRational(-7));
  CHECK(eigenvalue(load_op("T2"), 5) == GaussianRational(20));
  CHECK(eigenvalue(load_op("T3"), 4) == GaussianRational(24));
}

TEST_CASE("diagonal_entry examples") {
  CHECK(diagonal_entry(load_op("T1"), 5, 2) == GaussianRational(-3));
  CHECK(diagonal_entry(load_op("T2"), 5, 3) == GaussianRational(-14));
  CHECK(diagonal_entry(load_op("singular"), 5, 0).is_zero());
}

TEST_CASE("eigenpolynomial examples") {
  const Eigenpair lag = eigenpolynomial(load_op("laguerre"), 2);
  CHECK(lag.p == P({2, -4, 1}));
  CHECK(lag.lambda == GaussianRational(-2));

  const Eigenpair her = eigenpolynomial(load_op("hermite"), 2);
  CHECK(her.p == P({GaussianRational(Q("-1/2")), 0, 1}));
  CHECK(her.lambda == GaussianRational(-4));

  // n = 1: p = z + alpha_{1,0}/alpha_{1,1}.
  const Operator t = Operator::parse("3D + 2izD + z^2D^2");
  const Eigenpair one = eigenpolynomial(t, 1);
  CHECK(one.p == P({GaussianRational(3) / GaussianRational(Q("0"), Q("2")), 1}));
  CHECK(one.operator_digest == t.digest());
}

TEST_CASE("singular operator reports the vanishing row") {
  const Operator t = load_op("singular");
  try {
    eigenpolynomial(t, 5);
    FAIL("expected non-unique");
  } catch (const NonUniqueError& e) {
    CHECK(e.kind() == ErrorKind::NonUnique);
    CHECK(e.degree() == 5);
    CHECK(e.singular_index() == 0);
  }
  // The diagonal (s - n)(s + n - 5) also vanishes for n = 3 (s = 2) and n = 4 (s = 1).
  CHECK_THROWS_AS(eigenpolynomial(t, 3), NonUniqueError);
  CHECK_THROWS_AS(eigenpolynomial(t, 4), NonUniqueError);
  for (long n : {1L, 2L}) CHECK_NOTHROW(eigenpolynomial(t, n));
  for (long n = 6; n <= 50; ++n) CHECK_NOTHROW(eigenpolynomial(t, n));
}

TEST_CASE("eigenpolynomial_range") {
  const auto out = eigenpolynomial_range(load_op("laguerre"), {1, 2});
  REQUIRE(out.size() == 2);
  CHECK(out[0].pair->p == P({-1, 1}));
  CHECK(out[1].pair->p == P({2, -4, 1}));
  CHECK(eigenpolynomial_range(load_op("T2"), {}).empty());

  const auto bad = eigenpolynomial_range(load_op("singular"), {5, 6});
  CHECK_FALSE(bad[0].ok());
  CHECK(*bad[0].error_kind == ErrorKind::NonUnique);
  CHECK(*bad[0].singular_index == 0);
  CHECK(bad[1].ok());
}

TEST_CASE("laguerre eigenpolynomials equal the recurrence for n <= 30") {
  const auto oracle = monic_laguerre(30);
  const Operator t = load_op("laguerre");
  for (int n = 1; n <= 30; ++n) CHECK(eigenpolynomial(t, n).p == oracle[static_cast<std::size_t>(n)]);
}

TEST_CASE("hermite eigenpolynomials equal the recurrence for n <= 30") {
  const auto oracle = monic_hermite(30);
  const Operator t = load_op("hermite");
  for (int n = 1; n <= 30; ++n) CHECK(eigenpolynomial(t, n).p == oracle[static_cast<std::size_t>(n)]);
}

TEST_CASE("property: exact residual, monic degree n, for the bundled operators") {
  for (const char* name : {"T1", "T2", "T3", "T4", "T4_tilde", "T5", "T5_tilde", "T6", "T6_tilde", "T7"}) {
    const Operator t = load_op(name);
    for (long n : {9L, 25L, 60L}) {
      const Eigenpair e = eigenpolynomial(t, n);
      CHECK(e.p.degree() == n);
      CHECK(e.p.leading() == GaussianRational(1));
      CHECK(residual_is_zero(t, e));
      CHECK((t.apply(e.p) - e.p * e.lambda).is_zero());
    }
  }
}

TEST_CASE("property: a single diagonal order gives uniqueness for n in [j0, 200]") {
  Rng rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    const int k = static_cast<int>(rng.range(2, 6));
    const int j0 = static_cast<int>(rng.range(1, k - 1));
    std::map<int, Polynomial> terms;
    terms[j0] = rng.poly(j0, rng.coin());
    for (int j = 1; j <= k; ++j) {
      if (j == j0) continue;
      if (j == k || rng.coin()) terms[j] = rng.poly(static_cast<int>(rng.range(0, j - 1)), rng.coin());
    }
    const Operator t(terms);
    // Below j0 the eigenvalue and every diagonal entry vanish.
    for (long n = 1; n < j0; ++n) CHECK_THROWS_AS(eigenpolynomial(t, n), NonUniqueError);
    for (long n = j0; n <= 200; ++n) {
      const Eigenpair e = eigenpolynomial(t, n);
      CHECK(e.p.degree() == n);
    }
  }
}

TEST_CASE("cache round trip, stale digest and corruption") {
  const fs::path dir = fs::temp_directory_path() / "eigenpoly-cache-test";
  fs::remove_all(dir);
  const EigenCache cache(dir);
  const Operator t = load_op("T6_tilde");
  const Eigenpair e = eigenpolynomial(t, 12);

  CHECK_FALSE(cache.load(t, 12).has_value());
  cache.store(e);
  const fs::path file = cache.path_for(t.digest(), 12);
  CHECK(file.filename().string() == t.digest() + "-12.json");
  const auto hit = cache.load(t, 12);
  REQUIRE(hit.has_value());
  CHECK(hit->p == e.p);
  CHECK(hit->lambda == e.lambda);

  // An edited operator has a different digest and never sees the old file.
  const Operator edited = Operator::parse("z^3D^3 + z^2D^6");
  CHECK_FALSE(cache.load(edited, 12).has_value());

  // A file placed under the right name but holding the wrong pair is rejected.
  fs::copy_file(file, cache.path_for(edited.digest(), 12));
  CHECK_FALSE(cache.load(edited, 12).has_value());

  {
    std::ofstream(file) << "{\"n\": 12, \"lambda\": [";
  }
  CHECK_FALSE(cache.load(t, 12).has_value());

  const auto first = eigenpolynomial_range(t, {12}, &cache);
  CHECK_FALSE(first[0].from_cache);
  const auto second = eigenpolynomial_range(t, {12}, &cache);
  CHECK(second[0].from_cache);
  CHECK(second[0].pair->p == e.p);
  fs::remove_all(dir);
}

TEST_CASE("eigenpair JSON") {
  const Eigenpair e = eigenpolynomial(load_op("laguerre"), 2);
  const nlohmann::json j = eigenpair_to_json(e);
  CHECK(j["n"] == 2);
  CHECK(j["lambda"] == nlohmann::json::array({"-2", "0"}));
  CHECK(j["coeffs"][1] == nlohmann::json::array({"-4", "0"}));
  CHECK(eigenpair_from_json(j, e.operator_digest).p == e.p);
}
