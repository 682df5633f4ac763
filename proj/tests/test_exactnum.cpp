#include <doctest.h>

#include "support.hpp"

using namespace gaussvd;
using namespace gaussvd::testing;

namespace {

// Expands a product of linear factors (z - r_i) with integer roots.
LaurentPoly from_roots(const std::vector<long>& roots) {
  LaurentPoly out = 1;
  for (long r : roots) out *= poly(0, {gr(-r), gr(1)});
  return out;
}

}  // namespace

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("3/6") == frac(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(parse_rational("+7/21") == frac(1, 3));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(frac(12, 2)) == "6");
  for (const char* bad : {"", "1/", "/2", "1.5", "3/x4", "1/0", "1 /2", "--1"}) {
    CAPTURE(bad);
    try {
      parse_rational(bad);
      FAIL("accepted malformed input");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse);
    }
  }
}

TEST_CASE("gaussian rationals stay canonical") {
  GaussianRational a(frac(2, 4), frac(-3, 9));
  CHECK(a.re() == frac(1, 2));
  CHECK(a.im() == frac(-1, 3));
  CHECK(a.conj().conj() == a);
  CHECK(a * a.inverse() == GaussianRational(1));
  CHECK(gr(0, 1) * gr(0, 1) == gr(-1));
}

TEST_CASE("derivative examples") {
  CHECK(derivative(LaurentPoly::monomial(1, -1)) == LaurentPoly::monomial(-1, -2));
  CHECK(derivative(LaurentPoly(5)).is_zero());
  CHECK(derivative(poly(0, {gr(1), gr(0), gr(-1)})) == LaurentPoly::monomial(-2, 1));
  CHECK(derivative(LaurentPoly()).is_zero());
}

TEST_CASE("gcd examples") {
  CHECK(gcd(from_roots({1, -1}), from_roots({1, 1})) == from_roots({1}));
  CHECK(gcd(LaurentPoly::z(), LaurentPoly::monomial(1, 3)) == LaurentPoly(1));
  LaurentPoly p = poly(0, {gr(4), gr(2)});
  CHECK(gcd(p, LaurentPoly()) == from_roots({-2}));
  CHECK_THROWS_AS(gcd(LaurentPoly(), LaurentPoly()), Error);
}

TEST_CASE("gcd divides both arguments on random products") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly common = rng.laurent(0, rng.uniform(0, 2));
    LaurentPoly a = common * rng.laurent(rng.uniform(-2, 2), rng.uniform(0, 3));
    LaurentPoly b = common * rng.laurent(rng.uniform(-2, 2), rng.uniform(0, 3));
    LaurentPoly g = gcd(a, b);
    CHECK(divides(g, a));
    CHECK(divides(g, b));
    CHECK(divides(gcd(common, common), g));
  }
}

TEST_CASE("squarefree examples") {
  auto d = squarefree(from_roots({1, 1, -1}));
  REQUIRE(d.parts.size() == 2);
  CHECK(d.parts[0] == std::make_pair(from_roots({-1}), 1));
  CHECK(d.parts[1] == std::make_pair(from_roots({1}), 2));
  CHECK(d.reconstruct() == from_roots({1, 1, -1}));

  auto two_z = squarefree(LaurentPoly::monomial(2, 1));
  REQUIRE(two_z.parts.size() == 1);
  CHECK(two_z.parts[0].first == LaurentPoly::z());
  CHECK(two_z.unit == LaurentPoly(2));

  // z^4 + 2z^2 + 1 = (z^2 + 1)^2; oracle: expand the claimed factorization.
  LaurentPoly p = poly(0, {gr(1), gr(0), gr(2), gr(0), gr(1)});
  auto q = squarefree(p);
  REQUIRE(q.parts.size() == 1);
  CHECK(q.parts[0].second == 2);
  CHECK(q.parts[0].first.pow(2) == p);
  CHECK_THROWS_AS(squarefree(LaurentPoly()), Error);
}

TEST_CASE("squarefree reconstruction on random products") {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly p = LaurentPoly::monomial(rng.nonzero_gaussian(), rng.uniform(-3, 3));
    for (int f = 0; f < 3; ++f) p *= rng.laurent(0, rng.uniform(1, 2)).pow(static_cast<unsigned>(rng.uniform(1, 3)));
    auto d = squarefree(p);
    CHECK(d.reconstruct() == p);
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
      CHECK(gcd(d.parts[i].first, derivative(d.parts[i].first)) == LaurentPoly(1));
      for (std::size_t j = i + 1; j < d.parts.size(); ++j) CHECK(gcd(d.parts[i].first, d.parts[j].first) == LaurentPoly(1));
    }
  }
}

TEST_CASE("coprime basis examples") {
  auto b = coprime_basis({from_roots({1}), from_roots({1, -1})});
  REQUIRE(b.basis.size() == 2);
  const std::size_t minus = b.basis[0] == from_roots({1}) ? 0 : 1;
  CHECK(b.basis[minus] == from_roots({1}));
  CHECK(b.basis[1 - minus] == from_roots({-1}));
  CHECK(b.exponents[0][minus] == 1);
  CHECK(b.exponents[0][1 - minus] == 0);
  CHECK(b.exponents[1] == std::vector<int>{1, 1});

  std::vector<LaurentPoly> in = {from_roots({1, -1}), from_roots({1, 1}), from_roots({-1})};
  auto c = coprime_basis(in);
  CHECK(c.basis.size() == 2);
  for (std::size_t i = 0; i < in.size(); ++i) CHECK(c.reconstruct(i) == in[i]);
  CHECK_THROWS_AS(coprime_basis({LaurentPoly()}), Error);
}

TEST_CASE("coprime basis reconstructs random inputs") {
  Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<LaurentPoly> pool;
    for (int i = 0; i < 3; ++i) pool.push_back(rng.laurent(0, 1));
    std::vector<LaurentPoly> in;
    for (int i = 0; i < 4; ++i) {
      LaurentPoly p = LaurentPoly::monomial(rng.nonzero_gaussian(), rng.uniform(-2, 2));
      for (const auto& f : pool) p *= f.pow(static_cast<unsigned>(rng.uniform(0, 2)));
      in.push_back(p);
    }
    auto basis = coprime_basis(in);
    for (std::size_t i = 0; i < in.size(); ++i) CHECK(basis.reconstruct(i) == in[i]);
    for (std::size_t i = 0; i < basis.basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.basis.size(); ++j) CHECK(gcd(basis.basis[i], basis.basis[j]) == LaurentPoly(1));
    }
  }
}

TEST_CASE("substitute_inverse") {
  CHECK(substitute_inverse(LaurentPoly::monomial(1, 2)) == LaurentPoly::monomial(1, -2));
  CHECK(substitute_inverse(poly(0, {gr(1), gr(0), gr(-1)})) == poly(-2, {gr(-1), gr(0), gr(1)}));
  Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    LaurentPoly p = rng.laurent(rng.uniform(-3, 3), rng.uniform(0, 4));
    CHECK(substitute_inverse(substitute_inverse(p)) == p);
    CHECK(substitute_scaled_inverse(p, 1) == substitute_inverse(p));
  }
}

TEST_CASE("eval examples and ring homomorphism") {
  const double tol = 1e-14;
  CHECK(std::abs(eval(poly(0, {gr(1), gr(0), gr(-1)}), {2, 0}) - std::complex<double>(-3, 0)) < tol);
  CHECK(std::abs(eval(LaurentPoly::monomial(1, -1), {2, 0}) - std::complex<double>(0.5, 0)) < tol);
  CHECK(std::abs(eval(LaurentPoly::monomial(2, 1), {0, 1}) - std::complex<double>(0, 2)) < tol);
  CHECK_THROWS_AS(eval(LaurentPoly::monomial(1, -1), {0, 0}), Error);

  Rng rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    LaurentPoly p = rng.laurent(rng.uniform(-2, 2), rng.uniform(0, 4));
    LaurentPoly q = rng.laurent(rng.uniform(-2, 2), rng.uniform(0, 4));
    std::complex<double> z(rng.real(0.5, 1.5), rng.real(-1, 1));
    for (unsigned bits : {53U, 64U, 128U, 256U}) {
      auto lhs = eval(p * q, z, bits);
      auto rhs = eval(p, z, bits) * eval(q, z, bits);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * (1 + std::abs(rhs)));
    }
  }
}

TEST_CASE("roots in the annulus") {
  auto r1 = roots_in_annulus(poly(0, {gr(1), gr(0), gr(-1)}), Rational(2));
  REQUIRE(r1.size() == 2);
  for (const auto& r : r1) {
    CHECK(r.multiplicity == 1);
    CHECK(r.location == RootLocation::inside);
    CHECK(std::abs(std::abs(r.root) - 1) < 1e-12);
  }
  CHECK(roots_in_annulus(LaurentPoly::monomial(2, 1), Rational(2)).empty());
  CHECK(roots_in_annulus(from_roots({3, 3}), Rational(2)).empty());

  // A root on |z| = 2 is ambiguous: flagged leniently, an error when strict.
  auto lenient = roots_in_annulus(from_roots({2}), Rational(2));
  REQUIRE(lenient.size() == 1);
  CHECK_FALSE(lenient[0].certified());
  RootOptions strict;
  strict.strict = true;
  CHECK_THROWS_AS(roots_in_annulus(from_roots({2}), Rational(2), strict), Error);
}

TEST_CASE("min_zero_multiplicity") {
  CHECK(min_zero_multiplicity(poly(0, {gr(1), gr(0), gr(-1)}), Rational(2)) == Multiplicity::finite(1));
  CHECK(min_zero_multiplicity(from_roots({1, 1, 1, 5}), Rational(2)) == Multiplicity::finite(3));
  CHECK(min_zero_multiplicity(LaurentPoly::monomial(2, 1), Rational(2)).is_infinite());
}
