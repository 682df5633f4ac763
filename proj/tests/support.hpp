#ifndef GAUSSVD_TESTS_SUPPORT_HPP
#define GAUSSVD_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "gaussvd/io.hpp"
#include "gaussvd/lp.hpp"

namespace gaussvd::testing {

inline GaussianRational gr(long re, long im = 0) { return {Rational(re), Rational(im)}; }
inline GaussianRational gq(long p, long q) { return GaussianRational(frac(p, q)); }

inline LaurentPoly poly(int low, std::vector<GaussianRational> c) { return LaurentPoly(low, std::move(c)); }

inline Hyperplane plane(std::vector<GaussianRational> c, std::string label = "") {
  return Hyperplane{std::move(c), std::move(label)};
}

inline HyperplaneSet planes(const std::vector<std::vector<GaussianRational>>& rows) {
  std::vector<Hyperplane> hs;
  for (const auto& r : rows) hs.push_back(plane(r));
  return HyperplaneSet(hs);
}

inline std::vector<Multiplicity> all_infinite(std::size_t q) {
  return std::vector<Multiplicity>(q, Multiplicity::infinite());
}

/// (1 - z^2, i(1 + z^2), 2z).
inline CurveRep catenoid_curve() {
  return CurveRep({poly(0, {gr(1), gr(0), gr(-1)}), poly(0, {gr(0, 1), gr(0), gr(0, 1)}), poly(1, {gr(2)})});
}

/// Hyperplane whose pairing with the catenoid curve is 2(z - a)(z - b).
inline Hyperplane catenoid_plane(const Rational& a, const Rational& b) {
  return plane({GaussianRational(a * b - 1), GaussianRational(0, a * b + 1), GaussianRational(-(a + b))});
}

struct Built {
  CurveRep curve;
  HyperplaneSet hs;
  int N = 0;
  NochkaWeights w;
  std::vector<Multiplicity> m;
  ExponentPack pack;
  MetricSpec spec;
};

/// Profile, weights, exponents and metric for a curve whose hyperplanes all
/// survive the drop step.
inline Built build_all(const CurveRep& curve, const HyperplaneSet& hs, const AnnularEnd& annulus) {
  Built b{curve, hs, 0, {}, {}, {}, {}};
  b.m = multiplicities(ramification_profile(curve, hs, annulus));
  b.N = minimal_subgeneral_n(hs, curve.k());
  b.w = compute_weights(hs, b.N, curve.k());
  b.pack = build_exponents(b.w, b.m, curve.k());
  b.spec = build_metric(curve, hs, b.w, b.m, b.pack, annulus);
  return b;
}

/// (z, z^2 + 1) on r = 2 with five hyperplanes missed in the annulus.
inline Built five_point_example() {
  CurveRep c({LaurentPoly::z(), poly(0, {gr(1), gr(0), gr(1)})});
  auto hs = planes({{gr(1), gr(0)}, {gq(-10, 3), gr(1)}, {gq(10, 3), gr(1)}, {gq(-17, 4), gr(1)}, {gq(17, 4), gr(1)}});
  return build_all(c, hs, AnnularEnd(Rational(2)));
}

/// Catenoid curve with seven hyperplanes whose pairing zeros (a, b) avoid the
/// annulus.
inline Built catenoid_example(const std::vector<std::pair<Rational, Rational>>& pairs, const Rational& r) {
  std::vector<Hyperplane> hs;
  for (const auto& [a, b] : pairs) hs.push_back(catenoid_plane(a, b));
  return build_all(catenoid_curve(), HyperplaneSet(hs), AnnularEnd(r));
}

inline std::vector<std::pair<Rational, Rational>> far_pairs() {
  return {{200, 300}, {-200, 250}, {210, -400}, {-300, -220}, {500, 230}, {-260, 600}, {700, -350}};
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }

  Rational rational(int bound = 5) {
    const int den = uniform(1, 4);
    return frac(uniform(-bound, bound), den);
  }
  GaussianRational gaussian(int bound = 5) { return {rational(bound), coin() ? rational(bound) : Rational(0)}; }
  GaussianRational nonzero_gaussian(int bound = 5) {
    for (;;) {
      GaussianRational c = gaussian(bound);
      if (!c.is_zero()) return c;
    }
  }

  /// Random Laurent polynomial with exponents in [low, low + span].
  LaurentPoly laurent(int low, int span, int bound = 5) {
    std::vector<GaussianRational> c;
    for (int i = 0; i <= span; ++i) c.push_back(gaussian(bound));
    c.back() = nonzero_gaussian(bound);
    return LaurentPoly(low, c);
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace gaussvd::testing

#endif  // GAUSSVD_TESTS_SUPPORT_HPP
