#ifndef GAUSSVD_NUMERIC_HPP
#define GAUSSVD_NUMERIC_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <complex>
#include <string>
#include <vector>

#include "gaussvd/laurent.hpp"

namespace gaussvd {

/// Default working precision for floating evaluation: 128-bit significand.
using real128 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;
using real256 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

template <typename Real>
Real to_real(const Rational& q) {
  if constexpr (std::is_floating_point_v<Real>) {
    return static_cast<Real>(q.get_d());
  } else {
    return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
  }
}

template <typename Real>
std::complex<Real> to_complex(const GaussianRational& c) {
  return {to_real<Real>(c.re()), to_real<Real>(c.im())};
}

template <typename Real>
Real norm2(const std::complex<Real>& z) {
  return z.real() * z.real() + z.imag() * z.imag();
}

/// Complex division written out; std::complex<T> is only relied upon for
/// storage, +, - and * when T is a multiprecision type.
template <typename Real>
std::complex<Real> divide(const std::complex<Real>& a, const std::complex<Real>& b) {
  Real d = norm2(b);
  return {(a.real() * b.real() + a.imag() * b.imag()) / d,
          (a.imag() * b.real() - a.real() * b.imag()) / d};
}

/// Floating image of a LaurentPoly with coefficients rounded once.
template <typename Real>
class NumericPoly {
 public:
  using Complex = std::complex<Real>;

  NumericPoly() = default;
  explicit NumericPoly(const LaurentPoly& p) : low_(p.order()) {
    coeffs_.reserve(p.dense().size());
    for (const auto& c : p.dense()) coeffs_.push_back(to_complex<Real>(c));
    if (p.is_zero()) low_ = 0;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int order() const { return low_; }

  Complex operator()(const Complex& z) const {
    if (coeffs_.empty()) return {};
    Complex acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * z + coeffs_[i];
    return acc * power(z, low_);
  }

  /// log |p(z)|.
  Real log_abs(const Complex& z) const {
    using std::log;
    return log(norm2((*this)(z))) / 2;
  }

  static Complex power(const Complex& z, int e) {
    if (e == 0) return Complex(Real(1), Real(0));
    Complex base = e > 0 ? z : divide(Complex(Real(1), Real(0)), z);
    unsigned n = static_cast<unsigned>(e > 0 ? e : -e);
    Complex out(Real(1), Real(0));
    while (n > 0) {
      if (n & 1U) out = out * base;
      n >>= 1U;
      if (n > 0) base = base * base;
    }
    return out;
  }

 private:
  int low_ = 0;
  std::vector<Complex> coeffs_;
};

/// Evaluates p at z with a working precision of at least precision_bits
/// (tiers: 53, 64, 128, 256; requests round up to the next tier). The result
/// is rounded to double once at the end.
std::complex<double> eval(const LaurentPoly& p, std::complex<double> z, unsigned precision_bits = 128);

/// Zero multiplicity on an annulus: a positive integer or infinity.
class Multiplicity {
 public:
  Multiplicity() = default;
  static Multiplicity infinite() { return Multiplicity(0); }
  static Multiplicity finite(int m);

  bool is_infinite() const { return value_ == 0; }
  int value() const;
  std::string to_string() const;

  friend bool operator==(Multiplicity a, Multiplicity b) { return a.value_ == b.value_; }
  /// True when this multiplicity is strictly greater than k (infinity always is).
  bool exceeds(int k) const { return is_infinite() || value_ > k; }

 private:
  explicit Multiplicity(int raw) : value_(raw) {}
  int value_ = 0;
};

/// Open annulus {inner < |z| < outer}.
struct Annulus {
  Rational inner;
  Rational outer;

  /// {1/r < |z| < r}.
  static Annulus symmetric(const Rational& r);
  bool contains(std::complex<double> z) const;
};

enum class RootLocation { inside, outside, boundary };

struct RootInfo {
  std::complex<double> root;
  int multiplicity = 1;
  /// Radius of a disk around root certified to hold exactly one root.
  double error_bound = 0;
  RootLocation location = RootLocation::outside;
  bool certified() const { return location != RootLocation::boundary; }
};

struct RootOptions {
  double tolerance = 1e-9;
  bool strict = false;
};

/// All roots of p (excluding none), each with its multiplicity and location
/// relative to the annulus. Roots whose certified disk comes within
/// `tolerance` of either boundary circle are marked boundary.
std::vector<RootInfo> root_census(const LaurentPoly& p, const Annulus& annulus, const RootOptions& opts = {});

/// Roots inside the annulus plus boundary-ambiguous ones; in strict mode an
/// ambiguous root raises Errc::boundary_ambiguity.
std::vector<RootInfo> roots_in_annulus(const LaurentPoly& p, const Rational& r, const RootOptions& opts = {});
std::vector<RootInfo> roots_in_annulus(const LaurentPoly& p, const Annulus& annulus, const RootOptions& opts = {});

Multiplicity min_zero_multiplicity(const LaurentPoly& p, const Rational& r, const RootOptions& opts = {});
Multiplicity min_zero_multiplicity(const LaurentPoly& p, const Annulus& annulus, const RootOptions& opts = {});

/// Simple roots of a monic square-free ordinary polynomial, refined at 128
/// bits by Weierstrass iteration from companion-matrix seeds.
struct SimpleRoot {
  std::complex<real128> root;
  real128 radius;
};
std::vector<SimpleRoot> squarefree_roots(const LaurentPoly& monic_squarefree);

}  // namespace gaussvd

#endif  // GAUSSVD_NUMERIC_HPP
