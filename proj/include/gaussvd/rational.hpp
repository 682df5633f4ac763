#ifndef GAUSSVD_RATIONAL_HPP
#define GAUSSVD_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "gaussvd/error.hpp"

namespace gaussvd {

using Rational = mpq_class;

/// Parses "p/q" or "p" (optional sign, base 10). Throws Errc::parse with the
/// offending character position on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text; integers render without a denominator.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// p/q in lowest terms.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Exact complex number over Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int value) : re_(value) {}  // NOLINT: literal promotion
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total order (re, then im); only used for canonical sorting.
  friend int compare(const GaussianRational& a, const GaussianRational& b);

  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Helper for literals in tests and configs: gr(1, 2) == 1 + 2i.
inline GaussianRational gr(const Rational& re, const Rational& im = 0) { return {re, im}; }

}  // namespace gaussvd

namespace Eigen {

template <>
struct NumTraits<gaussvd::GaussianRational> : GenericNumTraits<gaussvd::GaussianRational> {
  using Real = gaussvd::GaussianRational;
  using NonInteger = gaussvd::GaussianRational;
  using Nested = gaussvd::GaussianRational;
  using Literal = gaussvd::GaussianRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // GAUSSVD_RATIONAL_HPP
