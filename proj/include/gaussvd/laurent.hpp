#ifndef GAUSSVD_LAURENT_HPP
#define GAUSSVD_LAURENT_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gaussvd/rational.hpp"

namespace gaussvd {

/// Finitely supported sum of c_k z^k, k in Z, with coefficients in Q(i).
///
/// Stored densely from the lowest to the highest nonzero exponent; both end
/// coefficients are nonzero, so the observable support never contains a zero
/// coefficient. The zero polynomial has empty support.
class LaurentPoly {
 public:
  using Term = std::pair<int, GaussianRational>;

  LaurentPoly() = default;
  LaurentPoly(const GaussianRational& constant);  // NOLINT: implicit constants
  LaurentPoly(int constant) : LaurentPoly(GaussianRational(constant)) {}  // NOLINT

  /// Coefficients c_low, c_{low+1}, ...; zeros at either end are trimmed.
  LaurentPoly(int low, std::vector<GaussianRational> coeffs);

  static LaurentPoly monomial(const GaussianRational& c, int power);
  static LaurentPoly z() { return monomial(1, 1); }
  static LaurentPoly from_terms(const std::vector<Term>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  /// Smallest exponent with nonzero coefficient. Undefined for zero.
  int order() const { return low_; }
  /// Largest exponent with nonzero coefficient. Undefined for zero.
  int degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  /// degree() - order(), the degree of the ordinary polynomial part.
  int span() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  bool is_monomial() const { return coeffs_.size() == 1; }

  GaussianRational coeff(int power) const;
  const GaussianRational& leading() const { return coeffs_.back(); }
  const GaussianRational& trailing() const { return coeffs_.front(); }
  const std::vector<GaussianRational>& dense() const { return coeffs_; }

  /// Nonzero terms in increasing exponent order.
  std::vector<Term> terms() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const GaussianRational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const GaussianRational& c) { return a *= c; }
  friend LaurentPoly operator*(const GaussianRational& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplication by z^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned e) const;
  /// Coefficientwise conjugate (the polynomial conj(p(conj z))).
  LaurentPoly conj() const;

  std::string to_string(const char* var = "z") const;

 private:
  void trim();

  int low_ = 0;
  std::vector<GaussianRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

LaurentPoly derivative(const LaurentPoly& p);
/// l-th derivative.
LaurentPoly derivative(const LaurentPoly& p, int l);

/// p(1/z): exponentwise negation of the support.
LaurentPoly substitute_inverse(const LaurentPoly& p);
/// p(c/z) for a nonzero rational c; c = 1 gives substitute_inverse.
LaurentPoly substitute_scaled_inverse(const LaurentPoly& p, const Rational& c);

/// Writes p = c z^v P with P an ordinary polynomial, P(0) != 0, P monic.
struct UnitSplit {
  GaussianRational constant;
  int shift = 0;
  LaurentPoly monic_part;
};
UnitSplit split_unit(const LaurentPoly& p);

/// Exact quotient a / b; throws Errc::internal when b does not divide a.
LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b);
/// Whether b divides a in the Laurent ring (monomials are units).
bool divides(const LaurentPoly& b, const LaurentPoly& a);

/// Monic gcd of the ordinary-polynomial parts; monomials are units, so
/// gcd(z, z^3) == 1. gcd(p, 0) is the monic associate of p's polynomial part.
LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q);

/// Gcd of ordinary polynomials (nonnegative support), keeping powers of z.
LaurentPoly polynomial_gcd(const LaurentPoly& p, const LaurentPoly& q);

struct SquareFreeDecomposition {
  /// (factor, multiplicity), factors monic and square-free, pairwise coprime,
  /// ordered by increasing multiplicity.
  std::vector<std::pair<LaurentPoly, int>> parts;
  /// c z^v with v = min(order, 0).
  LaurentPoly unit;

  LaurentPoly reconstruct() const;
  /// Smallest multiplicity among the parts, or 0 when there are none.
  int min_multiplicity() const;
};

/// Yun decomposition of the ordinary polynomial p z^{-min(order,0)}. Positive
/// powers of z are kept as the factor z; negative ones go to the unit.
SquareFreeDecomposition squarefree(const LaurentPoly& p);

struct CoprimeBasis {
  /// Monic, square-free, pairwise coprime; sorted by (degree, coefficients).
  std::vector<LaurentPoly> basis;
  /// exponents[i][b]: multiplicity of basis[b] in input i.
  std::vector<std::vector<int>> exponents;
  /// Per-input monomial unit c z^v, v = min(order, 0).
  std::vector<LaurentPoly> units;

  LaurentPoly reconstruct(std::size_t input) const;
};

CoprimeBasis coprime_basis(const std::vector<LaurentPoly>& ps);

/// Canonical ordering used for factor lists: degree first, then coefficients.
bool canonical_less(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace gaussvd

#endif  // GAUSSVD_LAURENT_HPP
