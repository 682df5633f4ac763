#include "gaussvd/numeric.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace gaussvd {

namespace {

template <typename Real>
std::complex<double> eval_at(const LaurentPoly& p, std::complex<double> z) {
  NumericPoly<Real> np(p);
  std::complex<Real> v = np(std::complex<Real>(Real(z.real()), Real(z.imag())));
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

real128 abs128(const std::complex<real128>& z) { return boost::multiprecision::sqrt(norm2(z)); }

}  // namespace

std::complex<double> eval(const LaurentPoly& p, std::complex<double> z, unsigned precision_bits) {
  require(!(z == std::complex<double>(0, 0) && !p.is_zero() && p.order() < 0), Errc::invalid_argument,
          "evaluation at 0 of a polynomial with negative exponents");
  if (precision_bits <= 53) return eval_at<double>(p, z);
  if (precision_bits <= 64) return eval_at<long double>(p, z);
  if (precision_bits <= 128) return eval_at<real128>(p, z);
  return eval_at<real256>(p, z);
}

Multiplicity Multiplicity::finite(int m) {
  require(m >= 1, Errc::invalid_argument, "finite multiplicity must be positive");
  return Multiplicity(m);
}

int Multiplicity::value() const {
  require(!is_infinite(), Errc::invalid_argument, "infinite multiplicity has no integer value");
  return value_;
}

std::string Multiplicity::to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

Annulus Annulus::symmetric(const Rational& r) {
  require(r > 1, Errc::precondition, "annulus radius must exceed 1");
  return {Rational(1) / r, r};
}

bool Annulus::contains(std::complex<double> z) const {
  double a = std::abs(z);
  return a > to_double(inner) && a < to_double(outer);
}

std::vector<SimpleRoot> squarefree_roots(const LaurentPoly& f) {
  require(!f.is_zero() && f.order() >= 0, Errc::internal, "squarefree_roots expects an ordinary polynomial");
  const int n = f.degree();
  if (n <= 0) return {};
  std::vector<std::complex<real128>> coef(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) coef[static_cast<std::size_t>(k)] = to_complex<real128>(f.coeff(k));
  const std::complex<real128> lead = coef.back();
  for (auto& c : coef) c = divide(c, lead);

  // Seeds: eigenvalues of the companion matrix in double precision.
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) {
    const auto& c = coef[static_cast<std::size_t>(i)];
    companion(i, n - 1) = -std::complex<double>(static_cast<double>(c.real()), static_cast<double>(c.imag()));
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<std::complex<real128>> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto e = solver.eigenvalues()(i);
    // Nudge the seeds apart so coincident eigenvalue estimates cannot stall
    // the simultaneous iteration.
    double nudge = 1e-12 * (i + 1);
    z[static_cast<std::size_t>(i)] = std::complex<real128>(real128(e.real() + nudge), real128(e.imag() + 0.5 * nudge));
  }

  auto horner = [&](const std::complex<real128>& x) {
    std::complex<real128> acc = coef.back();
    for (std::size_t k = coef.size() - 1; k-- > 0;) acc = acc * x + coef[k];
    return acc;
  };
  auto weierstrass = [&](std::size_t i) {
    std::complex<real128> denom(real128(1), real128(0));
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j != i) denom = denom * (z[i] - z[j]);
    }
    return divide(horner(z[i]), denom);
  };

  // Weierstrass (Durand-Kerner) refinement at 128 bits.
  const real128 stop = real128(1e-36);
  for (int iter = 0; iter < 200; ++iter) {
    real128 worst = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      std::complex<real128> w = weierstrass(i);
      z[i] = z[i] - w;
      real128 scale = std::max(real128(1), abs128(z[i]));
      worst = std::max(worst, abs128(w) / scale);
    }
    if (worst < stop) break;
  }

  std::vector<SimpleRoot> out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    out.push_back({z[i], real128(n) * abs128(weierstrass(i))});
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      require(abs128(out[i].root - out[j].root) > out[i].radius + out[j].radius, Errc::internal,
              "root inclusion disks overlap; cannot certify " + f.to_string());
    }
  }
  return out;
}

std::vector<RootInfo> root_census(const LaurentPoly& p, const Annulus& annulus, const RootOptions& opts) {
  require(!p.is_zero(), Errc::invalid_argument, "root census of the zero polynomial");
  require(annulus.inner > 0 && annulus.inner < annulus.outer, Errc::precondition, "invalid annulus");
  const real128 inner = to_real<real128>(annulus.inner);
  const real128 outer = to_real<real128>(annulus.outer);
  const real128 tol(opts.tolerance);

  std::vector<RootInfo> out;
  for (const auto& [factor, mult] : squarefree(p).parts) {
    for (const auto& sr : squarefree_roots(factor)) {
      real128 mod = abs128(sr.root);
      RootInfo info;
      info.root = {static_cast<double>(sr.root.real()), static_cast<double>(sr.root.imag())};
      info.multiplicity = mult;
      info.error_bound = static_cast<double>(sr.radius);
      real128 lo = mod - sr.radius;
      real128 hi = mod + sr.radius;
      if (lo > inner + tol && hi < outer - tol) {
        info.location = RootLocation::inside;
      } else if (hi < inner - tol || lo > outer + tol) {
        info.location = RootLocation::outside;
      } else {
        info.location = RootLocation::boundary;
      }
      out.push_back(info);
    }
  }
  std::sort(out.begin(), out.end(), [](const RootInfo& a, const RootInfo& b) {
    if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
    return a.root.imag() < b.root.imag();
  });
  return out;
}

std::vector<RootInfo> roots_in_annulus(const LaurentPoly& p, const Annulus& annulus, const RootOptions& opts) {
  std::vector<RootInfo> out;
  for (const auto& info : root_census(p, annulus, opts)) {
    if (info.location == RootLocation::outside) continue;
    if (info.location == RootLocation::boundary && opts.strict) {
      throw Error(Errc::boundary_ambiguity, "root near " + std::to_string(info.root.real()) + "+" +
                                                std::to_string(info.root.imag()) +
                                                "i is within tolerance of the annulus boundary");
    }
    out.push_back(info);
  }
  return out;
}

std::vector<RootInfo> roots_in_annulus(const LaurentPoly& p, const Rational& r, const RootOptions& opts) {
  return roots_in_annulus(p, Annulus::symmetric(r), opts);
}

Multiplicity min_zero_multiplicity(const LaurentPoly& p, const Annulus& annulus, const RootOptions& opts) {
  Multiplicity best = Multiplicity::infinite();
  for (const auto& info : roots_in_annulus(p, annulus, opts)) {
    if (info.location != RootLocation::inside) continue;
    if (best.is_infinite() || info.multiplicity < best.value()) best = Multiplicity::finite(info.multiplicity);
  }
  return best;
}

Multiplicity min_zero_multiplicity(const LaurentPoly& p, const Rational& r, const RootOptions& opts) {
  return min_zero_multiplicity(p, Annulus::symmetric(r), opts);
}

}  // namespace gaussvd
