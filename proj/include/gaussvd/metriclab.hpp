#ifndef GAUSSVD_METRICLAB_HPP
#define GAUSSVD_METRICLAB_HPP

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "gaussvd/minsurf.hpp"
#include "gaussvd/nochka.hpp"

namespace gaussvd {

struct SigmaTau {
  /// sigma_0 .. sigma_{k+1}, sigma_p = p(p+1)/2.
  std::vector<Rational> sigma;
  Rational tau_k;
  Rational tau_k1;
};

SigmaTau sigma_tau(int k);

/// sum_j omega(j)(1 - k/m_j), with k/inf = 0.
Rational weighted_sum(const std::vector<Rational>& omega, const std::vector<Multiplicity>& m, int k);
Rational gamma(const NochkaWeights& w, const std::vector<Multiplicity>& m, int k);

struct OpenInterval {
  Rational lo;
  Rational hi;
  bool contains(const Rational& x) const { return lo < x && x < hi; }
};

/// (A / (1/q + tau_{k+1}), A / tau_{k+1}) with A = weighted_sum - (k+1) - k(k+1)/2.
/// Throws Errc::theorem_satisfied when A <= 0.
OpenInterval epsilon_window(const NochkaWeights& w, const std::vector<Multiplicity>& m, int k);

/// Rational of smallest denominator in the open interval (lo >= 0).
Rational choose_epsilon(const OpenInterval& window);

struct ExponentPack {
  int k = 0;
  int q = 0;
  SigmaTau st;
  Rational weighted;
  Rational gamma;
  Rational A;
  OpenInterval window;
  Rational epsilon;
  Rational h;
  Rational rho;
  Rational rho_star;
  /// epsilon * rho_star / q.
  Rational ratio;
};

ExponentPack build_exponents(const NochkaWeights& w, const std::vector<Multiplicity>& m, int k);

class DensityModel;

struct DivisorEntry {
  LaurentPoly factor;
  /// Order of the density D = (bracket)^{rho*} along every root of factor.
  Rational order;
  /// Roots inside the working annulus or within tolerance of its boundary.
  std::vector<std::complex<double>> roots;
  /// Divides some psi_{jp}, p = 0..k (the top level being F_k).
  bool psi_factor = false;
  bool singular() const { return psi_factor && !roots.empty(); }
};

/// The pseudo-metric dtau = D |dz| with
/// D = (prod |G(H_j)|^{a_j} / (|F_k|^{1+eps} prod_{j, p<k} |psi_{jp}|^{eps/q}))^{rho*},
/// a_j = omega(j)(1 - k/m_j).
struct MetricSpec {
  CurveRep curve;
  HyperplaneSet hyperplanes;
  NochkaWeights weights;
  std::vector<Multiplicity> m;
  ExponentPack pack;
  PsiSelection psi;
  AnnularEnd annulus;
  std::vector<Rational> a;
  std::vector<DivisorEntry> divisor;
  std::shared_ptr<const DensityModel> model;

  /// log D(z); throws Errc::invalid_argument on the zero set of any factor.
  double log_density(std::complex<double> z) const;
  double density(std::complex<double> z) const;
  std::vector<std::complex<double>> singular_points() const;
};

MetricSpec build_metric(const CurveRep& curve, const HyperplaneSet& hs, const NochkaWeights& w,
                        const std::vector<Multiplicity>& m, const ExponentPack& pack, const AnnularEnd& annulus,
                        const RootOptions& opts = {});

struct Claim1Entry {
  LaurentPoly factor;
  Rational order;
  bool ok = false;
};

struct Claim1Report {
  /// -epsilon rho* / q.
  Rational bound;
  std::vector<Claim1Entry> entries;
  bool ok() const;
};

Claim1Report claim1_order_check(const MetricSpec& spec);

/// lambda(z) = D(z) D(c/z), c the inversion constant of the annulus.
struct SymmetrizedMetric {
  MetricSpec base;
  Rational c;
  /// Divisor entries of D(c/z): factors p(c/z) with the same orders.
  std::vector<DivisorEntry> mirrored;

  double log_lambda(std::complex<double> z) const;
  std::vector<std::complex<double>> singular_points() const;
};

SymmetrizedMetric symmetrize(const MetricSpec& spec);

/// High-precision log-density field used by the numeric probes.
using LogField = std::function<real128(const std::complex<real128>&)>;

LogField log_field(const MetricSpec& spec);
LogField log_field(const SymmetrizedMetric& metric);

/// Stencil centers on a polar grid of the closed sector
/// {r_min <= |z| <= r_max, arg z in [theta_min, theta_max]}.
struct Region {
  double r_min = 0;
  double r_max = 0;
  int radial = 8;
  int angular = 16;
  double theta_min = 0;
  double theta_max = 6.283185307179586;

  std::vector<std::complex<double>> centers() const;
};

struct FlatnessReport {
  double max_abs_laplacian = 0;
  std::complex<double> worst_point;
  std::size_t centers = 0;
  double h = 0;
};

/// Five-point Laplacian of the log density at every region center. Every
/// center must keep a distance >= 10h from `singular` and from `avoid`
/// circles |z| = radius.
FlatnessReport flatness_check(const LogField& field, double h, const Region& region,
                              const std::vector<std::complex<double>>& singular = {},
                              const std::vector<double>& avoid_radii = {});
FlatnessReport flatness_check(const SymmetrizedMetric& metric, double h, const Region& region);

struct InvarianceReport {
  std::complex<double> z0;
  double log_density_z = 0;
  double log_density_xi = 0;
  double relative_deviation = 0;
  bool ok = false;
};

/// Rebuilds the density in the frame xi = 1/z (G_xi = G(1/xi) dz/dxi, same psi
/// index sets) and compares D_xi(1/z0) |dxi/dz|^jacobian_power with D_z(z0).
InvarianceReport coordinate_invariance_check(const MetricSpec& spec, std::complex<double> z0,
                                             double jacobian_power = 1.0, double tolerance = 1e-9);

struct ProbeOptions {
  double s_start = 0.1;
  double s_end = 1e-4;
  int samples = 60;
  int substeps = 8;
};

struct ProbeReport {
  /// Distances to the target, decreasing.
  std::vector<double> s;
  std::vector<double> log_density;
  /// Length of the path from s_start to s[i].
  std::vector<double> partial_length;
  bool monotone = false;
  /// Least-squares slope of log D against log s over the innermost third.
  double fitted_exponent = 0;
  std::optional<Rational> exact_order;
  /// Max relative change of the partial lengths when the substeps double.
  double refinement_change = 0;
};

/// Straight path target + s * direction for s from s_start down to s_end.
ProbeReport divergence_probe(const LogField& field, std::complex<double> target, std::complex<double> direction,
                             const ProbeOptions& opts = {});
/// Probe toward the root of a divisor entry; attaches its exact order.
ProbeReport divergence_probe(const MetricSpec& spec, const DivisorEntry& entry, std::size_t root,
                             std::complex<double> direction, const ProbeOptions& opts = {});

struct SchwarzReport {
  double sup_coarse = 0;
  double sup_fine = 0;
  /// sup_fine / sup_coarse.
  double refinement_ratio = 0;
  std::size_t points = 0;
};

/// Sup over a polar grid of |z| < R of the Schwarz-lemma quotient
/// (|F|^{gamma - eps sigma_{k+1}} |F_k|^{1+eps} prod |F_p(H_j)|^{eps/q} /
///  prod |F(H_j)|^{a_j})^{1/(sigma_k + eps tau_k)} / (2R/(R^2-|z|^2)).
SchwarzReport schwarz_monitor(const CurveRep& curve, const HyperplaneSet& hs, const NochkaWeights& w,
                              const std::vector<Multiplicity>& m, const ExponentPack& pack, double R, int grid);

}  // namespace gaussvd

#endif  // GAUSSVD_METRICLAB_HPP
