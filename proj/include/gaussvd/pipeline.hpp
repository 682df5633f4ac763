#ifndef GAUSSVD_PIPELINE_HPP
#define GAUSSVD_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gaussvd/metriclab.hpp"
#include "gaussvd/verifier.hpp"

namespace gaussvd {

struct ProbeRequest {
  /// Explicit target; when absent the probe runs into the first root of every
  /// singular divisor class.
  std::optional<std::complex<double>> target;
  std::complex<double> direction{1, 0};
  ProbeOptions options;
};

struct MetricOptions {
  std::optional<Region> region;
  double hgrid = 1e-3;
  std::vector<ProbeRequest> probes;
  std::vector<std::complex<double>> invariance_points;
  std::optional<std::pair<double, int>> schwarz;
};

struct AnalysisConfig {
  /// Exactly one of surface (minimal-surface data in R^m) or curve (a curve
  /// already in P^k) is set.
  std::optional<SurfaceData> surface;
  std::optional<CurveRep> curve;
  AnnularEnd annulus;
  HyperplaneSet hyperplanes;
  std::optional<int> N;
  ProfileMode mode = ProfileMode::min_order;
  RootOptions roots;
  unsigned precision = 128;
  std::optional<MetricOptions> metric;
};

struct Analysis {
  int m = 0;
  int k = 0;
  bool isotropic = true;
  bool immersed = true;
  std::vector<int> basis;
  CurveRep curve;
  HyperplaneSet projected;
  int N = 0;
  bool general_position = false;
  RamificationProfile profile;
  TheoremReport theorem;
  EllReport ell;
  /// Hyperplanes kept after dropping m_j <= k, with their multiplicities.
  HyperplaneSet kept_planes;
  std::vector<Multiplicity> kept_m;
  std::optional<NochkaWeights> weights;
  std::optional<AxiomReport> axioms;
  /// Set when the metric construction does not apply (A <= 0 or too few
  /// hyperplanes for the weights).
  std::optional<std::string> theorem_satisfied;
  std::optional<ExponentPack> pack;
};

/// Surface checks, rank, projection, position, profile, inequality, weights
/// and exponents. Inequality violations are reported, not thrown.
Analysis analyze(const AnalysisConfig& cfg);

struct MetricRun {
  MetricSpec spec;
  SymmetrizedMetric symmetrized;
  Claim1Report claim1;
  std::optional<FlatnessReport> flatness;
  std::vector<InvarianceReport> invariance;
  std::vector<std::pair<std::complex<double>, ProbeReport>> probes;
  std::optional<SchwarzReport> schwarz;
};

/// Requires analysis.pack; throws Errc::theorem_satisfied otherwise.
MetricRun run_metric(const Analysis& analysis, const AnalysisConfig& cfg);

}  // namespace gaussvd

#endif  // GAUSSVD_PIPELINE_HPP
