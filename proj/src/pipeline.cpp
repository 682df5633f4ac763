#include "gaussvd/pipeline.hpp"

namespace gaussvd {

Analysis analyze(const AnalysisConfig& cfg) {
  require(cfg.surface.has_value() != cfg.curve.has_value(), Errc::invalid_argument,
          "configuration needs exactly one of surface or curve");
  Analysis out;
  if (cfg.surface) {
    const SurfaceData& s = *cfg.surface;
    out.m = s.m;
    out.isotropic = check_isotropy(s);
    require(out.isotropic, Errc::precondition, "surface data is not isotropic (sum g_i^2 != 0)");
    out.immersed = check_immersion(s, cfg.annulus, cfg.roots);
    require(out.immersed, Errc::precondition, "components share a zero in the closed annulus (not an immersion)");
    out.k = nondegeneracy_rank(s);
    Projection proj = project_to_pk(s, cfg.hyperplanes);
    out.curve = std::move(proj.curve);
    out.projected = std::move(proj.hyperplanes);
    out.basis = std::move(proj.basis);
  } else {
    out.curve = *cfg.curve;
    out.m = static_cast<int>(out.curve.components.size());
    Projection proj = project_to_pk(SurfaceData::from_components(out.curve.components), cfg.hyperplanes);
    out.k = out.curve.k();
    require(static_cast<int>(proj.basis.size()) == out.k + 1, Errc::degenerate,
            "curve components are linearly dependent; give the curve in its span");
    out.projected = std::move(proj.hyperplanes);
    out.basis = std::move(proj.basis);
  }
  require(out.curve.is_reduced(), Errc::precondition, "curve representation is not reduced");

  if (cfg.N) {
    require(is_n_subgeneral(out.projected, *cfg.N, out.k), Errc::precondition,
            "hyperplanes are not in " + std::to_string(*cfg.N) + "-subgeneral position");
    out.N = *cfg.N;
  } else {
    out.N = minimal_subgeneral_n(out.projected, out.k);
  }
  out.general_position = out.N == out.k;

  out.profile = ramification_profile(out.curve, out.projected, cfg.annulus, cfg.mode, cfg.roots);
  out.theorem = main_inequality(out.k, out.N, out.profile);

  std::vector<Hyperplane> kept;
  for (int j : out.theorem.kept) {
    kept.push_back(out.projected[static_cast<std::size_t>(j)]);
    out.kept_m.push_back(out.profile.m(static_cast<std::size_t>(j)));
  }
  if (out.m - 1 <= out.N) {
    out.ell = ell_reduction(out.k, out.N, std::max(out.m, out.k + 1), out.kept_m);
  } else {
    out.ell = ell_reduction(out.k, out.N, out.k + 1, out.kept_m);
  }

  const int q = static_cast<int>(kept.size());
  if (q <= 2 * out.N - out.k + 1) {
    out.theorem_satisfied = "only " + std::to_string(q) + " hyperplanes kept; weights need q > 2N-k+1 = " +
                            std::to_string(2 * out.N - out.k + 1);
    return out;
  }
  out.kept_planes = HyperplaneSet(std::move(kept));
  out.weights = compute_weights(out.kept_planes, out.N, out.k);
  out.axioms = verify_axioms(*out.weights, out.kept_planes, out.N, out.k);
  try {
    out.pack = build_exponents(*out.weights, out.kept_m, out.k);
  } catch (const Error& e) {
    if (e.code() != Errc::theorem_satisfied) throw;
    out.theorem_satisfied = e.what();
  }
  return out;
}

MetricRun run_metric(const Analysis& analysis, const AnalysisConfig& cfg) {
  if (!analysis.pack) {
    throw Error(Errc::theorem_satisfied,
                analysis.theorem_satisfied.value_or("exponent pipeline unavailable") + "; no metric to build");
  }
  MetricRun run{build_metric(analysis.curve, analysis.kept_planes, *analysis.weights, analysis.kept_m, *analysis.pack,
                             cfg.annulus, cfg.roots),
                {},
                {},
                {},
                {},
                {},
                {}};
  run.symmetrized = symmetrize(run.spec);
  run.claim1 = claim1_order_check(run.spec);
  if (!cfg.metric) return run;
  const MetricOptions& opts = *cfg.metric;
  if (opts.region) run.flatness = flatness_check(run.symmetrized, opts.hgrid, *opts.region);
  for (const auto& z : opts.invariance_points) run.invariance.push_back(coordinate_invariance_check(run.spec, z));
  for (const auto& req : opts.probes) {
    if (req.target) {
      run.probes.emplace_back(*req.target, divergence_probe(log_field(run.spec), *req.target, req.direction, req.options));
      continue;
    }
    for (const auto& e : run.spec.divisor) {
      if (!e.singular()) continue;
      run.probes.emplace_back(e.roots.front(), divergence_probe(run.spec, e, 0, req.direction, req.options));
    }
  }
  if (opts.schwarz) {
    run.schwarz = schwarz_monitor(analysis.curve, analysis.kept_planes, *analysis.weights, analysis.kept_m,
                                  *analysis.pack, opts.schwarz->first, opts.schwarz->second);
  }
  return run;
}

}  // namespace gaussvd
