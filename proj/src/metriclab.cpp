#include "gaussvd/metriclab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gaussvd {

SigmaTau sigma_tau(int k) {
  require(k >= 1, Errc::precondition, "sigma/tau need k >= 1");
  SigmaTau out;
  Rational tau = 0;
  for (int p = 0; p <= k + 1; ++p) {
    out.sigma.emplace_back(p * (p + 1) / 2);
    tau += out.sigma.back();
    if (p == k) out.tau_k = tau;
  }
  out.tau_k1 = tau;
  return out;
}

Rational weighted_sum(const std::vector<Rational>& omega, const std::vector<Multiplicity>& m, int k) {
  require(omega.size() == m.size(), Errc::invalid_argument, "weights and multiplicities differ in length");
  Rational out = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    Rational factor = m[j].is_infinite() ? Rational(1) : Rational(1) - Rational(k, m[j].value());
    out += omega[j] * factor;
  }
  out.canonicalize();
  return out;
}

Rational gamma(const NochkaWeights& w, const std::vector<Multiplicity>& m, int k) {
  return weighted_sum(w.omega, m, k) - Rational(k + 1);
}

OpenInterval epsilon_window(const NochkaWeights& w, const std::vector<Multiplicity>& m, int k) {
  const SigmaTau st = sigma_tau(k);
  const Rational A = gamma(w, m, k) - st.sigma[static_cast<std::size_t>(k)];
  if (A <= 0) {
    throw Error(Errc::theorem_satisfied, "A = " + to_string(A) +
                                             " <= 0: the weighted defect does not exceed the bound, nothing to construct");
  }
  const Rational q(static_cast<long>(m.size()));
  OpenInterval out{A / (Rational(1) / q + st.tau_k1), A / st.tau_k1};
  require(out.lo < out.hi, Errc::internal, "empty epsilon window");
  return out;
}

namespace {

mpz_class floor_of(const Rational& x) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

// Simplest rational in the open interval (lo, hi); hi absent means infinity.
Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi) {
  const mpz_class n = floor_of(lo);
  const Rational next(n + 1);
  if (!hi || next < *hi) return next;
  const Rational flo = lo - Rational(n);
  const Rational fhi = *hi - Rational(n);
  std::optional<Rational> yhi;
  if (flo != 0) yhi = Rational(1) / flo;
  const Rational y = simplest_between(Rational(1) / fhi, yhi);
  Rational out = Rational(n) + Rational(1) / y;
  out.canonicalize();
  return out;
}

}  // namespace

Rational choose_epsilon(const OpenInterval& window) {
  require(window.lo < window.hi, Errc::invalid_argument, "epsilon window is empty");
  require(window.lo >= 0, Errc::invalid_argument, "epsilon window must lie in [0, inf)");
  return simplest_between(window.lo, window.hi);
}

ExponentPack build_exponents(const NochkaWeights& w, const std::vector<Multiplicity>& m, int k) {
  ExponentPack p;
  p.k = k;
  p.q = static_cast<int>(m.size());
  p.st = sigma_tau(k);
  p.weighted = weighted_sum(w.omega, m, k);
  p.gamma = p.weighted - Rational(k + 1);
  const Rational& sigma_k = p.st.sigma[static_cast<std::size_t>(k)];
  const Rational& sigma_k1 = p.st.sigma[static_cast<std::size_t>(k + 1)];
  p.window = epsilon_window(w, m, k);
  p.A = p.gamma - sigma_k;
  p.epsilon = choose_epsilon(p.window);
  p.h = p.weighted - Rational(k + 1) - p.epsilon * sigma_k1;
  require(p.h > sigma_k + p.epsilon * p.st.tau_k, Errc::internal, "h does not exceed sigma_k + eps tau_k");
  p.rho = (sigma_k + p.epsilon * p.st.tau_k) / p.h;
  require(p.rho > 0 && p.rho < 1, Errc::internal, "rho = " + to_string(p.rho) + " is outside (0, 1)");
  p.rho_star = Rational(1) / ((Rational(1) - p.rho) * p.h);
  p.ratio = p.epsilon * p.rho_star / Rational(p.q);
  require(p.ratio > 1, Errc::internal, "eps rho*/q = " + to_string(p.ratio) + " does not exceed 1");
  for (Rational* r : {&p.A, &p.h, &p.rho, &p.rho_star, &p.ratio}) r->canonicalize();
  return p;
}

namespace {

using C128 = std::complex<real128>;

real128 log_abs(const NumericPoly<real128>& p, const C128& z) {
  real128 n2 = norm2(p(z));
  require(n2 > 0, Errc::invalid_argument, "density evaluated on the zero set of one of its factors");
  return boost::multiprecision::log(n2) / 2;
}

real128 log_norm(const Hyperplane& H) {
  Rational s = 0;
  for (const auto& c : H.coeffs) s += c.norm2();
  return boost::multiprecision::log(to_real<real128>(s)) / 2;
}

C128 to128(std::complex<double> z) { return {real128(z.real()), real128(z.imag())}; }

}  // namespace

class DensityModel {
 public:
  DensityModel(const CurveRep& curve, const HyperplaneSet& hs, const PsiSelection& sel, const std::vector<Rational>& a,
               const ExponentPack& pack)
      : rho_star_(to_real<real128>(pack.rho_star)),
        top_weight_(to_real<real128>(Rational(1) + pack.epsilon)),
        psi_weight_(to_real<real128>(pack.epsilon / Rational(pack.q))) {
    const WronskianLadder lad(curve);
    const int k = curve.k();
    top_ = NumericPoly<real128>(lad.top());
    for (std::size_t j = 0; j < hs.size(); ++j) {
      pairings_.emplace_back(pairing(curve, hs[j]));
      a_.push_back(to_real<real128>(a[j]));
      log_norms_.push_back(log_norm(hs[j]));
      for (int p = 1; p < k; ++p) {
        psi_.emplace_back(contracted(lad, hs[j], p, sel.at(j, p).indices));
        psi_owner_.push_back(j);
      }
    }
  }

  real128 log_density(const C128& z) const {
    real128 s = 0;
    for (std::size_t j = 0; j < pairings_.size(); ++j) {
      real128 lg = log_abs(pairings_[j], z) - log_norms_[j];
      // G(H_j) is both a numerator factor and the p = 0 psi component.
      s += (a_[j] - psi_weight_) * lg;
    }
    for (std::size_t i = 0; i < psi_.size(); ++i) s -= psi_weight_ * (log_abs(psi_[i], z) - log_norms_[psi_owner_[i]]);
    s -= top_weight_ * log_abs(top_, z);
    return rho_star_ * s;
  }

 private:
  real128 rho_star_;
  real128 top_weight_;
  real128 psi_weight_;
  NumericPoly<real128> top_;
  std::vector<NumericPoly<real128>> pairings_;
  std::vector<real128> a_;
  std::vector<real128> log_norms_;
  std::vector<NumericPoly<real128>> psi_;
  std::vector<std::size_t> psi_owner_;
};

double MetricSpec::log_density(std::complex<double> z) const {
  return static_cast<double>(model->log_density(to128(z)));
}

double MetricSpec::density(std::complex<double> z) const { return std::exp(log_density(z)); }

std::vector<std::complex<double>> MetricSpec::singular_points() const {
  std::vector<std::complex<double>> out;
  for (const auto& e : divisor) {
    if (e.order != 0) out.insert(out.end(), e.roots.begin(), e.roots.end());
  }
  return out;
}

MetricSpec build_metric(const CurveRep& curve, const HyperplaneSet& hs, const NochkaWeights& w,
                        const std::vector<Multiplicity>& m, const ExponentPack& pack, const AnnularEnd& annulus,
                        const RootOptions& opts) {
  const int k = curve.k();
  const std::size_t q = hs.size();
  require(static_cast<int>(hs.dim()) == k + 1, Errc::invalid_argument, "hyperplanes must live in P^k");
  require(w.omega.size() == q && m.size() == q, Errc::invalid_argument, "weights, profile and hyperplanes differ in size");
  require(pack.k == k && pack.q == static_cast<int>(q), Errc::invalid_argument, "exponent pack built for another (k, q)");

  MetricSpec spec;
  spec.curve = curve;
  spec.hyperplanes = hs;
  spec.weights = w;
  spec.m = m;
  spec.pack = pack;
  spec.annulus = annulus;
  spec.psi = select_psi(curve, hs);
  for (std::size_t j = 0; j < q; ++j) {
    Rational factor = m[j].is_infinite() ? Rational(1) : Rational(1) - Rational(k, m[j].value());
    spec.a.push_back(w.omega[j] * factor);
  }
  spec.model = std::make_shared<DensityModel>(curve, hs, spec.psi, spec.a, pack);

  // Inputs: G(H_j) (j < q), F_k (index q), then psi_{jp} for 1 <= p < k.
  const WronskianLadder lad(curve);
  std::vector<LaurentPoly> inputs;
  for (std::size_t j = 0; j < q; ++j) inputs.push_back(spec.psi.at(j, 0).psi);
  inputs.push_back(lad.top());
  for (std::size_t j = 0; j < q; ++j) {
    for (int p = 1; p < k; ++p) inputs.push_back(spec.psi.at(j, p).psi);
  }
  const CoprimeBasis basis = coprime_basis(inputs);
  const Rational psi_weight = pack.epsilon / Rational(static_cast<long>(q));
  for (std::size_t b = 0; b < basis.basis.size(); ++b) {
    DivisorEntry e;
    e.factor = basis.basis[b];
    Rational raw = 0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      const int mult = basis.exponents[i][b];
      if (mult == 0) continue;
      e.psi_factor = true;
      if (i < q) {
        raw += (spec.a[i] - psi_weight) * mult;
      } else if (i == q) {
        raw -= (Rational(1) + pack.epsilon) * mult;
      } else {
        raw -= psi_weight * mult;
      }
    }
    e.order = pack.rho_star * raw;
    e.order.canonicalize();
    for (const auto& info : roots_in_annulus(e.factor, annulus.working(), opts)) e.roots.push_back(info.root);
    spec.divisor.push_back(std::move(e));
  }
  return spec;
}

bool Claim1Report::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const Claim1Entry& e) { return e.ok; });
}

Claim1Report claim1_order_check(const MetricSpec& spec) {
  Claim1Report rep;
  rep.bound = -spec.pack.ratio;
  for (const auto& e : spec.divisor) {
    if (!e.singular()) continue;
    rep.entries.push_back({e.factor, e.order, e.order <= rep.bound && rep.bound < -1});
  }
  return rep;
}

double SymmetrizedMetric::log_lambda(std::complex<double> z) const {
  const C128 w = to128(z);
  const C128 mirror = divide(C128(to_real<real128>(c), 0), w);
  return static_cast<double>(base.model->log_density(w) + base.model->log_density(mirror));
}

std::vector<std::complex<double>> SymmetrizedMetric::singular_points() const {
  std::vector<std::complex<double>> out = base.singular_points();
  for (const auto& e : mirrored) {
    if (e.order != 0) out.insert(out.end(), e.roots.begin(), e.roots.end());
  }
  return out;
}

SymmetrizedMetric symmetrize(const MetricSpec& spec) {
  SymmetrizedMetric out;
  out.base = spec;
  out.c = spec.annulus.inversion_constant();
  const double c = to_double(out.c);
  for (const auto& e : spec.divisor) {
    DivisorEntry m;
    m.factor = split_unit(substitute_scaled_inverse(e.factor, out.c)).monic_part;
    m.order = e.order;
    m.psi_factor = e.psi_factor;
    for (const auto& r : e.roots) m.roots.push_back(c / r);
    out.mirrored.push_back(std::move(m));
  }
  return out;
}

LogField log_field(const MetricSpec& spec) {
  auto model = spec.model;
  return [model](const C128& z) { return model->log_density(z); };
}

LogField log_field(const SymmetrizedMetric& metric) {
  auto model = metric.base.model;
  const real128 c = to_real<real128>(metric.c);
  return [model, c](const C128& z) { return model->log_density(z) + model->log_density(divide(C128(c, 0), z)); };
}

std::vector<std::complex<double>> Region::centers() const {
  require(radial >= 1 && angular >= 1 && r_min <= r_max, Errc::invalid_argument, "invalid region");
  std::vector<std::complex<double>> out;
  for (int i = 0; i < radial; ++i) {
    const double r = radial == 1 ? (r_min + r_max) / 2 : r_min + (r_max - r_min) * i / (radial - 1);
    for (int j = 0; j < angular; ++j) {
      const double t = theta_min + (theta_max - theta_min) * (j + 0.5) / angular;
      out.push_back(std::polar(r, t));
    }
  }
  return out;
}

FlatnessReport flatness_check(const LogField& field, double h, const Region& region,
                              const std::vector<std::complex<double>>& singular, const std::vector<double>& avoid_radii) {
  require(h > 0, Errc::invalid_argument, "grid step must be positive");
  FlatnessReport rep;
  rep.h = h;
  const real128 step(h);
  for (const auto& z : region.centers()) {
    for (const auto& s : singular) {
      require(std::abs(z - s) >= 10 * h, Errc::precondition, "region comes within 10h of a singular point");
    }
    for (double radius : avoid_radii) {
      require(std::abs(std::abs(z) - radius) >= 10 * h, Errc::precondition,
              "region comes within 10h of the annulus boundary");
    }
    const C128 c = to128(z);
    const real128 lap = (field(c + C128(step, 0)) + field(c - C128(step, 0)) + field(c + C128(0, step)) +
                         field(c - C128(0, step)) - 4 * field(c)) /
                        (step * step);
    const double v = std::abs(static_cast<double>(lap));
    if (v > rep.max_abs_laplacian || rep.centers == 0) {
      rep.max_abs_laplacian = v;
      rep.worst_point = z;
    }
    ++rep.centers;
  }
  return rep;
}

FlatnessReport flatness_check(const SymmetrizedMetric& metric, double h, const Region& region) {
  const Annulus a = metric.base.annulus.working();
  return flatness_check(log_field(metric), h, region, metric.singular_points(), {to_double(a.inner), to_double(a.outer)});
}

InvarianceReport coordinate_invariance_check(const MetricSpec& spec, std::complex<double> z0, double jacobian_power,
                                             double tolerance) {
  require(z0 != std::complex<double>(0, 0), Errc::invalid_argument, "z0 must be nonzero");
  // G_xi(xi) = G(1/xi) dz/dxi with dz/dxi = -xi^{-2}.
  const LaurentPoly jac = LaurentPoly::monomial(GaussianRational(-1), -2);
  std::vector<LaurentPoly> comps;
  for (const auto& g : spec.curve.components) comps.push_back(jac * substitute_inverse(g));
  const CurveRep xi_curve(std::move(comps), "xi");
  const DensityModel xi_model(xi_curve, spec.hyperplanes, spec.psi, spec.a, spec.pack);

  InvarianceReport rep;
  rep.z0 = z0;
  const C128 z = to128(z0);
  const C128 xi = divide(C128(1, 0), z);
  const real128 lz = spec.model->log_density(z);
  const real128 lxi = xi_model.log_density(xi);
  // |dxi/dz| = |z|^{-2}.
  const real128 log_jac = -boost::multiprecision::log(norm2(z));
  const real128 diff = lxi + real128(jacobian_power) * log_jac - lz;
  rep.log_density_z = static_cast<double>(lz);
  rep.log_density_xi = static_cast<double>(lxi);
  rep.relative_deviation = std::abs(static_cast<double>(boost::multiprecision::expm1(diff)));
  rep.ok = rep.relative_deviation < tolerance;
  return rep;
}

namespace {

// Path length on [s_lo, s_hi] in the variable v = log s, trapezoidal rule.
real128 segment_length(const LogField& field, const C128& target, const C128& dir, double s_hi, double s_lo,
                       int substeps) {
  const double v0 = std::log(s_lo);
  const double v1 = std::log(s_hi);
  real128 sum = 0;
  for (int i = 0; i <= substeps; ++i) {
    const double v = v0 + (v1 - v0) * i / substeps;
    const real128 s = boost::multiprecision::exp(real128(v));
    const real128 f = boost::multiprecision::exp(field(target + dir * s)) * s;
    sum += (i == 0 || i == substeps) ? f / 2 : f;
  }
  return sum * real128(v1 - v0) / substeps;
}

std::vector<double> partial_lengths(const LogField& field, const C128& target, const C128& dir,
                                    const std::vector<double>& s, int substeps) {
  std::vector<double> out{0.0};
  real128 acc = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    acc += segment_length(field, target, dir, s[i - 1], s[i], substeps);
    out.push_back(static_cast<double>(acc));
  }
  return out;
}

}  // namespace

ProbeReport divergence_probe(const LogField& field, std::complex<double> target, std::complex<double> direction,
                             const ProbeOptions& opts) {
  require(opts.s_start > opts.s_end && opts.s_end > 0 && opts.samples >= 3 && opts.substeps >= 1,
          Errc::invalid_argument, "invalid probe schedule");
  require(std::abs(direction) > 0, Errc::invalid_argument, "probe direction must be nonzero");
  const std::complex<double> unit = direction / std::abs(direction);
  const C128 t = to128(target);
  const C128 d = to128(unit);

  ProbeReport rep;
  const double ratio = std::pow(opts.s_end / opts.s_start, 1.0 / (opts.samples - 1));
  for (int i = 0; i < opts.samples; ++i) {
    const double s = opts.s_start * std::pow(ratio, i);
    rep.s.push_back(s);
    rep.log_density.push_back(static_cast<double>(field(t + d * real128(s))));
  }
  rep.partial_length = partial_lengths(field, t, d, rep.s, opts.substeps);
  const auto refined = partial_lengths(field, t, d, rep.s, 2 * opts.substeps);
  rep.monotone = true;
  for (std::size_t i = 1; i < rep.s.size(); ++i) {
    rep.monotone = rep.monotone && rep.partial_length[i] > rep.partial_length[i - 1];
    rep.refinement_change =
        std::max(rep.refinement_change, std::abs(refined[i] - rep.partial_length[i]) / std::abs(refined[i]));
  }

  // Least squares slope over the innermost third.
  const std::size_t first = rep.s.size() - rep.s.size() / 3;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double n = 0;
  for (std::size_t i = first; i < rep.s.size(); ++i) {
    const double x = std::log(rep.s[i]);
    const double y = rep.log_density[i];
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    n += 1;
  }
  rep.fitted_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return rep;
}

ProbeReport divergence_probe(const MetricSpec& spec, const DivisorEntry& entry, std::size_t root,
                             std::complex<double> direction, const ProbeOptions& opts) {
  require(root < entry.roots.size(), Errc::invalid_argument, "divisor entry has no such root");
  ProbeReport rep = divergence_probe(log_field(spec), entry.roots[root], direction, opts);
  rep.exact_order = entry.order;
  return rep;
}

SchwarzReport schwarz_monitor(const CurveRep& curve, const HyperplaneSet& hs, const NochkaWeights& w,
                              const std::vector<Multiplicity>& m, const ExponentPack& pack, double R, int grid) {
  require(!is_degenerate(curve), Errc::degenerate, "Schwarz monitor needs a non-degenerate curve");
  require(R > 0 && grid >= 2, Errc::invalid_argument, "invalid Schwarz monitor grid");
  const int k = curve.k();
  const std::size_t q = hs.size();
  require(w.omega.size() == q && m.size() == q, Errc::invalid_argument, "weights, profile and hyperplanes differ in size");
  const WronskianLadder lad(curve);

  std::vector<NumericPoly<real128>> comps;
  for (const auto& f : curve.components) comps.emplace_back(f);
  const NumericPoly<real128> top(lad.top());
  struct Contracted {
    std::size_t j;
    std::vector<NumericPoly<real128>> parts;
  };
  std::vector<Contracted> contracted_norms;
  std::vector<NumericPoly<real128>> pairings;
  std::vector<real128> a;
  std::vector<real128> log_norms;
  for (std::size_t j = 0; j < q; ++j) {
    pairings.emplace_back(pairing(curve, hs[j]));
    log_norms.push_back(log_norm(hs[j]));
    Rational factor = m[j].is_infinite() ? Rational(1) : Rational(1) - Rational(k, m[j].value());
    a.push_back(to_real<real128>(w.omega[j] * factor));
    for (int p = 1; p < k; ++p) {
      Contracted c{j, {}};
      for_each_subset(k + 1, p, [&](const IndexSet& I) {
        c.parts.emplace_back(contracted(lad, hs[j], p, I));
        return true;
      });
      contracted_norms.push_back(std::move(c));
    }
  }
  const real128 eps = to_real<real128>(pack.epsilon);
  const real128 psi_weight = to_real<real128>(pack.epsilon / Rational(static_cast<long>(q)));
  const real128 curve_power = to_real<real128>(pack.gamma - pack.epsilon * pack.st.sigma[static_cast<std::size_t>(k + 1)]);
  const real128 root = to_real<real128>(pack.st.sigma[static_cast<std::size_t>(k)] + pack.epsilon * pack.st.tau_k);

  auto log_stat = [&](const C128& z) -> std::optional<real128> {
    using boost::multiprecision::log;
    real128 f2 = 0;
    for (const auto& c : comps) f2 += norm2(c(z));
    real128 s = curve_power * log(f2) / 2;
    const real128 t2 = norm2(top(z));
    if (t2 == 0) return std::nullopt;
    s += (1 + eps) * log(t2) / 2;
    for (std::size_t j = 0; j < q; ++j) {
      const real128 g2 = norm2(pairings[j](z));
      if (g2 == 0) return std::nullopt;
      const real128 lg = log(g2) / 2 - log_norms[j];
      s += psi_weight * lg - a[j] * lg;
    }
    for (const auto& c : contracted_norms) {
      real128 n2 = 0;
      for (const auto& part : c.parts) n2 += norm2(part(z));
      if (n2 == 0) return std::nullopt;
      s += psi_weight * (log(n2) / 2 - log_norms[c.j]);
    }
    const real128 r2 = norm2(z);
    const real128 R128(R);
    return s / root - log(2 * R128 / (R128 * R128 - r2));
  };

  auto sup_on = [&](int n, std::size_t& count) {
    std::optional<real128> best;
    for (int i = 0; i < n; ++i) {
      const double r = R * (i + 0.5) / n;
      for (int j = 0; j < 2 * n; ++j) {
        const double t = 2 * std::numbers::pi * (j + 0.25) / (2 * n);
        const auto v = log_stat(to128(std::polar(r, t)));
        ++count;
        if (v && (!best || *v > *best)) best = v;
      }
    }
    require(best.has_value(), Errc::internal, "Schwarz monitor found no regular grid point");
    return static_cast<double>(boost::multiprecision::exp(*best));
  };

  SchwarzReport rep;
  rep.sup_coarse = sup_on(grid, rep.points);
  rep.sup_fine = sup_on(2 * grid, rep.points);
  rep.refinement_ratio = rep.sup_fine / rep.sup_coarse;
  return rep;
}

}  // namespace gaussvd
