#include "gaussvd/minsurf.hpp"

#include <algorithm>

namespace gaussvd {

namespace {

// Divides out the component gcd and the common power of z.
std::vector<LaurentPoly> normalize_components(std::vector<LaurentPoly> comps) {
  LaurentPoly g;
  for (const auto& f : comps) g = gcd(g, f);
  bool any = false;
  int low = 0;
  for (auto& f : comps) {
    if (f.is_zero()) continue;
    if (!g.is_constant()) f = exact_quotient(f, g);
    low = any ? std::min(low, f.order()) : f.order();
    any = true;
  }
  for (auto& f : comps) f = f.shifted(-low);
  return comps;
}

}  // namespace

SurfaceData SurfaceData::from_components(std::vector<LaurentPoly> components) {
  SurfaceData s;
  s.m = static_cast<int>(components.size());
  s.G = CurveRep(std::move(components));
  s.source = SurfaceSource::components;
  return s;
}

SurfaceData from_weierstrass(const LaurentPoly& f, const LaurentPoly& g) {
  require(!f.is_zero(), Errc::invalid_argument, "Weierstrass data needs f != 0");
  const GaussianRational half(frac(1, 2));
  const LaurentPoly g2 = g * g;
  std::vector<LaurentPoly> comps{
      half * (f * (LaurentPoly(1) - g2)),
      GaussianRational::i() * half * (f * (LaurentPoly(1) + g2)),
      f * g,
  };
  SurfaceData s;
  s.m = 3;
  s.G = CurveRep(normalize_components(std::move(comps)));
  s.source = SurfaceSource::weierstrass;
  s.weierstrass = std::make_pair(f, g);
  require(check_isotropy(s), Errc::internal, "Weierstrass data produced a non-isotropic G");
  return s;
}

AnnularEnd::AnnularEnd(Rational radius, std::optional<Rational> inner) : r(std::move(radius)), t(std::move(inner)) {
  require(r > 1, Errc::precondition, "annulus radius must exceed 1");
  if (t) {
    require(*t > Rational(1) / r && *t < r, Errc::precondition, "sub-annulus parameter t must lie in (1/r, r)");
  }
}

Annulus AnnularEnd::working() const {
  if (t) return {*t, r};
  return Annulus::symmetric(r);
}

Rational AnnularEnd::inversion_constant() const { return t ? *t * r : Rational(1); }

bool check_isotropy(const SurfaceData& s) {
  LaurentPoly sum;
  for (const auto& g : s.G.components) sum += g * g;
  return sum.is_zero();
}

bool check_immersion(const SurfaceData& s, const AnnularEnd& a, const RootOptions& opts) {
  LaurentPoly g;
  for (const auto& f : s.G.components) g = gcd(g, f);
  if (g.is_constant()) return true;
  // The closed annulus: boundary roots count as common zeros.
  return roots_in_annulus(g, a.working(), opts).empty();
}

int nondegeneracy_rank(const SurfaceData& s) {
  bool nonzero = false;
  for (const auto& f : s.G.components) nonzero = nonzero || !f.is_zero();
  require(nonzero, Errc::invalid_argument, "zero map has no rank");
  return static_cast<int>(exact_rank(coefficient_matrix(s.G.components))) - 1;
}

Projection project_to_pk(const SurfaceData& s, const HyperplaneSet& hs) {
  const int k = nondegeneracy_rank(s);
  require(k >= 1, Errc::precondition, "the Gauss map must be nonconstant in projective space (k >= 1), got k=" +
                                          std::to_string(k));
  require(hs.dim() == s.G.components.size(), Errc::invalid_argument,
          "hyperplanes have " + std::to_string(hs.dim()) + " coefficients for m=" +
              std::to_string(s.G.components.size()));
  const MatrixQi coeffs = coefficient_matrix(s.G.components);
  const auto rows = independent_rows(coeffs);
  require(static_cast<int>(rows.size()) == k + 1, Errc::internal, "rank changed during projection");

  Projection out;
  MatrixQi basis_rows(static_cast<Eigen::Index>(rows.size()), coeffs.cols());
  std::vector<LaurentPoly> comps;
  for (std::size_t b = 0; b < rows.size(); ++b) {
    basis_rows.row(static_cast<Eigen::Index>(b)) = coeffs.row(rows[b]);
    comps.push_back(s.G.components[static_cast<std::size_t>(rows[b])]);
    out.basis.push_back(static_cast<int>(rows[b]));
  }
  out.curve = CurveRep(std::move(comps), s.G.variable);

  // g_i = sum_b T(i, b) f_b, so c'_b = sum_i c_i conj(T(i, b)).
  const std::size_t m = s.G.components.size();
  std::vector<VectorQi> T;
  for (std::size_t i = 0; i < m; ++i) {
    T.push_back(express_in_rows(basis_rows, coeffs.row(static_cast<Eigen::Index>(i)).transpose()));
  }
  std::vector<Hyperplane> planes;
  for (const auto& H : hs.planes()) {
    Hyperplane P{std::vector<GaussianRational>(rows.size()), H.label};
    for (std::size_t i = 0; i < m; ++i) {
      if (H.coeffs[i].is_zero()) continue;
      for (std::size_t b = 0; b < rows.size(); ++b) P.coeffs[b] += H.coeffs[i] * T[i](static_cast<Eigen::Index>(b)).conj();
    }
    bool nonzero = false;
    for (const auto& c : P.coeffs) nonzero = nonzero || !c.is_zero();
    require(nonzero, Errc::degenerate, "the curve lies in hyperplane " + H.label);
    planes.push_back(std::move(P));
  }
  out.hyperplanes = HyperplaneSet(std::move(planes));
  for (std::size_t j = 0; j < hs.size(); ++j) {
    require(pairing(out.curve, out.hyperplanes[j]) == pairing(s.G, hs[j]), Errc::internal,
            "projection changed the pairing with " + hs[j].label);
  }
  return out;
}

const char* mode_name(ProfileMode mode) { return mode == ProfileMode::min_order ? "min-order" : "liminf"; }

ProfileMode parse_mode(const std::string& text) {
  if (text == "min-order") return ProfileMode::min_order;
  if (text == "liminf") return ProfileMode::liminf;
  throw Error(Errc::invalid_argument, "unknown mode '" + text + "' (expected min-order or liminf)");
}

RamificationProfile ramification_profile(const CurveRep& G, const HyperplaneSet& hs, const AnnularEnd& a,
                                         ProfileMode mode, const RootOptions& opts) {
  RamificationProfile out;
  out.mode = mode;
  for (const auto& H : hs.planes()) {
    LaurentPoly p = pairing(G, H);
    require(!p.is_zero(), Errc::degenerate, "the curve lies in hyperplane " + H.label);
    HyperplaneProfile e;
    e.census = roots_in_annulus(p, a.working(), opts);
    e.min_order = Multiplicity::infinite();
    for (const auto& info : e.census) {
      if (info.location != RootLocation::inside) continue;
      if (e.min_order.is_infinite() || info.multiplicity < e.min_order.value()) {
        e.min_order = Multiplicity::finite(info.multiplicity);
      }
    }
    e.liminf = Multiplicity::infinite();
    out.entries.push_back(std::move(e));
  }
  return out;
}

RamificationProfile ramification_profile(const SurfaceData& s, const HyperplaneSet& hs, const AnnularEnd& a,
                                         ProfileMode mode, const RootOptions& opts) {
  return ramification_profile(s.G, hs, a, mode, opts);
}

double induced_metric_eval(const SurfaceData& s, std::complex<double> z, unsigned precision_bits) {
  double sum = 0;
  for (const auto& g : s.G.components) sum += std::norm(eval(g, z, precision_bits));
  return 2 * sum;
}

}  // namespace gaussvd
