#ifndef GAUSSVD_MINSURF_HPP
#define GAUSSVD_MINSURF_HPP

#include <optional>

#include "gaussvd/numeric.hpp"
#include "gaussvd/wronskian.hpp"

namespace gaussvd {

enum class SurfaceSource { components, weierstrass };

/// Derivative data G = dx/dz of a minimal immersion into R^m.
struct SurfaceData {
  CurveRep G;
  int m = 0;
  SurfaceSource source = SurfaceSource::components;
  std::optional<std::pair<LaurentPoly, LaurentPoly>> weierstrass;

  static SurfaceData from_components(std::vector<LaurentPoly> components);
};

/// G = (f(1-g^2)/2, i f(1+g^2)/2, f g) with the component gcd and the common
/// monomial factor divided out.
SurfaceData from_weierstrass(const LaurentPoly& f, const LaurentPoly& g);

/// Annular end {1/r < |z| < r}, optionally restricted to the sub-annular end
/// {t < |z| < r}.
struct AnnularEnd {
  Rational r;
  std::optional<Rational> t;

  AnnularEnd() = default;
  explicit AnnularEnd(Rational radius, std::optional<Rational> inner = std::nullopt);

  /// The annulus every zero census runs on.
  Annulus working() const;
  /// c with z -> c/z swapping the two boundary circles of working().
  Rational inversion_constant() const;
};

bool check_isotropy(const SurfaceData& s);
bool check_immersion(const SurfaceData& s, const AnnularEnd& a, const RootOptions& opts = {});
/// Exact rank of the component span minus one.
int nondegeneracy_rank(const SurfaceData& s);

struct Projection {
  CurveRep curve;
  HyperplaneSet hyperplanes;
  /// Source component indices kept as the new basis.
  std::vector<int> basis;
};

/// Rewrites G in a basis of its span (k+1 of its own components) and transforms
/// the hyperplanes so every pairing is preserved exactly.
Projection project_to_pk(const SurfaceData& s, const HyperplaneSet& hs);

enum class ProfileMode { min_order, liminf };
const char* mode_name(ProfileMode mode);
ProfileMode parse_mode(const std::string& text);

struct HyperplaneProfile {
  Multiplicity min_order;
  /// Finitely many zeros on a polynomial end, so always infinite.
  Multiplicity liminf;
  std::vector<RootInfo> census;
  bool finitely_many = true;

  Multiplicity value(ProfileMode mode) const { return mode == ProfileMode::min_order ? min_order : liminf; }
};

struct RamificationProfile {
  std::vector<HyperplaneProfile> entries;
  ProfileMode mode = ProfileMode::min_order;

  Multiplicity m(std::size_t j) const { return entries.at(j).value(mode); }
  std::size_t size() const { return entries.size(); }
};

RamificationProfile ramification_profile(const CurveRep& G, const HyperplaneSet& hs, const AnnularEnd& a,
                                         ProfileMode mode = ProfileMode::min_order, const RootOptions& opts = {});
RamificationProfile ramification_profile(const SurfaceData& s, const HyperplaneSet& hs, const AnnularEnd& a,
                                         ProfileMode mode = ProfileMode::min_order, const RootOptions& opts = {});

/// 2 sum |g_i(z)|^2.
double induced_metric_eval(const SurfaceData& s, std::complex<double> z, unsigned precision_bits = 128);

}  // namespace gaussvd

#endif  // GAUSSVD_MINSURF_HPP
