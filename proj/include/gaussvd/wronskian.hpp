#ifndef GAUSSVD_WRONSKIAN_HPP
#define GAUSSVD_WRONSKIAN_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "gaussvd/position.hpp"

namespace gaussvd {

/// Reduced representation (f_0 : ... : f_k) of a curve into P^k.
struct CurveRep {
  std::vector<LaurentPoly> components;
  std::string variable = "z";

  CurveRep() = default;
  explicit CurveRep(std::vector<LaurentPoly> comps, std::string var = "z");

  int k() const { return static_cast<int>(components.size()) - 1; }
  /// Gcd of the components is a unit.
  bool is_reduced() const;
  /// Divides out the gcd of the components.
  CurveRep reduced() const;
};

/// det[f_i^{(r)}], rows in the given order.
LaurentPoly wronskian(const std::vector<LaurentPoly>& fs);

/// All minors W(f_{i_0},...,f_{i_p}) for i_0 < ... < i_p and p = 0..k.
class WronskianLadder {
 public:
  explicit WronskianLadder(const CurveRep& c);

  int k() const { return k_; }
  const CurveRep& curve() const { return curve_; }
  /// Minor for a strictly increasing index set.
  const LaurentPoly& minor(const IndexSet& indices) const;
  /// All minors at level p (size p+1), in lexicographic order of index sets.
  const std::map<IndexSet, LaurentPoly>& level(int p) const;
  /// F_k, the full Wronskian.
  const LaurentPoly& top() const;

 private:
  CurveRep curve_;
  int k_;
  std::vector<std::map<IndexSet, LaurentPoly>> levels_;
};

WronskianLadder ladder(const CurveRep& c);

/// F(H) = sum conj(c_l) f_l.
LaurentPoly pairing(const CurveRep& c, const Hyperplane& H);

/// sum_{l not in I} conj(c_l) W(f_l, f_{i_1}, ..., f_{i_p}).
LaurentPoly contracted(const CurveRep& c, const Hyperplane& H, int p, const IndexSet& I);
LaurentPoly contracted(const WronskianLadder& lad, const Hyperplane& H, int p, const IndexSet& I);

struct PsiEntry {
  /// Empty for p = 0.
  IndexSet indices;
  LaurentPoly psi;
};

struct PsiSelection {
  /// entries[j][p] for p = 0..k.
  std::vector<std::vector<PsiEntry>> entries;

  const PsiEntry& at(std::size_t j, int p) const { return entries.at(j).at(static_cast<std::size_t>(p)); }
  std::size_t size() const { return entries.size(); }
};

/// Lexicographically smallest index set with a nonzero contracted Wronskian,
/// per hyperplane and level.
PsiSelection select_psi(const CurveRep& c, const HyperplaneSet& hs);

/// phi_p(H) = |F_p(H)|^2 / |F_p|^2 at z, with H normalized in floating point.
double contact_eval(const CurveRep& c, const Hyperplane& H, int p, std::complex<double> z,
                    unsigned precision_bits = 128);

/// Top Wronskian vanishes identically; cross-checked against the coefficient rank.
bool is_degenerate(const CurveRep& c);

}  // namespace gaussvd

#endif  // GAUSSVD_WRONSKIAN_HPP
