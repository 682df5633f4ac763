#ifndef GAUSSVD_VERIFIER_HPP
#define GAUSSVD_VERIFIER_HPP

#include <string>
#include <vector>

#include "gaussvd/minsurf.hpp"

namespace gaussvd {

struct TheoremReport {
  int k = 0;
  int N = 0;
  int q_total = 0;
  int q_kept = 0;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  Rational slack;
  std::vector<int> kept;
  std::vector<int> dropped;
  ProfileMode mode = ProfileMode::min_order;
};

std::vector<Multiplicity> multiplicities(const RamificationProfile& profile);

/// Indices j with m_j > k; infinite multiplicities are kept.
std::vector<int> drop_low_ramification(const std::vector<Multiplicity>& m, int k);
std::vector<int> drop_low_ramification(const RamificationProfile& profile, int k);

/// (k+1)(N - k/2) + (N+1).
Rational main_rhs(int k, int N);

/// sum over kept j of (1 - k/m_j), with 1 - k/inf = 1, against main_rhs.
TheoremReport main_inequality(int k, int N, const std::vector<Multiplicity>& m);
TheoremReport main_inequality(int k, int N, const RamificationProfile& profile);

/// Main inequality with k = m-1; general position forces N = m-1.
TheoremReport corollary1(int m, int N, const std::vector<Multiplicity>& mult, bool general_position);

/// Largest ramification m_q compatible with m(m+1)/2 further hyperplanes met
/// finitely often, found by scanning the inequality.
int corollary2_bound(int m);

struct EllReport {
  Rational ell;
  /// 2N - q + 1.
  Rational bound;
  bool inequality_holds = false;
  /// ell(j+1) <= ell(j) for all integers j in [1, m-2].
  bool monotone = false;
};

/// ell(k) = k^2/2 - k (sum 1/m_j + N - 1/2) over the kept multiplicities.
Rational ell(int k, int N, const std::vector<Multiplicity>& kept);
EllReport ell_reduction(int k, int N, int m, const std::vector<Multiplicity>& kept);

}  // namespace gaussvd

#endif  // GAUSSVD_VERIFIER_HPP
