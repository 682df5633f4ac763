#include "gaussvd/verifier.hpp"

#include <algorithm>

namespace gaussvd {

std::vector<Multiplicity> multiplicities(const RamificationProfile& profile) {
  std::vector<Multiplicity> out;
  for (std::size_t j = 0; j < profile.size(); ++j) out.push_back(profile.m(j));
  return out;
}

std::vector<int> drop_low_ramification(const std::vector<Multiplicity>& m, int k) {
  std::vector<int> kept;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j].exceeds(k)) kept.push_back(static_cast<int>(j));
  }
  return kept;
}

std::vector<int> drop_low_ramification(const RamificationProfile& profile, int k) {
  return drop_low_ramification(multiplicities(profile), k);
}

Rational main_rhs(int k, int N) { return Rational(k + 1) * (Rational(N) - frac(k, 2)) + Rational(N + 1); }

TheoremReport main_inequality(int k, int N, const std::vector<Multiplicity>& m) {
  require(k >= 1, Errc::precondition, "the main inequality needs k >= 1");
  require(N >= k, Errc::precondition, "the main inequality needs N >= k");
  TheoremReport rep;
  rep.k = k;
  rep.N = N;
  rep.q_total = static_cast<int>(m.size());
  rep.kept = drop_low_ramification(m, k);
  for (int j = 0; j < rep.q_total; ++j) {
    if (std::find(rep.kept.begin(), rep.kept.end(), j) == rep.kept.end()) rep.dropped.push_back(j);
  }
  rep.q_kept = static_cast<int>(rep.kept.size());
  rep.lhs = 0;
  for (int j : rep.kept) {
    const Multiplicity& mj = m[static_cast<std::size_t>(j)];
    rep.lhs += mj.is_infinite() ? Rational(1) : Rational(1) - Rational(k, mj.value());
  }
  rep.lhs.canonicalize();
  rep.rhs = main_rhs(k, N);
  rep.slack = rep.rhs - rep.lhs;
  rep.holds = rep.lhs <= rep.rhs;
  return rep;
}

TheoremReport main_inequality(int k, int N, const RamificationProfile& profile) {
  TheoremReport rep = main_inequality(k, N, multiplicities(profile));
  rep.mode = profile.mode;
  return rep;
}

TheoremReport corollary1(int m, int N, const std::vector<Multiplicity>& mult, bool general_position) {
  require(m >= 2, Errc::precondition, "corollary 1 needs m >= 2");
  require(N >= m - 1, Errc::precondition, "corollary 1 needs N >= m-1");
  return main_inequality(m - 1, general_position ? m - 1 : N, mult);
}

int corollary2_bound(int m) {
  require(m >= 3, Errc::precondition, "corollary 2 needs m >= 3");
  const int finite_count = m * (m + 1) / 2;
  int best = 0;
  for (int mq = 1; mq <= 4 * m; ++mq) {
    // The last hyperplane enters with its raw term, without dropping.
    Rational lhs = Rational(finite_count) + Rational(1) - frac(m - 1, mq);
    if (lhs <= main_rhs(m - 1, m - 1)) best = mq;
  }
  return best;
}

Rational ell(int k, int N, const std::vector<Multiplicity>& kept) {
  Rational inv = 0;
  for (const auto& mj : kept) {
    if (!mj.is_infinite()) inv += Rational(1, mj.value());
  }
  Rational out = frac(k * k, 2) - Rational(k) * (inv + Rational(N) - frac(1, 2));
  out.canonicalize();
  return out;
}

EllReport ell_reduction(int k, int N, int m, const std::vector<Multiplicity>& kept) {
  require(k >= 1 && k <= m - 1 && m - 1 <= N, Errc::precondition, "ell reduction needs 1 <= k <= m-1 <= N");
  EllReport rep;
  rep.ell = ell(k, N, kept);
  rep.bound = Rational(2 * N - static_cast<int>(kept.size()) + 1);
  rep.inequality_holds = rep.ell <= rep.bound;
  rep.monotone = true;
  for (int j = 1; j <= m - 2; ++j) rep.monotone = rep.monotone && ell(j + 1, N, kept) <= ell(j, N, kept);
  return rep;
}

}  // namespace gaussvd
