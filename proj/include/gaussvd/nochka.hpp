#ifndef GAUSSVD_NOCHKA_HPP
#define GAUSSVD_NOCHKA_HPP

#include <optional>
#include <string>
#include <vector>

#include "gaussvd/position.hpp"

namespace gaussvd {

struct NochkaProvenance {
  std::size_t subsets_enumerated = 0;
  /// Subset constraints with d(R) < #R; the others are implied by w <= theta <= 1.
  std::size_t subset_constraints = 0;
  std::size_t total_constraints = 0;
  int lp_solves = 0;
  int pivots = 0;
  std::string objective;
  /// False only when no strictly positive point exists at the least theta of the
  /// closed program and an interior theta had to be used instead.
  bool theta_minimal = true;
};

struct NochkaWeights {
  std::vector<Rational> omega;
  Rational theta;
  NochkaProvenance provenance;
};

/// Exact feasible point of the weight axioms, canonicalized by minimizing theta
/// and then minimizing omega lexicographically.
NochkaWeights compute_weights(const HyperplaneSet& hs, int N, int k, std::uint64_t cap = kSubsetCap);

/// Lower and upper ends of the admissible theta window.
std::pair<Rational, Rational> theta_window(int N, int k);

struct AxiomViolation {
  int axiom = 0;
  std::string message;
  IndexSet witness;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  bool violates(int axiom) const;
};

AxiomReport verify_axioms(const NochkaWeights& w, const HyperplaneSet& hs, int N, int k,
                          std::uint64_t cap = kSubsetCap);

/// Feasibility of the closed program with theta bounded above by `theta_max`.
bool weights_feasible_with_theta_at_most(const HyperplaneSet& hs, int N, int k, const Rational& theta_max,
                                         std::uint64_t cap = kSubsetCap);

struct ProductCheck {
  bool holds = false;
  std::optional<IndexSet> witness;
};

/// Searches R' in R with #R' = d(R) = d(R') and prod_{R} E^w <= prod_{R'} E.
/// E is indexed by hyperplane (length q) or aligned with R (length #R).
ProductCheck product_inequality_check(const NochkaWeights& w, const HyperplaneSet& hs, const IndexSet& R,
                                      const std::vector<Rational>& E);

}  // namespace gaussvd

#endif  // GAUSSVD_NOCHKA_HPP
