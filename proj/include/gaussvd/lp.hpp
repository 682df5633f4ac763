#ifndef GAUSSVD_LP_HPP
#define GAUSSVD_LP_HPP

#include <vector>

#include "gaussvd/rational.hpp"

namespace gaussvd {

enum class Relation { le, ge, eq };

struct LinearConstraint {
  std::vector<Rational> a;
  Relation rel = Relation::le;
  Rational b;
};

/// minimize c.x subject to the constraints and x >= 0.
struct LinearProgram {
  int num_vars = 0;
  std::vector<LinearConstraint> constraints;
  std::vector<Rational> objective;

  void add(std::vector<Rational> a, Relation rel, Rational b);
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> x;
  Rational value;
  int pivots = 0;
};

/// Two-phase dense simplex over Q with Bland's rule, so it always terminates
/// and is deterministic.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace gaussvd

#endif  // GAUSSVD_LP_HPP
