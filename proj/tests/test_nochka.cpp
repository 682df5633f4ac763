#include <doctest.h>

#include "support.hpp"

using namespace gaussvd;
using namespace gaussvd::testing;

namespace {

HyperplaneSet paired_points() {
  return planes({{gr(1), gr(0)}, {gr(1), gr(0)}, {gr(0), gr(1)}, {gr(0), gr(1)}, {gr(1), gr(1)}, {gr(1), gr(1)}});
}

HyperplaneSet general_p2(int q) {
  // Rows (1, t, t^2) of a Vandermonde matrix are in general position.
  std::vector<std::vector<GaussianRational>> rows;
  for (int t = 0; t < q; ++t) rows.push_back({gr(1), gr(t), gr(t * t)});
  return planes(rows);
}

}  // namespace

TEST_CASE("linear programs over Q") {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {Rational(-1), Rational(-1)};
  lp.add({Rational(1), Rational(2)}, Relation::le, Rational(4));
  lp.add({Rational(3), Rational(1)}, Relation::le, Rational(6));
  auto res = solve_lp(lp);
  REQUIRE(res.status == LpStatus::optimal);
  CHECK(res.x[0] == frac(8, 5));
  CHECK(res.x[1] == frac(6, 5));
  CHECK(res.value == frac(-14, 5));

  LinearProgram infeasible;
  infeasible.num_vars = 1;
  infeasible.objective = {Rational(1)};
  infeasible.add({Rational(1)}, Relation::ge, Rational(2));
  infeasible.add({Rational(1)}, Relation::le, Rational(1));
  CHECK(solve_lp(infeasible).status == LpStatus::infeasible);

  LinearProgram unbounded;
  unbounded.num_vars = 1;
  unbounded.objective = {Rational(-1)};
  unbounded.add({Rational(1)}, Relation::ge, Rational(0));
  CHECK(solve_lp(unbounded).status == LpStatus::unbounded);
}

TEST_CASE("theta window") {
  auto [lo, hi] = theta_window(2, 1);
  CHECK(lo == frac(1, 2));
  CHECK(hi == frac(2, 3));
  auto [glo, ghi] = theta_window(2, 2);
  CHECK(glo == Rational(1));
  CHECK(ghi == Rational(1));
}

TEST_CASE("general position gives unit weights") {
  for (int q = 4; q <= 7; ++q) {
    auto hs = general_p2(q);
    auto w = compute_weights(hs, 2, 2);
    CHECK(w.theta == Rational(1));
    for (const auto& o : w.omega) CHECK(o == Rational(1));
    CHECK(verify_axioms(w, hs, 2, 2).ok());
  }
}

TEST_CASE("paired points give half weights") {
  auto hs = paired_points();
  auto w = compute_weights(hs, 2, 1);
  CHECK(w.theta == frac(1, 2));
  for (const auto& o : w.omega) CHECK(o == frac(1, 2));
  CHECK(w.provenance.theta_minimal);
  CHECK(verify_axioms(w, hs, 2, 1).ok());

  // Eliminating by hand: each duplicated pair has d(R) = 1, so the three pair
  // constraints sum to sum(omega) <= 3, and sum(omega) = 2 + 2 theta forces
  // theta <= 1/2; the window's lower end is also 1/2.
  CHECK_FALSE(weights_feasible_with_theta_at_most(hs, 2, 1, frac(1, 2) - frac(1, 1000)));
  CHECK(weights_feasible_with_theta_at_most(hs, 2, 1, frac(1, 2)));
}

TEST_CASE("hypothesis q > 2N-k+1") {
  auto hs = planes({{gr(1), gr(0)}, {gr(0), gr(1)}, {gr(1), gr(1)}, {gr(1), gr(-1)}});
  try {
    compute_weights(hs, 2, 1);
    FAIL("expected a hypothesis error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::hypothesis);
    CHECK(std::string(e.what()).find("q > 2N-k+1") != std::string::npos);
  }
}

TEST_CASE("axiom violations are reported") {
  auto hs = paired_points();
  auto w = compute_weights(hs, 2, 1);
  auto bumped = w;
  bumped.omega[0] = w.theta + 1;
  CHECK(verify_axioms(bumped, hs, 2, 1).violates(1));

  auto shifted = w;
  shifted.theta = Rational(1);
  auto rep = verify_axioms(shifted, hs, 2, 1);
  REQUIRE(rep.violates(3));
  bool mentions_window = false;
  for (const auto& v : rep.violations) {
    if (v.axiom == 3) mentions_window = v.message.find("1/2") != std::string::npos && v.message.find("2/3") != std::string::npos;
  }
  CHECK(mentions_window);
}

TEST_CASE("product inequality examples") {
  auto hs = paired_points();
  auto w = compute_weights(hs, 2, 1);
  auto ones = product_inequality_check(w, hs, {0, 1, 2}, std::vector<Rational>(6, Rational(1)));
  CHECK(ones.holds);

  // R = {a, a'}, E = (4, 9): LHS = 4^(1/2) 9^(1/2) = 6, R' = {a'} gives 9.
  auto pair = product_inequality_check(w, hs, {0, 1}, {Rational(4), Rational(9)});
  CHECK(pair.holds);
  REQUIRE(pair.witness);
  CHECK(*pair.witness == IndexSet{1});

  auto gp = general_p2(5);
  auto wg = compute_weights(gp, 2, 2);
  auto same = product_inequality_check(wg, gp, {0, 2, 4}, {Rational(2), Rational(5), Rational(7)});
  CHECK(same.holds);
  REQUIRE(same.witness);
  CHECK(*same.witness == IndexSet{0, 2, 4});
}

TEST_CASE("weights on random subgeneral configurations satisfy the axioms") {
  Rng rng(31);
  int tested = 0;
  while (tested < 12) {
    const int k = rng.uniform(1, 2);
    const int q = rng.uniform(k + 3, 8);
    std::vector<Hyperplane> hs;
    for (int j = 0; j < q; ++j) {
      if (j > 0 && rng.uniform(0, 2) == 0) {
        hs.push_back(hs[static_cast<std::size_t>(rng.uniform(0, j - 1))]);
        continue;
      }
      std::vector<GaussianRational> c;
      for (int i = 0; i <= k; ++i) c.push_back(rng.gaussian(3));
      c[0] = rng.nonzero_gaussian(3);
      hs.push_back(plane(c));
    }
    HyperplaneSet set(hs);
    int N = 0;
    try {
      N = minimal_subgeneral_n(set, k);
    } catch (const Error&) {
      continue;
    }
    if (N > 4 || q <= 2 * N - k + 1) continue;
    auto w = compute_weights(set, N, k);
    CHECK(verify_axioms(w, set, N, k).ok());
    ++tested;
  }
}
