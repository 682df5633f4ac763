#include <doctest.h>

#include "support.hpp"

using namespace gaussvd;
using namespace gaussvd::testing;

namespace {

HyperplaneSet paired_points() {
  return planes({{gr(1), gr(0)}, {gr(1), gr(0)}, {gr(0), gr(1)}, {gr(0), gr(1)}, {gr(1), gr(1)}, {gr(1), gr(1)}});
}

// Brute-force oracle: rank of every (N+1)-subset computed by exact_rank.
bool subgeneral_oracle(const HyperplaneSet& hs, int N, int k) {
  const int q = static_cast<int>(hs.size());
  const int size = N + 1;
  bool ok = true;
  for_each_subset(q, size, [&](const IndexSet& R) {
    if (exact_rank(hs.matrix(R)) != k + 1) ok = false;
    return ok;
  });
  return ok;
}

}  // namespace

TEST_CASE("span dimension") {
  auto hs = planes({{gr(1), gr(0), gr(0)}, {gr(0), gr(1), gr(0)}});
  CHECK(span_dimension(hs, {0, 1}) == 2);
  auto dup = planes({{gr(1), gr(2)}, {gr(1), gr(2)}});
  CHECK(span_dimension(dup, {0, 1}) == 1);
  auto three = planes({{gr(1), gr(0)}, {gr(0), gr(1)}, {gr(1), gr(1)}});
  CHECK(span_dimension(three, {0, 1, 2}) == 2);
}

TEST_CASE("subgeneral position") {
  auto hs = paired_points();
  CHECK(is_n_subgeneral(hs, 2, 1));
  CHECK_FALSE(is_n_subgeneral(hs, 1, 1));
  CHECK(minimal_subgeneral_n(hs, 1) == 2);

  auto triple = planes({{gr(1), gr(0)}, {gr(1), gr(0)}, {gr(1), gr(0)}, {gr(0), gr(1)}});
  CHECK(minimal_subgeneral_n(triple, 1) == 3);
}

TEST_CASE("general position") {
  auto coords = planes({{gr(1), gr(0), gr(0)}, {gr(0), gr(1), gr(0)}, {gr(0), gr(0), gr(1)}, {gr(1), gr(1), gr(1)}});
  CHECK(is_general_position(coords, 2));
  CHECK(minimal_subgeneral_n(coords, 2) == 2);

  auto with_dup = planes({{gr(1), gr(0), gr(0)}, {gr(0), gr(1), gr(0)}, {gr(0), gr(0), gr(1)}, {gr(0), gr(1), gr(0)}});
  CHECK_FALSE(is_general_position(with_dup, 2));

  auto generic = planes({{gr(1), gr(2), gr(3)}, {gr(-1), gr(4), gr(1)}, {gr(2), gr(-3), gr(5)}, {gr(7), gr(1), gr(-2)}});
  bool oracle = true;
  for_each_subset(4, 3, [&](const IndexSet& R) {
    oracle = oracle && exact_rank(generic.matrix(R)) == 3;
    return oracle;
  });
  CHECK(oracle);
  CHECK(is_general_position(generic, 2));
}

TEST_CASE("subgeneral check agrees with the rank oracle on random sets") {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = rng.uniform(1, 3);
    const int q = rng.uniform(k + 2, k + 5);
    std::vector<Hyperplane> hs;
    for (int j = 0; j < q; ++j) {
      if (j > 0 && rng.uniform(0, 3) == 0) {
        hs.push_back(hs[static_cast<std::size_t>(rng.uniform(0, j - 1))]);
        continue;
      }
      std::vector<GaussianRational> c;
      for (int i = 0; i <= k; ++i) c.push_back(rng.uniform(0, 2) == 0 ? GaussianRational(0) : rng.gaussian(3));
      c[static_cast<std::size_t>(rng.uniform(0, k))] = rng.nonzero_gaussian(3);
      hs.push_back(plane(c));
    }
    HyperplaneSet set(hs);
    if (span_dimension(set, [&] {
          IndexSet all(static_cast<std::size_t>(q));
          for (int i = 0; i < q; ++i) all[static_cast<std::size_t>(i)] = i;
          return all;
        }()) != k + 1) {
      CHECK_THROWS_AS(minimal_subgeneral_n(set, k), Error);
      continue;
    }
    for (int N = k; N < q; ++N) CHECK(is_n_subgeneral(set, N, k) == subgeneral_oracle(set, N, k));
    const int n = minimal_subgeneral_n(set, k);
    CHECK(subgeneral_oracle(set, n, k));
    if (n > k) CHECK_FALSE(subgeneral_oracle(set, n - 1, k));
  }
}

TEST_CASE("hyperplane validation") {
  CHECK_THROWS_AS(planes({{gr(1), gr(0)}, {gr(0), gr(1), gr(0)}}), Error);
  CHECK_THROWS_AS(planes({{gr(0), gr(0)}}), Error);
  auto hs = planes({{gr(1), gr(0)}, {gr(0), gr(1)}});
  CHECK(hs[0].label == "H1");
  CHECK(hs[1].label == "H2");
}
