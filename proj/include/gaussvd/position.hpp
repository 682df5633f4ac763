#ifndef GAUSSVD_POSITION_HPP
#define GAUSSVD_POSITION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gaussvd/linalg.hpp"

namespace gaussvd {

/// Hyperplane {w : sum conj(c_i) w_i = 0}. Coefficients are stored exactly and
/// unnormalized; scaling never changes position predicates or zero orders.
struct Hyperplane {
  std::vector<GaussianRational> coeffs;
  std::string label;

  std::size_t dim() const { return coeffs.size(); }
  double norm() const;
};

using IndexSet = std::vector<int>;

class HyperplaneSet {
 public:
  HyperplaneSet() = default;
  explicit HyperplaneSet(std::vector<Hyperplane> hyperplanes);

  std::size_t size() const { return planes_.size(); }
  /// Length m of every coefficient vector (ambient projective dimension m-1).
  std::size_t dim() const { return planes_.empty() ? 0 : planes_.front().dim(); }
  const Hyperplane& operator[](std::size_t j) const { return planes_.at(j); }
  const std::vector<Hyperplane>& planes() const { return planes_; }

  HyperplaneSet subset(const IndexSet& keep) const;
  /// Rows are the coefficient vectors A_j.
  MatrixQi matrix(const IndexSet& rows) const;

 private:
  std::vector<Hyperplane> planes_;
};

/// Default bound on the number of subsets a predicate may enumerate.
inline constexpr std::uint64_t kSubsetCap = 1'000'000;

std::uint64_t binomial(int n, int k);

/// Calls fn for each size-`size` subset of {0..n-1} in lexicographic order;
/// stops early when fn returns false.
void for_each_subset(int n, int size, const std::function<bool(const IndexSet&)>& fn);

/// d(R): rank over Q(i) of {A_j : j in R}.
int span_dimension(const HyperplaneSet& hs, const IndexSet& subset);

/// Every (N+1)-subset spans dimension k+1.
bool is_n_subgeneral(const HyperplaneSet& hs, int N, int k, std::uint64_t cap = kSubsetCap);
bool is_general_position(const HyperplaneSet& hs, int k, std::uint64_t cap = kSubsetCap);
/// Least N >= k with is_n_subgeneral; requires the full set to span k+1.
int minimal_subgeneral_n(const HyperplaneSet& hs, int k, std::uint64_t cap = kSubsetCap);

}  // namespace gaussvd

#endif  // GAUSSVD_POSITION_HPP
