#include "gaussvd/position.hpp"

#include <cmath>

namespace gaussvd {

double Hyperplane::norm() const {
  Rational s = 0;
  for (const auto& c : coeffs) s += c.norm2();
  return std::sqrt(to_double(s));
}

HyperplaneSet::HyperplaneSet(std::vector<Hyperplane> hyperplanes) : planes_(std::move(hyperplanes)) {
  require(!planes_.empty(), Errc::invalid_argument, "hyperplane set is empty");
  const std::size_t m = planes_.front().dim();
  require(m >= 1, Errc::invalid_argument, "hyperplane with no coefficients");
  for (std::size_t j = 0; j < planes_.size(); ++j) {
    auto& h = planes_[j];
    require(h.dim() == m, Errc::invalid_argument, "hyperplane " + std::to_string(j + 1) + " has " +
                                                      std::to_string(h.dim()) + " coefficients, expected " +
                                                      std::to_string(m));
    bool nonzero = false;
    for (const auto& c : h.coeffs) nonzero = nonzero || !c.is_zero();
    require(nonzero, Errc::invalid_argument, "hyperplane " + std::to_string(j + 1) + " has all coefficients zero");
    if (h.label.empty()) h.label = "H" + std::to_string(j + 1);
  }
}

HyperplaneSet HyperplaneSet::subset(const IndexSet& keep) const {
  std::vector<Hyperplane> out;
  for (int j : keep) out.push_back(planes_.at(static_cast<std::size_t>(j)));
  return HyperplaneSet(std::move(out));
}

MatrixQi HyperplaneSet::matrix(const IndexSet& rows) const {
  MatrixQi m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(dim()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& h = planes_.at(static_cast<std::size_t>(rows[i]));
    for (std::size_t c = 0; c < h.dim(); ++c) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = h.coeffs[c];
  }
  return m;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return out;
}

void for_each_subset(int n, int size, const std::function<bool(const IndexSet&)>& fn) {
  if (size < 0 || size > n) return;
  IndexSet idx(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!fn(idx)) return;
    int i = size - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

int span_dimension(const HyperplaneSet& hs, const IndexSet& subset) {
  require(!subset.empty(), Errc::invalid_argument, "span dimension of an empty subset");
  for (int j : subset) {
    require(j >= 0 && static_cast<std::size_t>(j) < hs.size(), Errc::invalid_argument,
            "hyperplane index " + std::to_string(j) + " out of range");
  }
  return static_cast<int>(exact_rank(hs.matrix(subset)));
}

bool is_n_subgeneral(const HyperplaneSet& hs, int N, int k, std::uint64_t cap) {
  require(k >= 1 && N >= k, Errc::precondition, "N-subgeneral position needs N >= k >= 1");
  const int q = static_cast<int>(hs.size());
  require(q >= N + 1, Errc::precondition,
          "N-subgeneral position needs q >= N+1 (q=" + std::to_string(q) + ", N=" + std::to_string(N) + ")");
  require(binomial(q, N + 1) <= cap, Errc::precondition, "subset enumeration exceeds the configured cap");
  bool ok = true;
  for_each_subset(q, N + 1, [&](const IndexSet& r) {
    ok = span_dimension(hs, r) == k + 1;
    return ok;
  });
  return ok;
}

bool is_general_position(const HyperplaneSet& hs, int k, std::uint64_t cap) {
  return is_n_subgeneral(hs, k, k, cap);
}

int minimal_subgeneral_n(const HyperplaneSet& hs, int k, std::uint64_t cap) {
  require(k >= 1, Errc::precondition, "minimal_subgeneral_n needs k >= 1");
  IndexSet all(hs.size());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = static_cast<int>(j);
  require(span_dimension(hs, all) == k + 1, Errc::precondition,
          "hyperplanes span a space of dimension " + std::to_string(span_dimension(hs, all)) +
              ", expected k+1=" + std::to_string(k + 1) + "; reduce k");
  const int q = static_cast<int>(hs.size());
  for (int N = k; N < q; ++N) {
    if (binomial(q, N + 1) > cap) continue;
    if (is_n_subgeneral(hs, N, k, cap)) return N;
  }
  return q - 1;
}

}  // namespace gaussvd
