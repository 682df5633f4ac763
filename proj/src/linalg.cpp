#include "gaussvd/linalg.hpp"

#include <algorithm>

namespace gaussvd {

RowEchelon rref(MatrixQi m) {
  RowEchelon out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    GaussianRational inv = m(row, col).inverse();
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      GaussianRational factor = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

MatrixQi coefficient_matrix(const std::vector<LaurentPoly>& polys) {
  bool any = false;
  int lo = 0;
  int hi = 0;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    lo = any ? std::min(lo, p.order()) : p.order();
    hi = any ? std::max(hi, p.degree()) : p.degree();
    any = true;
  }
  const Eigen::Index cols = any ? hi - lo + 1 : 0;
  MatrixQi m(static_cast<Eigen::Index>(polys.size()), cols);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = polys[static_cast<std::size_t>(i)].coeff(lo + static_cast<int>(j));
  }
  return m;
}

std::vector<Eigen::Index> independent_rows(const MatrixQi& m) {
  std::vector<Eigen::Index> chosen;
  MatrixQi acc(0, m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    MatrixQi trial(acc.rows() + 1, m.cols());
    trial.topRows(acc.rows()) = acc;
    trial.row(acc.rows()) = m.row(i);
    if (rref(trial).rank() == trial.rows()) {
      acc = std::move(trial);
      chosen.push_back(i);
    }
  }
  return chosen;
}

VectorQi express_in_rows(const MatrixQi& rows, const VectorQi& target) {
  // Solve rows^T x = target via rref of the augmented system [rows^T | target].
  const Eigen::Index n = rows.rows();
  MatrixQi aug(rows.cols(), n + 1);
  aug.leftCols(n) = rows.transpose();
  aug.col(n) = target;
  RowEchelon e = rref(aug);
  VectorQi x = VectorQi::Constant(n, GaussianRational());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    require(e.pivots[r] != n, Errc::internal, "target vector lies outside the row span");
    x(e.pivots[r]) = e.reduced(static_cast<Eigen::Index>(r), n);
  }
  return x;
}

}  // namespace gaussvd
