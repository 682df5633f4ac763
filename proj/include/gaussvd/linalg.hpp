#ifndef GAUSSVD_LINALG_HPP
#define GAUSSVD_LINALG_HPP

#include <Eigen/Core>
#include <vector>

#include "gaussvd/laurent.hpp"

namespace gaussvd {

using MatrixQi = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQi = Eigen::Matrix<GaussianRational, Eigen::Dynamic, 1>;

/// Reduced row echelon form over Q(i), computed exactly.
struct RowEchelon {
  MatrixQi reduced;
  std::vector<Eigen::Index> pivots;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

RowEchelon rref(MatrixQi m);

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(MatrixQi(m)).rank();
}

/// Rows are the polynomials, columns the exponents order..degree of the union.
MatrixQi coefficient_matrix(const std::vector<LaurentPoly>& polys);

/// Greedy left-to-right maximal independent subset of rows.
std::vector<Eigen::Index> independent_rows(const MatrixQi& m);

/// Coefficients x with x^T * rows == target^T. Throws Errc::internal when the
/// target is outside the row span.
VectorQi express_in_rows(const MatrixQi& rows, const VectorQi& target);

}  // namespace gaussvd

#endif  // GAUSSVD_LINALG_HPP
