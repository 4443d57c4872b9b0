#pragma once

#include <Eigen/Core>
#include <vector>

#include "nilcoh/rational.hpp"

namespace nilcoh {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Reduced row echelon form in place: pivots are 1, pivot columns cleared,
// zero rows dropped, pivot columns strictly increasing. Returns the pivot
// column indices. The result is the canonical basis of the row space.
std::vector<Eigen::Index> reduced_row_echelon(RationalMatrix& m);

// Canonical RREF basis of the null space {x : m x = 0}, rows = basis.
RationalMatrix kernel_basis(const RationalMatrix& m);

// Exact inverse of a square invertible matrix (Gauss-Jordan).
// Throws errc::internal_inconsistency if m is singular.
RationalMatrix inverse(const RationalMatrix& m);

// Scale a nonzero rational vector to a primitive integer vector: clear
// denominators, divide by the gcd of the numerators, make the first
// nonzero entry positive. Zero vectors are returned unchanged.
RationalVector primitive_integer_vector(const RationalVector& v);

template <typename Derived>
bool is_exactly_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace nilcoh
