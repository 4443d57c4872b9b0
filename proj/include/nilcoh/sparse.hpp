#pragma once

#include <Eigen/Core>
#include <map>
#include <vector>

#include "nilcoh/linalg.hpp"
#include "nilcoh/rational.hpp"

namespace nilcoh {

// Sparse exact-rational matrix. Only nonzero entries are stored; writing a
// zero erases the slot.
class SparseRationalMatrix {
public:
  SparseRationalMatrix(Eigen::Index rows, Eigen::Index cols);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  Eigen::Index nonzeros() const;

  void set(Eigen::Index r, Eigen::Index c, const Rational& v);
  void add(Eigen::Index r, Eigen::Index c, const Rational& v);
  Rational coeff(Eigen::Index r, Eigen::Index c) const;

  const std::map<Eigen::Index, Rational>& row(Eigen::Index r) const;

  RationalMatrix dense() const;
  static SparseRationalMatrix from_dense(const RationalMatrix& m);

  friend bool operator==(const SparseRationalMatrix& a, const SparseRationalMatrix& b);

private:
  void check(Eigen::Index r, Eigen::Index c) const;

  Eigen::Index rows_, cols_;
  std::vector<std::map<Eigen::Index, Rational>> data_;
};

SparseRationalMatrix multiply(const SparseRationalMatrix& a, const SparseRationalMatrix& b);

// Exact rank over the rationals by fraction-free (Bareiss) elimination on
// row-primitive integer rows. Pivot rule: among the nonzero candidates in
// the current column take the entry of smallest bit size, ties broken by
// lowest row position.
Eigen::Index rank_exact(const SparseRationalMatrix& m);

}  // namespace nilcoh
