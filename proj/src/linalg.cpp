#include "nilcoh/linalg.hpp"

#include "nilcoh/errors.hpp"

namespace nilcoh {

std::vector<Eigen::Index> reduced_row_echelon(RationalMatrix& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // Smallest-entry pivot keeps intermediate coefficients short. The
    // final RREF is canonical whatever pivot is picked.
    Eigen::Index pivot = -1;
    std::size_t best = 0;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      std::size_t sz = m(i, c).bit_size();
      if (pivot < 0 || sz < best) {
        pivot = i;
        best = sz;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const Rational inv_pivot = Rational(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv_pivot;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational factor = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  m.conservativeResize(static_cast<Eigen::Index>(pivots.size()), cols);
  return pivots;
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
  RationalMatrix red = m;
  const std::vector<Eigen::Index> pivots = reduced_row_echelon(red);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (Eigen::Index p : pivots) is_pivot[p] = true;

  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RationalMatrix basis = RationalMatrix::Zero(static_cast<Eigen::Index>(free_cols.size()), cols);
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const Eigen::Index fc = free_cols[f];
    basis(static_cast<Eigen::Index>(f), fc) = Rational(1);
    for (std::size_t p = 0; p < pivots.size(); ++p)
      basis(static_cast<Eigen::Index>(f), pivots[p]) = -red(static_cast<Eigen::Index>(p), fc);
  }
  // Free-column unit vectors already yield an RREF basis up to row order;
  // re-reduce to fix the canonical order and normalization.
  reduced_row_echelon(basis);
  return basis;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) fail(errc::internal_inconsistency, "inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  RationalMatrix aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = RationalMatrix::Identity(n, n);
  const std::vector<Eigen::Index> pivots = reduced_row_echelon(aug);
  if (static_cast<Eigen::Index>(pivots.size()) != n || pivots.back() != n - 1)
    fail(errc::internal_inconsistency, "inverse of a singular matrix");
  return aug.rightCols(n);
}

RationalVector primitive_integer_vector(const RationalVector& v) {
  mpz_class den_lcm(1);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), v(i).den().get_mpz_t());
    den_lcm = l;
  }
  mpz_class num_gcd(0);
  std::vector<mpz_class> scaled(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    scaled[static_cast<std::size_t>(i)] = v(i).num() * (den_lcm / v(i).den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), scaled[static_cast<std::size_t>(i)].get_mpz_t());
    num_gcd = g;
  }
  if (num_gcd == 0) return v;  // zero vector
  int lead_sign = 0;
  for (Eigen::Index i = 0; i < v.size() && lead_sign == 0; ++i)
    lead_sign = sgn(scaled[static_cast<std::size_t>(i)]);
  if (lead_sign < 0) num_gcd = -num_gcd;
  RationalVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out(i) = Rational(mpz_class(scaled[static_cast<std::size_t>(i)] / num_gcd));
  return out;
}

}  // namespace nilcoh
