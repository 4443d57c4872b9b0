#include "nilcoh/sparse.hpp"

#include <algorithm>

#include "nilcoh/errors.hpp"

namespace nilcoh {

SparseRationalMatrix::SparseRationalMatrix(Eigen::Index rows, Eigen::Index cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {
  if (rows < 0 || cols < 0) fail(errc::index_out_of_range, "negative matrix dimension");
}

void SparseRationalMatrix::check(Eigen::Index r, Eigen::Index c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    fail(errc::index_out_of_range, "sparse matrix index out of range");
}

Eigen::Index SparseRationalMatrix::nonzeros() const {
  Eigen::Index n = 0;
  for (const auto& row : data_) n += static_cast<Eigen::Index>(row.size());
  return n;
}

void SparseRationalMatrix::set(Eigen::Index r, Eigen::Index c, const Rational& v) {
  check(r, c);
  auto& row = data_[static_cast<std::size_t>(r)];
  if (v.is_zero())
    row.erase(c);
  else
    row[c] = v;
}

void SparseRationalMatrix::add(Eigen::Index r, Eigen::Index c, const Rational& v) {
  check(r, c);
  if (v.is_zero()) return;
  auto& row = data_[static_cast<std::size_t>(r)];
  auto it = row.find(c);
  if (it == row.end()) {
    row.emplace(c, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) row.erase(it);
}

Rational SparseRationalMatrix::coeff(Eigen::Index r, Eigen::Index c) const {
  check(r, c);
  const auto& row = data_[static_cast<std::size_t>(r)];
  auto it = row.find(c);
  return it == row.end() ? Rational(0) : it->second;
}

const std::map<Eigen::Index, Rational>& SparseRationalMatrix::row(Eigen::Index r) const {
  if (r < 0 || r >= rows_) fail(errc::index_out_of_range, "sparse matrix row out of range");
  return data_[static_cast<std::size_t>(r)];
}

RationalMatrix SparseRationalMatrix::dense() const {
  RationalMatrix m = RationalMatrix::Zero(rows_, cols_);
  for (Eigen::Index r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[static_cast<std::size_t>(r)]) m(r, c) = v;
  return m;
}

SparseRationalMatrix SparseRationalMatrix::from_dense(const RationalMatrix& m) {
  SparseRationalMatrix s(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) s.set(r, c, m(r, c));
  return s;
}

bool operator==(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

SparseRationalMatrix multiply(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  if (a.cols() != b.rows()) fail(errc::index_out_of_range, "sparse product shape mismatch");
  SparseRationalMatrix out(a.rows(), b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (const auto& [k, av] : a.row(r))
      for (const auto& [c, bv] : b.row(k)) out.add(r, c, av * bv);
  return out;
}

namespace {

using IntRow = std::map<Eigen::Index, mpz_class>;

std::size_t int_bit_size(const mpz_class& z) {
  // +1 mirrors Rational::bit_size with denominator 1.
  return mpz_sizeinbase(z.get_mpz_t(), 2) + 1;
}

// Clear denominators and divide by the content; rank is scale-invariant.
IntRow to_primitive_int_row(const std::map<Eigen::Index, Rational>& row) {
  IntRow out;
  if (row.empty()) return out;
  mpz_class den_lcm(1);
  for (const auto& [c, v] : row) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), v.den().get_mpz_t());
    den_lcm = l;
  }
  mpz_class content(0);
  for (const auto& [c, v] : row) {
    out[c] = v.num() * (den_lcm / v.den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), out[c].get_mpz_t());
    content = g;
  }
  if (content > 1)
    for (auto& [c, v] : out) v /= content;
  return out;
}

}  // namespace

Eigen::Index rank_exact(const SparseRationalMatrix& m) {
  std::vector<IntRow> work;
  work.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    IntRow row = to_primitive_int_row(m.row(r));
    if (!row.empty()) work.push_back(std::move(row));
  }

  Eigen::Index rank = 0;
  mpz_class prev_pivot(1);
  for (Eigen::Index col = 0; col < m.cols() && rank < static_cast<Eigen::Index>(work.size());
       ++col) {
    // Pivot: smallest bit size among nonzero entries of this column.
    std::size_t pivot_pos = work.size();
    std::size_t best = 0;
    for (std::size_t i = static_cast<std::size_t>(rank); i < work.size(); ++i) {
      auto it = work[i].find(col);
      if (it == work[i].end()) continue;
      std::size_t sz = int_bit_size(it->second);
      if (pivot_pos == work.size() || sz < best) {
        pivot_pos = i;
        best = sz;
      }
    }
    if (pivot_pos == work.size()) continue;
    std::swap(work[static_cast<std::size_t>(rank)], work[pivot_pos]);

    const IntRow& pivot_row = work[static_cast<std::size_t>(rank)];
    const mpz_class pivot = pivot_row.at(col);

    // One-step fraction-free update of every remaining row; divisions by
    // the previous pivot are exact (Sylvester identity).
    for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < work.size(); ++i) {
      IntRow& row = work[i];
      mpz_class factor(0);
      if (auto it = row.find(col); it != row.end()) factor = it->second;
      IntRow updated;
      if (factor == 0) {
        for (auto& [c, v] : row) {
          mpz_class nv = v * pivot / prev_pivot;
          if (nv != 0) updated.emplace(c, std::move(nv));
        }
      } else {
        auto it_r = row.begin();
        auto it_p = pivot_row.begin();
        while (it_r != row.end() || it_p != pivot_row.end()) {
          if (it_p == pivot_row.end() || (it_r != row.end() && it_r->first < it_p->first)) {
            mpz_class nv = it_r->second * pivot / prev_pivot;
            if (nv != 0) updated.emplace(it_r->first, std::move(nv));
            ++it_r;
          } else if (it_r == row.end() || it_p->first < it_r->first) {
            mpz_class nv = -factor * it_p->second / prev_pivot;
            if (nv != 0) updated.emplace(it_p->first, std::move(nv));
            ++it_p;
          } else {
            mpz_class nv = (it_r->second * pivot - factor * it_p->second) / prev_pivot;
            if (nv != 0) updated.emplace(it_r->first, std::move(nv));
            ++it_r;
            ++it_p;
          }
        }
      }
      row = std::move(updated);
    }

    prev_pivot = pivot;
    ++rank;
    // Rows emptied by cancellation can never contribute a pivot.
    work.erase(std::remove_if(work.begin() + rank, work.end(),
                              [](const IntRow& r) { return r.empty(); }),
               work.end());
  }
  return rank;
}

}  // namespace nilcoh
