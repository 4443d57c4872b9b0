#pragma once

// Independent reference implementations used to check library results.
// These deliberately avoid the library's elimination routines.

#include <gmpxx.h>

#include <vector>

#include "nilcoh/lie_algebra.hpp"
#include "nilcoh/linalg.hpp"
#include "nilcoh/sparse.hpp"

namespace oracles {

// Plain dense Gaussian elimination over mpq_class, first-nonzero pivoting.
inline Eigen::Index dense_rank(const nilcoh::RationalMatrix& input) {
  const Eigen::Index rows = input.rows();
  const Eigen::Index cols = input.cols();
  std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(rows),
                                        std::vector<mpq_class>(static_cast<std::size_t>(cols)));
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = input(i, j).raw();

  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (sgn(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
    const std::vector<mpq_class>& prow = m[static_cast<std::size_t>(rank)];
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      std::vector<mpq_class>& row = m[static_cast<std::size_t>(r)];
      if (sgn(row[static_cast<std::size_t>(c)]) == 0) continue;
      mpq_class factor = row[static_cast<std::size_t>(c)] / prow[static_cast<std::size_t>(c)];
      for (Eigen::Index j = c; j < cols; ++j)
        row[static_cast<std::size_t>(j)] -= factor * prow[static_cast<std::size_t>(j)];
    }
    ++rank;
  }
  return rank;
}

inline Eigen::Index dense_rank(const nilcoh::SparseRationalMatrix& m) {
  return dense_rank(m.dense());
}

// Direct expansion of [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
// from raw structure constants, without constructing a LieAlgebra.
// Entries are (i, j, k, c) with i < j, 0-based.
struct RawEntry {
  int i, j, k;
  mpq_class c;
};

inline std::vector<mpq_class> jacobi_sum(int dim, const std::vector<RawEntry>& entries, int i,
                                         int j, int k) {
  auto c = [&](int a, int b, int t) {
    mpq_class out(0);
    for (const RawEntry& e : entries) {
      if (e.k != t) continue;
      if (e.i == a && e.j == b) out += e.c;
      if (e.i == b && e.j == a) out -= e.c;
    }
    return out;
  };
  std::vector<mpq_class> sum(static_cast<std::size_t>(dim), mpq_class(0));
  for (int m = 0; m < dim; ++m)
    for (int t = 0; t < dim; ++t) {
      sum[static_cast<std::size_t>(t)] += c(i, j, m) * c(m, k, t);
      sum[static_cast<std::size_t>(t)] += c(j, k, m) * c(m, i, t);
      sum[static_cast<std::size_t>(t)] += c(k, i, m) * c(m, j, t);
    }
  return sum;
}

}  // namespace oracles
