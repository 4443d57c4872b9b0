#pragma once

#include <string>
#include <vector>

#include "nilcoh/lie_algebra.hpp"
#include "nilcoh/sparse.hpp"

namespace nilcoh {

// Lexicographically ordered k-subsets of {0, ..., n-1}; the basis of
// Lambda^k in both the algebra and its dual.
class CochainBasis {
public:
  CochainBasis(int ambient_dim, int degree);  // throws errc::degree_out_of_range

  Eigen::Index size() const { return static_cast<Eigen::Index>(subsets_.size()); }
  int ambient_dim() const { return n_; }
  int degree() const { return k_; }
  const std::vector<int>& subset(Eigen::Index index) const;
  Eigen::Index index_of(const std::vector<int>& subset) const;  // lex rank

private:
  int n_, k_;
  std::vector<std::vector<int>> subsets_;
};

// Matrix of the Chevalley-Eilenberg differential d_k : Lambda^k g* ->
// Lambda^{k+1} g* in the lexicographic dual bases, trivial coefficients.
// Sign convention:
//   (d w)(x_0, ..., x_k) =
//     sum_{i<j} (-1)^{i+j} w([x_i, x_j], x_0, ..., ^x_i, ..., ^x_j, ..., x_k)
// equivalently d e^m = -sum_{a<b} c_ab^m e^a ^ e^b extended as an
// antiderivation. For k = dim g the matrix is 0 x 1.
SparseRationalMatrix ce_differential_matrix(const LieAlgebra& g, int degree);

struct BettiProfile {
  std::string algebra_label;
  std::vector<Eigen::Index> cochain_dims;       // C(n, k), k = 0..n
  std::vector<Eigen::Index> differential_ranks; // rank d_k, k = 0..n-1
  std::vector<Eigen::Index> betti;              // b_0..b_n

  Eigen::Index b(int k) const {  // zero outside 0..n
    return (k < 0 || k >= static_cast<int>(betti.size())) ? 0 : betti[static_cast<std::size_t>(k)];
  }
};

// Full Betti vector b_0..b_n of a nilpotent Lie algebra:
// b_k = C(n,k) - rank d_k - rank d_{k-1}. Throws errc::not_nilpotent.
BettiProfile betti_profile(const LieAlgebra& g);

Eigen::Index binomial(int n, int k);

}  // namespace nilcoh
