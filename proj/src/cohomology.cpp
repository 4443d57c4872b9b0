#include "nilcoh/cohomology.hpp"

#include <algorithm>

namespace nilcoh {

Eigen::Index binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return static_cast<Eigen::Index>(b.get_ui());
}

CochainBasis::CochainBasis(int ambient_dim, int degree) : n_(ambient_dim), k_(degree) {
  if (ambient_dim < 0 || degree < 0)
    fail(errc::degree_out_of_range, "cochain basis parameters must be nonnegative");
  if (degree > ambient_dim) return;  // empty basis
  std::vector<int> current(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) current[static_cast<std::size_t>(i)] = i;
  while (true) {
    subsets_.push_back(current);
    int t = degree - 1;
    while (t >= 0 && current[static_cast<std::size_t>(t)] == ambient_dim - degree + t) --t;
    if (t < 0) break;
    ++current[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < degree; ++u)
      current[static_cast<std::size_t>(u)] = current[static_cast<std::size_t>(u - 1)] + 1;
  }
}

const std::vector<int>& CochainBasis::subset(Eigen::Index index) const {
  if (index < 0 || index >= size()) fail(errc::index_out_of_range, "cochain basis index");
  return subsets_[static_cast<std::size_t>(index)];
}

Eigen::Index CochainBasis::index_of(const std::vector<int>& subset) const {
  // Lexicographic rank of a strictly increasing k-subset.
  Eigen::Index rank = 0;
  int prev = -1;
  for (int t = 0; t < k_; ++t) {
    const int v = subset[static_cast<std::size_t>(t)];
    for (int u = prev + 1; u < v; ++u) rank += binomial(n_ - 1 - u, k_ - 1 - t);
    prev = v;
  }
  return rank;
}

SparseRationalMatrix ce_differential_matrix(const LieAlgebra& g, int degree) {
  const int n = static_cast<int>(g.dim());
  if (degree < 0 || degree > n)
    fail(errc::degree_out_of_range,
         "differential degree " + std::to_string(degree) + " outside 0.." + std::to_string(n));
  const CochainBasis domain(n, degree);
  const CochainBasis target(n, degree + 1);
  SparseRationalMatrix d(target.size(), domain.size());
  if (degree + 1 > n) return d;  // top degree: 0 x 1

  const std::vector<StructureEntry> entries = g.entries();
  std::vector<int> merged(static_cast<std::size_t>(degree) + 1);
  for (Eigen::Index col = 0; col < domain.size(); ++col) {
    const std::vector<int>& subset = domain.subset(col);
    for (int t = 0; t < degree; ++t) {
      const int m = subset[static_cast<std::size_t>(t)];
      for (const StructureEntry& e : entries) {
        if (e.k != m) continue;
        // Replace slot t by e^a ^ e^b; d e^m = -sum c_ab^m e^a ^ e^b and
        // moving d past t one-forms contributes (-1)^t.
        bool degenerate = false;
        for (int u = 0; u < degree && !degenerate; ++u)
          if (u != t && (subset[static_cast<std::size_t>(u)] == e.i ||
                         subset[static_cast<std::size_t>(u)] == e.j))
            degenerate = true;
        if (degenerate) continue;

        std::size_t w = 0;
        for (int u = 0; u < degree; ++u) {
          if (u == t) continue;
          merged[w++] = subset[static_cast<std::size_t>(u)];
        }
        merged[w++] = e.i;
        merged[w] = e.j;
        // Sort the wedge; each adjacent swap flips the sign.
        int swaps = 0;
        for (std::size_t x = 1; x < merged.size(); ++x)
          for (std::size_t y = x; y > 0 && merged[y] < merged[y - 1]; --y) {
            std::swap(merged[y], merged[y - 1]);
            ++swaps;
          }
        const int sign = ((t + swaps) % 2 == 0) ? -1 : 1;  // includes the -c_ab^m sign
        d.add(target.index_of(merged), col, Rational(sign) * e.c);
      }
    }
  }
  return d;
}

BettiProfile betti_profile(const LieAlgebra& g) {
  lower_central_series(g);  // throws errc::not_nilpotent otherwise
  const int n = static_cast<int>(g.dim());

  BettiProfile profile;
  profile.algebra_label = g.label();
  for (int k = 0; k <= n; ++k) profile.cochain_dims.push_back(binomial(n, k));
  for (int k = 0; k < n; ++k)
    profile.differential_ranks.push_back(rank_exact(ce_differential_matrix(g, k)));
  for (int k = 0; k <= n; ++k) {
    const Eigen::Index rank_k = k < n ? profile.differential_ranks[static_cast<std::size_t>(k)] : 0;
    const Eigen::Index rank_prev =
        k > 0 ? profile.differential_ranks[static_cast<std::size_t>(k - 1)] : 0;
    profile.betti.push_back(profile.cochain_dims[static_cast<std::size_t>(k)] - rank_k - rank_prev);
  }
  return profile;
}

}  // namespace nilcoh
