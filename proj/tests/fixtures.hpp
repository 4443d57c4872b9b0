#pragma once

// Deterministic fixture generators shared by the unit and acceptance suites.

#include <random>
#include <vector>

#include "nilcoh/catalog.hpp"
#include "nilcoh/lie_algebra.hpp"

namespace fixtures {

// Random 2-step nilpotent algebra: a generating block of dimension `a` and
// a central block of dimension `b`; brackets of generators land in the
// central block, so every triple bracket vanishes and Jacobi holds for any
// choice of constants.
inline nilcoh::LieAlgebra random_two_step(std::mt19937& rng, int a, int b) {
  std::uniform_int_distribution<int> num(-2, 2);
  std::uniform_int_distribution<int> den(1, 2);
  std::vector<nilcoh::StructureEntry> entries;
  for (int i = 0; i < a; ++i)
    for (int j = i + 1; j < a; ++j)
      for (int k = a; k < a + b; ++k) {
        nilcoh::Rational c(num(rng), den(rng));
        if (!c.is_zero()) entries.push_back({i, j, k, c});
      }
  return nilcoh::from_structure_constants(a + b, entries, "two_step");
}

// Random unimodular rational matrix: a product of elementary shears and
// sign flips, so the inverse is exact and the determinant is +-1.
inline nilcoh::RationalMatrix random_unimodular(std::mt19937& rng, Eigen::Index n) {
  using nilcoh::Rational;
  nilcoh::RationalMatrix m = nilcoh::RationalMatrix::Identity(n, n);
  std::uniform_int_distribution<int> idx(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> coeff_num(-2, 2);
  std::uniform_int_distribution<int> coeff_den(1, 3);
  std::uniform_int_distribution<int> flip(0, 3);
  for (int step = 0; step < 4 * static_cast<int>(n); ++step) {
    int r = idx(rng), c = idx(rng);
    if (r == c) {
      if (flip(rng) == 0) m.row(r) = -m.row(r);
      continue;
    }
    Rational lambda(coeff_num(rng), coeff_den(rng));
    m.row(r) += lambda * m.row(c);
  }
  return m;
}

// Twenty Jacobi-valid fixtures of dimension <= 6: random 2-step algebras
// plus random basis changes of small catalog algebras.
inline std::vector<nilcoh::LieAlgebra> random_fixtures(unsigned seed = 20240817) {
  std::mt19937 rng(seed);
  std::vector<nilcoh::LieAlgebra> out;
  std::uniform_int_distribution<int> gen_dim(2, 4);
  std::uniform_int_distribution<int> central_dim(1, 2);
  while (out.size() < 12) {
    int a = gen_dim(rng);
    int b = central_dim(rng);
    out.push_back(random_two_step(rng, a, b));
  }
  const nilcoh::LieAlgebra bases[] = {
      nilcoh::catalog(nilcoh::Family::filiform_l, 5).algebra,
      nilcoh::catalog(nilcoh::Family::model_filiform, 6).algebra,
      nilcoh::catalog(nilcoh::Family::heisenberg, 2).algebra,
      nilcoh::catalog(nilcoh::Family::filiform_l, 6).algebra,
  };
  while (out.size() < 20) {
    const nilcoh::LieAlgebra& g = bases[out.size() % 4];
    out.push_back(nilcoh::change_basis(g, random_unimodular(rng, g.dim())));
  }
  return out;
}

// Catalog algebras with dimension <= max_dim, all four families.
inline std::vector<nilcoh::LieAlgebra> catalog_algebras(int max_dim) {
  std::vector<nilcoh::LieAlgebra> out;
  for (int n = 1; n <= max_dim; ++n) {
    out.push_back(nilcoh::catalog(nilcoh::Family::filiform_l, n).algebra);
    out.push_back(nilcoh::catalog(nilcoh::Family::model_filiform, n).algebra);
    out.push_back(nilcoh::catalog(nilcoh::Family::abelian, n).algebra);
  }
  for (int m = 1; 2 * m + 1 <= max_dim; ++m)
    out.push_back(nilcoh::catalog(nilcoh::Family::heisenberg, m).algebra);
  return out;
}

}  // namespace fixtures
