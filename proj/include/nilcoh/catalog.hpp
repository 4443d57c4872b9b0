#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "nilcoh/lie_algebra.hpp"

namespace nilcoh {

// Built-in families.
//   filiform_l(n):     dim n, [e_i, e_j] = (j - i) e_{i+j} for i + j <= n.
//                      filiform_l(2) is abelian of dimension 2 (no pair
//                      i < j has i + j <= 2); filiform_l(3) is the
//                      Heisenberg algebra.
//   model_filiform(n): dim n, [e_1, e_j] = (j - 1) e_{j+1} for j <= n - 1,
//                      with its canonical grading (2, 1, ..., 1).
//   heisenberg(m):     dim 2m + 1, [e_{2i-1}, e_{2i}] = e_{2m+1}.
//   abelian(n):        dim n, zero bracket.
enum class Family { filiform_l, model_filiform, heisenberg, abelian };

// Accepts both underscore and hyphen spellings ("filiform_l", "filiform-l").
std::optional<Family> family_from_string(std::string_view name);
std::string family_name(Family family);

struct CatalogEntry {
  LieAlgebra algebra;
  // Canonical grading, present for the families that carry one
  // (model_filiform; abelian with its single layer).
  std::optional<GradedLieAlgebra> graded;
};

// Throws errc::unknown_family / errc::index_out_of_range for bad n.
CatalogEntry catalog(Family family, int n);
CatalogEntry catalog(std::string_view name, int n);

}  // namespace nilcoh
