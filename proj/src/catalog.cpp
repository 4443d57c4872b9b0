#include "nilcoh/catalog.hpp"

namespace nilcoh {

std::optional<Family> family_from_string(std::string_view name) {
  std::string s(name);
  for (char& c : s)
    if (c == '-') c = '_';
  if (s == "filiform_l") return Family::filiform_l;
  if (s == "model_filiform") return Family::model_filiform;
  if (s == "heisenberg") return Family::heisenberg;
  if (s == "abelian") return Family::abelian;
  return std::nullopt;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::filiform_l: return "filiform_l";
    case Family::model_filiform: return "model_filiform";
    case Family::heisenberg: return "heisenberg";
    case Family::abelian: return "abelian";
  }
  return "?";
}

namespace {

std::vector<Subspace> unit_block_layers(Eigen::Index dim, const std::vector<Eigen::Index>& dims) {
  std::vector<Subspace> layers;
  Eigen::Index offset = 0;
  for (Eigen::Index d : dims) {
    RationalMatrix rows = RationalMatrix::Zero(d, dim);
    for (Eigen::Index r = 0; r < d; ++r) rows(r, offset + r) = Rational(1);
    layers.push_back(Subspace::span_of(rows, dim));
    offset += d;
  }
  return layers;
}

}  // namespace

CatalogEntry catalog(Family family, int n) {
  if (n < 1) fail(errc::index_out_of_range, "catalog parameter n must be >= 1");
  const std::string label = family_name(family) + "(" + std::to_string(n) + ")";
  switch (family) {
    case Family::filiform_l: {
      std::vector<StructureEntry> entries;
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; i + j <= n; ++j)
          entries.push_back({i - 1, j - 1, i + j - 1, Rational(j - i)});
      return {from_structure_constants(n, entries, label), std::nullopt};
    }
    case Family::model_filiform: {
      std::vector<StructureEntry> entries;
      for (int j = 2; j <= n - 1; ++j) entries.push_back({0, j - 1, j, Rational(j - 1)});
      LieAlgebra g = from_structure_constants(n, entries, label);
      std::vector<Eigen::Index> dims;
      if (n == 1) {
        dims = {1};
      } else {
        dims.push_back(2);
        for (int i = 2; i <= n - 1; ++i) dims.push_back(1);
      }
      GradedLieAlgebra graded(g, unit_block_layers(n, dims));
      return {std::move(g), std::move(graded)};
    }
    case Family::heisenberg: {
      std::vector<StructureEntry> entries;
      const int dim = 2 * n + 1;
      for (int i = 1; i <= n; ++i) entries.push_back({2 * i - 2, 2 * i - 1, dim - 1, Rational(1)});
      return {from_structure_constants(dim, entries, label), std::nullopt};
    }
    case Family::abelian: {
      LieAlgebra g = from_structure_constants(n, {}, label);
      GradedLieAlgebra graded(g, unit_block_layers(n, {n}));
      return {std::move(g), std::move(graded)};
    }
  }
  fail(errc::unknown_family, "unhandled family");
}

CatalogEntry catalog(std::string_view name, int n) {
  std::optional<Family> family = family_from_string(name);
  if (!family)
    fail(errc::unknown_family,
         "unknown family '" + std::string(name) +
             "'; known: filiform-l, model-filiform, heisenberg, abelian");
  return catalog(*family, n);
}

}  // namespace nilcoh
