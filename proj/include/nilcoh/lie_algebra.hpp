#pragma once

#include <Eigen/Core>
#include <array>
#include <string>
#include <vector>

#include "nilcoh/errors.hpp"
#include "nilcoh/linalg.hpp"
#include "nilcoh/rational.hpp"

namespace nilcoh {

// A linear subspace of Q^n in canonical form: the rows of basis() are the
// reduced row echelon basis, pivot columns strictly increasing. Equality
// of subspaces is equality of the canonical bases.
class Subspace {
public:
  explicit Subspace(Eigen::Index ambient_dim);  // zero subspace
  static Subspace span_of(const RationalMatrix& vectors_as_rows, Eigen::Index ambient_dim);
  static Subspace full(Eigen::Index ambient_dim);

  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Eigen::Index dim() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }

  bool contains(const RationalVector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  Eigen::Index ambient_dim_;
  RationalMatrix basis_;
  std::vector<Eigen::Index> pivots_;
};

struct StructureEntry {
  int i, j, k;  // 0-based basis indices, i < j
  Rational c;   // c_{ij}^k
};

class JacobiViolation : public Error {
public:
  JacobiViolation(int i, int j, int k, RationalVector residual);
  std::array<int, 3> triple;    // first failing (i, j, k), 0-based
  RationalVector residual;      // the nonzero Jacobi sum in coordinates
};

// Finite-dimensional Lie algebra over Q, given by its structure constants
// [e_i, e_j] = sum_k c_{ij}^k e_k. Antisymmetry is built into the storage;
// the Jacobi identity is verified exactly at construction. Immutable.
class LieAlgebra {
public:
  Eigen::Index dim() const { return dim_; }
  const std::string& label() const { return label_; }
  LieAlgebra with_label(std::string label) const;

  // c_{ij}^k for any i, j (antisymmetry applied; zero on the diagonal).
  Rational structure_constant(int i, int j, int k) const;

  // [u, v] in coordinates.
  RationalVector bracket(const RationalVector& u, const RationalVector& v) const;
  RationalVector bracket_basis(int i, int j) const;  // [e_i, e_j]

  // Matrix of ad(e_i): column j is [e_i, e_j].
  RationalMatrix adjoint(int i) const;

  // Canonical nonzero entries, i < j, sorted by (i, j, k).
  std::vector<StructureEntry> entries() const;

  friend LieAlgebra from_structure_constants(Eigen::Index dim,
                                             const std::vector<StructureEntry>& entries,
                                             std::string label);

private:
  LieAlgebra(Eigen::Index dim, std::vector<RationalMatrix> component, std::string label)
      : dim_(dim), component_(std::move(component)), label_(std::move(label)) {}
  void verify_jacobi() const;
  RationalVector unit_vector(int k) const;

  Eigen::Index dim_;
  // component_[k](i, j) = c_{ij}^k, antisymmetric n x n.
  std::vector<RationalMatrix> component_;
  std::string label_;
};

// Validates index ranges, duplicates and the Jacobi identity.
// Throws JacobiViolation, errc::index_out_of_range, errc::duplicate_entry.
LieAlgebra from_structure_constants(Eigen::Index dim, const std::vector<StructureEntry>& entries,
                                    std::string label = "");

// A Lie algebra with a Carnot grading g = m_1 + ... + m_s. Construction
// verifies: layers disjoint and spanning, C^i(g) = sum of layers >= i,
// and [m_i, m_j] inside m_{i+j}.
class GradedLieAlgebra {
public:
  GradedLieAlgebra(LieAlgebra algebra, std::vector<Subspace> layers);

  const LieAlgebra& algebra() const { return algebra_; }
  const std::vector<Subspace>& layers() const { return layers_; }
  std::vector<Eigen::Index> layer_dims() const;

private:
  LieAlgebra algebra_;
  std::vector<Subspace> layers_;
};

// Lower central series C^1 = g, C^2 = [g, g], C^i = [g, C^{i-1}], ending
// at the first zero term, which is included. Throws errc::not_nilpotent if
// the series stabilizes at a nonzero subspace.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

int nilpotency_class(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

// {v : [x, v] = 0 for all x}, the kernel of the stacked adjoints.
Subspace center(const LieAlgebra& g);

// Associated graded algebra gr(g) of a nilpotent g: layers are the echelon
// complements of C^{i+1} in C^i, the bracket of layer representatives is
// computed in g and truncated to its layer-(i+j) part.
GradedLieAlgebra carnotification(const LieAlgebra& g);

LieAlgebra direct_product(const LieAlgebra& g, const LieAlgebra& h);

// Central product with 1-dimensional centers: quotient of g x h by the
// line spanned by (z_g, scaling * z_h) for primitive integer center
// generators z_g, z_h. Throws errc::unsupported_center, errc::zero_scaling.
LieAlgebra central_product(const LieAlgebra& g, const LieAlgebra& h,
                           const Rational& scaling = Rational(1));

// Structure constants in the basis f_j = sum_i p(i, j) e_i; p invertible.
LieAlgebra change_basis(const LieAlgebra& g, const RationalMatrix& p);

// Bass-Guivarc'h homogeneous dimension: sum_i i * dim m_i.
int homogeneous_dimension(const GradedLieAlgebra& g);

}  // namespace nilcoh
