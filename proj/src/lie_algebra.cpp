#include "nilcoh/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace nilcoh {

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(Eigen::Index ambient_dim) : ambient_dim_(ambient_dim) {
  if (ambient_dim < 0) fail(errc::index_out_of_range, "negative ambient dimension");
  basis_ = RationalMatrix(0, ambient_dim);
}

Subspace Subspace::span_of(const RationalMatrix& vectors_as_rows, Eigen::Index ambient_dim) {
  if (vectors_as_rows.rows() > 0 && vectors_as_rows.cols() != ambient_dim)
    fail(errc::index_out_of_range, "span vectors do not match the ambient dimension");
  Subspace s(ambient_dim);
  RationalMatrix m = vectors_as_rows;
  if (m.cols() != ambient_dim) m = RationalMatrix(0, ambient_dim);
  s.pivots_ = reduced_row_echelon(m);
  s.basis_ = std::move(m);
  return s;
}

Subspace Subspace::full(Eigen::Index ambient_dim) {
  return span_of(RationalMatrix::Identity(ambient_dim, ambient_dim), ambient_dim);
}

bool Subspace::contains(const RationalVector& v) const {
  if (v.size() != ambient_dim_) fail(errc::index_out_of_range, "vector/ambient size mismatch");
  RationalVector r = v;
  for (Eigen::Index row = 0; row < basis_.rows(); ++row) {
    const Rational& coeff = r(pivots_[static_cast<std::size_t>(row)]);
    if (coeff.is_zero()) continue;
    r -= coeff * basis_.row(row).transpose();
  }
  return is_exactly_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  for (Eigen::Index row = 0; row < other.basis_.rows(); ++row)
    if (!contains(RationalVector(other.basis_.row(row).transpose()))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// LieAlgebra

JacobiViolation::JacobiViolation(int i, int j, int k, RationalVector res)
    : Error(errc::jacobi_violation,
            "Jacobi identity fails on basis triple (" + std::to_string(i + 1) + ", " +
                std::to_string(j + 1) + ", " + std::to_string(k + 1) + ")"),
      triple{i, j, k},
      residual(std::move(res)) {}

Rational LieAlgebra::structure_constant(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
    fail(errc::index_out_of_range, "structure constant index out of range");
  return component_[static_cast<std::size_t>(k)](i, j);
}

RationalVector LieAlgebra::bracket(const RationalVector& u, const RationalVector& v) const {
  if (u.size() != dim_ || v.size() != dim_)
    fail(errc::index_out_of_range, "bracket operand size mismatch");
  RationalVector out(dim_);
  for (Eigen::Index k = 0; k < dim_; ++k)
    out(k) = (u.transpose() * component_[static_cast<std::size_t>(k)] * v)(0, 0);
  return out;
}

RationalVector LieAlgebra::bracket_basis(int i, int j) const {
  RationalVector out(dim_);
  for (Eigen::Index k = 0; k < dim_; ++k) out(k) = component_[static_cast<std::size_t>(k)](i, j);
  return out;
}

RationalMatrix LieAlgebra::adjoint(int i) const {
  RationalMatrix ad = RationalMatrix::Zero(dim_, dim_);
  for (Eigen::Index j = 0; j < dim_; ++j) ad.col(j) = bracket_basis(i, static_cast<int>(j));
  return ad;
}

std::vector<StructureEntry> LieAlgebra::entries() const {
  std::vector<StructureEntry> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        const Rational& c = component_[static_cast<std::size_t>(k)](i, j);
        if (!c.is_zero()) out.push_back({i, j, k, c});
      }
  std::sort(out.begin(), out.end(), [](const StructureEntry& a, const StructureEntry& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  return out;
}

LieAlgebra LieAlgebra::with_label(std::string label) const {
  LieAlgebra copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

void LieAlgebra::verify_jacobi() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        RationalVector sum = bracket(bracket_basis(i, j), unit_vector(k)) +
                             bracket(bracket_basis(j, k), unit_vector(i)) +
                             bracket(bracket_basis(k, i), unit_vector(j));
        if (!is_exactly_zero(sum)) throw JacobiViolation(i, j, k, std::move(sum));
      }
}

LieAlgebra from_structure_constants(Eigen::Index dim, const std::vector<StructureEntry>& entries,
                                    std::string label) {
  if (dim < 1) fail(errc::index_out_of_range, "dimension must be positive");
  std::vector<RationalMatrix> component(static_cast<std::size_t>(dim),
                                        RationalMatrix::Zero(dim, dim));
  for (const StructureEntry& e : entries) {
    if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim || e.k < 0 || e.k >= dim)
      fail(errc::index_out_of_range, "structure constant index out of range");
    if (!(e.i < e.j))
      fail(errc::index_out_of_range, "structure constants must be given with i < j");
    auto& m = component[static_cast<std::size_t>(e.k)];
    if (!m(e.i, e.j).is_zero())
      fail(errc::duplicate_entry, "duplicate structure constant for (i, j, k) = (" +
                                      std::to_string(e.i + 1) + ", " + std::to_string(e.j + 1) +
                                      ", " + std::to_string(e.k + 1) + ")");
    m(e.i, e.j) = e.c;
    m(e.j, e.i) = -e.c;
  }
  LieAlgebra g(dim, std::move(component), std::move(label));
  g.verify_jacobi();
  return g;
}

// ---------------------------------------------------------------------------
// Series, center, class

namespace {

RationalVector unit(Eigen::Index dim, Eigen::Index k) {
  RationalVector v = RationalVector::Zero(dim);
  v(k) = Rational(1);
  return v;
}

}  // namespace

// Used by verify_jacobi via the member declaration below.
RationalVector LieAlgebra::unit_vector(int k) const { return unit(dim_, k); }

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const Eigen::Index n = g.dim();
  std::vector<Subspace> series;
  series.push_back(Subspace::full(n));
  while (series.back().dim() > 0) {
    const Subspace& prev = series.back();
    RationalMatrix gens(n * prev.dim(), n);
    Eigen::Index row = 0;
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index v = 0; v < prev.dim(); ++v)
        gens.row(row++) =
            g.bracket(unit(n, a), RationalVector(prev.basis().row(v).transpose())).transpose();
    Subspace next = Subspace::span_of(gens, n);
    if (next.dim() == prev.dim())
      fail(errc::not_nilpotent,
           "lower central series stabilizes at dimension " + std::to_string(prev.dim()) +
               "; the algebra is not nilpotent");
    series.push_back(std::move(next));
  }
  return series;
}

int nilpotency_class(const LieAlgebra& g) {
  return static_cast<int>(lower_central_series(g).size()) - 1;
}

bool is_nilpotent(const LieAlgebra& g) {
  try {
    lower_central_series(g);
    return true;
  } catch (const Error& e) {
    if (e.code() == errc::not_nilpotent) return false;
    throw;
  }
}

Subspace center(const LieAlgebra& g) {
  const Eigen::Index n = g.dim();
  RationalMatrix stacked(n * n, n);
  for (Eigen::Index i = 0; i < n; ++i) stacked.middleRows(i * n, n) = g.adjoint(static_cast<int>(i));
  RationalMatrix ker = kernel_basis(stacked);
  return Subspace::span_of(ker, n);
}

// ---------------------------------------------------------------------------
// GradedLieAlgebra

GradedLieAlgebra::GradedLieAlgebra(LieAlgebra algebra, std::vector<Subspace> layers)
    : algebra_(std::move(algebra)), layers_(std::move(layers)) {
  const Eigen::Index n = algebra_.dim();
  Eigen::Index total = 0;
  RationalMatrix all(n, n);
  Eigen::Index row = 0;
  for (const Subspace& m : layers_) {
    if (m.ambient_dim() != n)
      fail(errc::internal_inconsistency, "layer ambient dimension mismatch");
    total += m.dim();
    if (row + m.dim() > n) break;
    all.middleRows(row, m.dim()) = m.basis();
    row += m.dim();
  }
  if (total != n || Subspace::span_of(all, n).dim() != n)
    fail(errc::internal_inconsistency, "layers do not decompose the algebra");

  // C^i(g) must equal the span of the layers of weight >= i.
  const std::vector<Subspace> series = lower_central_series(algebra_);
  const std::size_t s = layers_.size();
  for (std::size_t i = 0; i < s; ++i) {
    RationalMatrix tail(n, n);
    Eigen::Index r = 0;
    for (std::size_t j = i; j < s; ++j) {
      tail.middleRows(r, layers_[j].dim()) = layers_[j].basis();
      r += layers_[j].dim();
    }
    Subspace tail_span = Subspace::span_of(tail.topRows(r), n);
    const Subspace& expected = i < series.size() ? series[i] : Subspace(n);
    if (!(tail_span == expected))
      fail(errc::internal_inconsistency,
           "layers are not compatible with the lower central series at weight " +
               std::to_string(i + 1));
  }

  // [m_i, m_j] inside m_{i+j} (zero when i + j exceeds the last layer).
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) {
      const std::size_t target = i + j + 1;  // 1-based weight i+1 + j+1 - 1
      for (Eigen::Index a = 0; a < layers_[i].dim(); ++a)
        for (Eigen::Index b = 0; b < layers_[j].dim(); ++b) {
          RationalVector w = algebra_.bracket(
              RationalVector(layers_[i].basis().row(a).transpose()),
              RationalVector(layers_[j].basis().row(b).transpose()));
          bool ok = target < s ? layers_[target].contains(w) : is_exactly_zero(w);
          if (!ok)
            fail(errc::internal_inconsistency,
                 "bracket of layers " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                     " leaves layer " + std::to_string(target + 1));
        }
    }
}

std::vector<Eigen::Index> GradedLieAlgebra::layer_dims() const {
  std::vector<Eigen::Index> dims;
  dims.reserve(layers_.size());
  for (const Subspace& m : layers_) dims.push_back(m.dim());
  return dims;
}

int homogeneous_dimension(const GradedLieAlgebra& g) {
  int d = 0;
  int weight = 1;
  for (const Subspace& m : g.layers()) d += weight++ * static_cast<int>(m.dim());
  return d;
}

// ---------------------------------------------------------------------------
// Carnotification

GradedLieAlgebra carnotification(const LieAlgebra& g) {
  const Eigen::Index n = g.dim();
  std::vector<Subspace> series = lower_central_series(g);  // throws NotNilpotent
  const std::size_t s = series.size() - 1;                 // nilpotency class

  // Complement of C^{i+1} in C^i: echelon vectors of C^i whose pivot is
  // not a pivot of C^{i+1}. Pivot sets are nested, so this is a complement.
  std::vector<std::vector<RationalVector>> layer_reps(s);
  for (std::size_t i = 0; i < s; ++i) {
    const Subspace& big = series[i];
    const Subspace& small = series[i + 1];
    std::vector<bool> drop(static_cast<std::size_t>(n), false);
    for (Eigen::Index p : small.pivots()) drop[static_cast<std::size_t>(p)] = true;
    for (Eigen::Index r = 0; r < big.dim(); ++r)
      if (!drop[static_cast<std::size_t>(big.pivots()[static_cast<std::size_t>(r)])])
        layer_reps[i].push_back(RationalVector(big.basis().row(r).transpose()));
  }

  // New basis ordered by layer; weight[t] is the 1-based layer of f_t.
  RationalMatrix f(n, n);
  std::vector<std::size_t> weight(static_cast<std::size_t>(n));
  Eigen::Index col = 0;
  for (std::size_t i = 0; i < s; ++i)
    for (const RationalVector& v : layer_reps[i]) {
      f.col(col) = v;
      weight[static_cast<std::size_t>(col)] = i + 1;
      ++col;
    }
  const RationalMatrix f_inv = inverse(f);

  std::vector<StructureEntry> entries;
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = a + 1; b < n; ++b) {
      const std::size_t target = weight[static_cast<std::size_t>(a)] +
                                 weight[static_cast<std::size_t>(b)];
      RationalVector w = g.bracket(RationalVector(f.col(a)), RationalVector(f.col(b)));
      RationalVector coords = f_inv * w;
      for (Eigen::Index t = 0; t < n; ++t) {
        if (coords(t).is_zero()) continue;
        const std::size_t wt = weight[static_cast<std::size_t>(t)];
        if (wt < target)
          fail(errc::internal_inconsistency,
               "bracket of weights " + std::to_string(weight[static_cast<std::size_t>(a)]) +
                   " and " + std::to_string(weight[static_cast<std::size_t>(b)]) +
                   " has a component below weight " + std::to_string(target));
        if (wt == target)
          entries.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(t),
                             coords(t)});
      }
    }

  LieAlgebra graded = [&] {
    try {
      return from_structure_constants(n, entries, "gr(" + g.label() + ")");
    } catch (const JacobiViolation&) {
      fail(errc::internal_inconsistency, "associated graded bracket violates Jacobi");
    }
  }();

  std::vector<Subspace> layers;
  Eigen::Index offset = 0;
  for (std::size_t i = 0; i < s; ++i) {
    const Eigen::Index d = static_cast<Eigen::Index>(layer_reps[i].size());
    RationalMatrix rows = RationalMatrix::Zero(d, n);
    for (Eigen::Index r = 0; r < d; ++r) rows(r, offset + r) = Rational(1);
    layers.push_back(Subspace::span_of(rows, n));
    offset += d;
  }
  return GradedLieAlgebra(std::move(graded), std::move(layers));
}

// ---------------------------------------------------------------------------
// Products

LieAlgebra direct_product(const LieAlgebra& g, const LieAlgebra& h) {
  const Eigen::Index ng = g.dim();
  std::vector<StructureEntry> entries;
  for (const StructureEntry& e : g.entries()) entries.push_back(e);
  for (const StructureEntry& e : h.entries())
    entries.push_back({e.i + static_cast<int>(ng), e.j + static_cast<int>(ng),
                       e.k + static_cast<int>(ng), e.c});
  return from_structure_constants(ng + h.dim(), entries, g.label() + " x " + h.label());
}

LieAlgebra central_product(const LieAlgebra& g, const LieAlgebra& h, const Rational& scaling) {
  if (scaling.is_zero()) fail(errc::zero_scaling, "central product scaling must be nonzero");
  const Subspace zg = center(g);
  const Subspace zh = center(h);
  if (zg.dim() != 1 || zh.dim() != 1)
    fail(errc::unsupported_center,
         "central product requires 1-dimensional centers (got " + std::to_string(zg.dim()) +
             " and " + std::to_string(zh.dim()) + ")");

  const LieAlgebra prod = direct_product(g, h);
  const Eigen::Index n = prod.dim();
  RationalVector zg_prim = primitive_integer_vector(RationalVector(zg.basis().row(0).transpose()));
  RationalVector zh_prim = primitive_integer_vector(RationalVector(zh.basis().row(0).transpose()));
  RationalVector w = RationalVector::Zero(n);
  w.head(g.dim()) = zg_prim;
  w.tail(h.dim()) = scaling * zh_prim;

  // Quotient by the central line span(w): drop the pivot coordinate of w.
  RationalMatrix w_row(1, n);
  w_row.row(0) = w.transpose();
  Subspace line = Subspace::span_of(w_row, n);
  const Eigen::Index pc = line.pivots()[0];
  const RationalVector wn = RationalVector(line.basis().row(0).transpose());  // pivot entry 1

  std::vector<Eigen::Index> keep;
  for (Eigen::Index q = 0; q < n; ++q)
    if (q != pc) keep.push_back(q);

  auto project = [&](const RationalVector& v) {
    RationalVector reduced = v - v(pc) * wn;
    RationalVector out(n - 1);
    for (std::size_t t = 0; t < keep.size(); ++t) out(static_cast<Eigen::Index>(t)) = reduced(keep[t]);
    return out;
  };

  std::vector<StructureEntry> entries;
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      RationalVector br = project(prod.bracket(unit(n, keep[a]), unit(n, keep[b])));
      for (Eigen::Index k = 0; k < br.size(); ++k)
        if (!br(k).is_zero())
          entries.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(k), br(k)});
    }
  std::string label = g.label() + " xZ " + h.label();
  if (!scaling.is_one()) label += " [scaling " + scaling.str() + "]";
  return from_structure_constants(n - 1, entries, std::move(label));
}

LieAlgebra change_basis(const LieAlgebra& g, const RationalMatrix& p) {
  const Eigen::Index n = g.dim();
  if (p.rows() != n || p.cols() != n)
    fail(errc::index_out_of_range, "basis change matrix must be dim x dim");
  const RationalMatrix p_inv = inverse(p);
  std::vector<StructureEntry> entries;
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = a + 1; b < n; ++b) {
      RationalVector w = p_inv * g.bracket(RationalVector(p.col(a)), RationalVector(p.col(b)));
      for (Eigen::Index k = 0; k < n; ++k)
        if (!w(k).is_zero())
          entries.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(k), w(k)});
    }
  return from_structure_constants(n, entries, g.label() + " (new basis)");
}

}  // namespace nilcoh
