#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "nilcoh/catalog.hpp"
#include "nilcoh/lie_algebra.hpp"
#include "oracles.hpp"

using namespace nilcoh;

namespace {

std::vector<Eigen::Index> series_dims(const LieAlgebra& g) {
  std::vector<Eigen::Index> dims;
  for (const Subspace& s : lower_central_series(g)) dims.push_back(s.dim());
  return dims;
}

bool same_constants(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  const auto ea = a.entries();
  const auto eb = b.entries();
  if (ea.size() != eb.size()) return false;
  for (std::size_t t = 0; t < ea.size(); ++t)
    if (ea[t].i != eb[t].i || ea[t].j != eb[t].j || ea[t].k != eb[t].k || ea[t].c != eb[t].c)
      return false;
  return true;
}

}  // namespace

TEST_CASE("subspace spans are canonical") {
  RationalMatrix vecs(2, 3);
  vecs << Rational(2), Rational(0), Rational(4), Rational(1), Rational(0), Rational(2);
  Subspace s = Subspace::span_of(vecs, 3);
  CHECK(s.dim() == 1);
  CHECK(s.pivots() == std::vector<Eigen::Index>{0});
  RationalVector v(3);
  v << Rational(-3), Rational(0), Rational(-6);
  CHECK(s.contains(v));
  v(1) = Rational(1);
  CHECK(!s.contains(v));

  CHECK(Subspace::full(3).dim() == 3);
  CHECK(Subspace(3).dim() == 0);
  CHECK(Subspace::full(3).contains(s));
  CHECK(!s.contains(Subspace::full(3)));
}

TEST_CASE("construction validates and stores antisymmetrically") {
  LieAlgebra h3 = from_structure_constants(3, {{0, 1, 2, Rational(1)}}, "h3");
  CHECK(h3.dim() == 3);
  CHECK(h3.structure_constant(0, 1, 2) == Rational(1));
  CHECK(h3.structure_constant(1, 0, 2) == Rational(-1));
  CHECK(h3.structure_constant(0, 0, 2) == Rational(0));

  LieAlgebra ab = from_structure_constants(2, {}, "ab2");
  CHECK(ab.dim() == 2);
  CHECK(ab.entries().empty());

  CHECK_THROWS_AS(from_structure_constants(0, {}), Error);
  CHECK_THROWS_AS(from_structure_constants(3, {{1, 0, 2, Rational(1)}}), Error);
  CHECK_THROWS_AS(from_structure_constants(3, {{0, 1, 3, Rational(1)}}), Error);
  CHECK_THROWS_AS(
      from_structure_constants(3, {{0, 1, 2, Rational(1)}, {0, 1, 2, Rational(2)}}), Error);
}

TEST_CASE("jacobi violation carries the failing triple and residual") {
  // [e1,e2] = e3, [e1,e3] = e1: the Jacobi sum on (e1,e2,e3) is -e3.
  const std::vector<StructureEntry> bad = {{0, 1, 2, Rational(1)}, {0, 2, 0, Rational(1)}};
  const std::vector<oracles::RawEntry> raw = {{0, 1, 2, 1}, {0, 2, 0, 1}};
  auto sum = oracles::jacobi_sum(3, raw, 0, 1, 2);
  CHECK(sum[0] == 0);
  CHECK(sum[1] == 0);
  CHECK(sum[2] == -1);

  try {
    from_structure_constants(3, bad);
    FAIL("expected JacobiViolation");
  } catch (const JacobiViolation& e) {
    CHECK(e.code() == errc::jacobi_violation);
    CHECK(e.triple == std::array<int, 3>{0, 1, 2});
    CHECK(e.residual(2) == Rational(-1));
  }
}

TEST_CASE("a bracket table that expands to zero is accepted") {
  // [e1,e2] = e1, [e1,e3] = e2, [e2,e3] = e3: the brute-force Jacobi
  // expansion on (e1,e2,e3) cancels exactly, so this is a Lie algebra.
  // It is far from nilpotent ([g, g] = g), which the series detects.
  const std::vector<oracles::RawEntry> raw = {{0, 1, 0, 1}, {0, 2, 1, 1}, {1, 2, 2, 1}};
  auto sum = oracles::jacobi_sum(3, raw, 0, 1, 2);
  for (const auto& v : sum) CHECK(v == 0);

  LieAlgebra g = from_structure_constants(
      3, {{0, 1, 0, Rational(1)}, {0, 2, 1, Rational(1)}, {1, 2, 2, Rational(1)}}, "perfect");
  CHECK(!is_nilpotent(g));
  CHECK_THROWS_AS(lower_central_series(g), Error);
}

TEST_CASE("lower central series dims") {
  CHECK(series_dims(catalog(Family::filiform_l, 3).algebra) ==
        std::vector<Eigen::Index>{3, 1, 0});
  // gr(l_5): [Y_1, Y_j] = (j-1) Y_{j+1} gives C^2 = <Y3,Y4,Y5>,
  // C^3 = <Y4,Y5>, C^4 = <Y5>, C^5 = 0.
  CHECK(series_dims(catalog(Family::model_filiform, 5).algebra) ==
        std::vector<Eigen::Index>{5, 3, 2, 1, 0});
  CHECK(series_dims(catalog(Family::abelian, 4).algebra) == std::vector<Eigen::Index>{4, 0});
}

TEST_CASE("series dimensions strictly decrease until zero") {
  std::vector<LieAlgebra> algebras = fixtures::catalog_algebras(6);
  for (const LieAlgebra& g : fixtures::random_fixtures()) algebras.push_back(g);
  for (const LieAlgebra& g : algebras) {
    const std::vector<Eigen::Index> dims = series_dims(g);
    CHECK(dims.front() == g.dim());
    CHECK(dims.back() == 0);
    for (std::size_t i = 1; i < dims.size(); ++i) CHECK(dims[i] < dims[i - 1]);
  }
}

TEST_CASE("nilpotency class") {
  CHECK(nilpotency_class(catalog(Family::filiform_l, 3).algebra) == 2);
  for (int n = 3; n <= 7; ++n)
    CHECK(nilpotency_class(catalog(Family::model_filiform, n).algebra) == n - 1);
  CHECK(nilpotency_class(catalog(Family::abelian, 5).algebra) == 1);

  LieAlgebra solvable = from_structure_constants(2, {{0, 1, 1, Rational(1)}}, "aff");
  CHECK(!is_nilpotent(solvable));
  CHECK_THROWS_AS(nilpotency_class(solvable), Error);
}

TEST_CASE("center") {
  Subspace zh3 = center(catalog(Family::filiform_l, 3).algebra);
  CHECK(zh3.dim() == 1);
  CHECK(zh3.pivots() == std::vector<Eigen::Index>{2});

  // l_5: [e_j, v] = 0 forces the coordinates on e_1..e_4 to vanish.
  Subspace zl5 = center(catalog(Family::filiform_l, 5).algebra);
  CHECK(zl5.dim() == 1);
  CHECK(zl5.pivots() == std::vector<Eigen::Index>{4});

  CHECK(center(catalog(Family::abelian, 4).algebra).dim() == 4);
}

TEST_CASE("carnotification of filiform algebras is the model filiform") {
  for (int n = 4; n <= 7; ++n) {
    GradedLieAlgebra gr = carnotification(catalog(Family::filiform_l, n).algebra);
    std::vector<Eigen::Index> expected_layers{2};
    for (int i = 2; i <= n - 1; ++i) expected_layers.push_back(1);
    CHECK(gr.layer_dims() == expected_layers);
    CHECK(same_constants(gr.algebra(), catalog(Family::model_filiform, n).algebra));
  }
}

TEST_CASE("carnotification fixes already-graded algebras") {
  for (int n = 2; n <= 6; ++n) {
    const LieAlgebra g = catalog(Family::model_filiform, n).algebra;
    GradedLieAlgebra gr = carnotification(g);
    CHECK(same_constants(gr.algebra(), g));
    CHECK(gr.layer_dims() == catalog(Family::model_filiform, n).graded->layer_dims());
  }
  const LieAlgebra ab = catalog(Family::abelian, 3).algebra;
  GradedLieAlgebra gr_ab = carnotification(ab);
  CHECK(gr_ab.layer_dims() == std::vector<Eigen::Index>{3});
  CHECK(same_constants(gr_ab.algebra(), ab));
}

TEST_CASE("carnotification invariants") {
  std::mt19937 rng(11);
  std::vector<LieAlgebra> algebras = {
      catalog(Family::filiform_l, 6).algebra,
      central_product(catalog(Family::filiform_l, 5).algebra,
                      catalog(Family::filiform_l, 3).algebra),
      fixtures::random_two_step(rng, 3, 2),
      change_basis(catalog(Family::filiform_l, 5).algebra, fixtures::random_unimodular(rng, 5)),
  };
  for (const LieAlgebra& g : algebras) {
    GradedLieAlgebra gr = carnotification(g);
    CHECK(gr.algebra().dim() == g.dim());
    CHECK(nilpotency_class(gr.algebra()) == nilpotency_class(g));
    GradedLieAlgebra gr2 = carnotification(gr.algebra());
    CHECK(gr2.layer_dims() == gr.layer_dims());
    CHECK(same_constants(gr2.algebra(), gr.algebra()));
  }
}

TEST_CASE("carnotification of the central product l5 xZ l3") {
  LieAlgebra cp = central_product(catalog(Family::filiform_l, 5).algebra,
                                  catalog(Family::filiform_l, 3).algebra);
  CHECK(cp.dim() == 7);
  GradedLieAlgebra gr = carnotification(cp);
  CHECK(gr.layer_dims() == std::vector<Eigen::Index>{4, 1, 1, 1});
}

TEST_CASE("direct products") {
  LieAlgebra r1 = catalog(Family::abelian, 1).algebra;
  LieAlgebra r2 = direct_product(r1, r1);
  CHECK(r2.dim() == 2);
  CHECK(r2.entries().empty());

  LieAlgebra l5xl2 = direct_product(catalog(Family::filiform_l, 5).algebra,
                                    catalog(Family::filiform_l, 2).algebra);
  CHECK(l5xl2.dim() == 7);
  CHECK(nilpotency_class(l5xl2) == 4);

  LieAlgebra h3 = catalog(Family::heisenberg, 1).algebra;
  LieAlgebra h3xh3 = direct_product(h3, h3);
  CHECK(h3xh3.dim() == 6);
  CHECK(center(h3xh3).dim() == 2);
}

TEST_CASE("central products") {
  LieAlgebra l5 = catalog(Family::filiform_l, 5).algebra;
  LieAlgebra l3 = catalog(Family::filiform_l, 3).algebra;
  CHECK(central_product(l5, l3).dim() == 7);

  LieAlgebra h3 = catalog(Family::heisenberg, 1).algebra;
  LieAlgebra h3zh3 = central_product(h3, h3);
  CHECK(h3zh3.dim() == 5);
  CHECK(center(h3zh3).dim() == 1);

  CHECK_THROWS_AS(central_product(l5, l3, Rational(0)), Error);
  CHECK_THROWS_AS(central_product(l5, catalog(Family::abelian, 2).algebra), Error);
  CHECK_THROWS_AS(central_product(direct_product(h3, h3), l3), Error);
}

TEST_CASE("catalog families") {
  CHECK(same_constants(catalog(Family::filiform_l, 3).algebra,
                       from_structure_constants(3, {{0, 1, 2, Rational(1)}})));
  CHECK(catalog(Family::filiform_l, 2).algebra.entries().empty());

  const CatalogEntry mf5 = catalog(Family::model_filiform, 5);
  REQUIRE(mf5.graded.has_value());
  CHECK(nilpotency_class(mf5.algebra) == 4);
  CHECK(mf5.graded->layer_dims() == std::vector<Eigen::Index>{2, 1, 1, 1});

  CHECK(catalog(Family::abelian, 4).algebra.entries().empty());
  CHECK(catalog(Family::abelian, 4).algebra.dim() == 4);

  CHECK(catalog(Family::heisenberg, 2).algebra.dim() == 5);
  CHECK(center(catalog(Family::heisenberg, 2).algebra).dim() == 1);

  CHECK(catalog("filiform-l", 3).algebra.dim() == 3);
  CHECK(catalog("model_filiform", 4).algebra.dim() == 4);
  CHECK_THROWS_AS(catalog("free_nilpotent", 3), Error);
  CHECK_THROWS_AS(catalog(Family::abelian, 0), Error);
}

TEST_CASE("homogeneous dimension") {
  CHECK(homogeneous_dimension(*catalog(Family::abelian, 5).graded) == 5);
  CHECK(homogeneous_dimension(carnotification(catalog(Family::heisenberg, 1).algebra)) == 4);
  for (int n : {5, 7, 10})
    CHECK(homogeneous_dimension(*catalog(Family::model_filiform, n).graded) ==
          1 + n * (n - 1) / 2);
}

TEST_CASE("homogeneous dimension is at least the dimension, equal iff abelian") {
  std::mt19937 rng(3);
  std::vector<LieAlgebra> algebras = fixtures::catalog_algebras(6);
  algebras.push_back(fixtures::random_two_step(rng, 3, 2));
  for (const LieAlgebra& g : algebras) {
    GradedLieAlgebra gr = carnotification(g);
    const int hd = homogeneous_dimension(gr);
    CHECK(hd >= g.dim());
    const bool abelian = g.entries().empty();
    CHECK((hd == g.dim()) == abelian);
  }
}

TEST_CASE("graded algebra validation rejects bad layers") {
  LieAlgebra h3 = catalog(Family::filiform_l, 3).algebra;
  RationalMatrix m1(1, 3), m2(2, 3);
  m1 << Rational(1), Rational(0), Rational(0);
  m2 << Rational(0), Rational(1), Rational(0), Rational(0), Rational(0), Rational(1);
  std::vector<Subspace> bad_layers = {Subspace::span_of(m1, 3), Subspace::span_of(m2, 3)};
  CHECK_THROWS_AS(GradedLieAlgebra(h3, bad_layers), Error);
}

TEST_CASE("change of basis keeps invariants") {
  std::mt19937 rng(5);
  for (const char* name : {"filiform_l", "heisenberg"}) {
    LieAlgebra g = catalog(name, name[0] == 'f' ? 5 : 2).algebra;
    for (int trial = 0; trial < 3; ++trial) {
      LieAlgebra h = change_basis(g, fixtures::random_unimodular(rng, g.dim()));
      CHECK(h.dim() == g.dim());
      CHECK(nilpotency_class(h) == nilpotency_class(g));
      CHECK(center(h).dim() == center(g).dim());
    }
  }
}
