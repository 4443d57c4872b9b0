#include <doctest.h>

#include <random>

#include "nilcoh/errors.hpp"
#include "nilcoh/linalg.hpp"
#include "oracles.hpp"

using namespace nilcoh;

namespace {

RationalMatrix make(std::initializer_list<std::initializer_list<int>> rows) {
  RationalMatrix m(static_cast<Eigen::Index>(rows.size()),
                   static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (int v : row) m(r, c++) = Rational(v);
    ++r;
  }
  return m;
}

}  // namespace

TEST_CASE("reduced row echelon form is canonical") {
  RationalMatrix m = make({{2, 4, 6}, {1, 2, 4}, {0, 0, 2}});
  auto pivots = reduced_row_echelon(m);
  CHECK(pivots == std::vector<Eigen::Index>{0, 2});
  CHECK(m.rows() == 2);
  CHECK(m(0, 0) == Rational(1));
  CHECK(m(0, 1) == Rational(2));
  CHECK(m(0, 2) == Rational(0));
  CHECK(m(1, 0) == Rational(0));
  CHECK(m(1, 2) == Rational(1));

  // Any generating set of the same row space reduces to the same matrix.
  RationalMatrix other = make({{1, 2, 3}, {3, 6, 11}});
  reduced_row_echelon(other);
  CHECK(other == m);
}

TEST_CASE("rref of zero and identity") {
  RationalMatrix z = RationalMatrix::Zero(3, 4);
  CHECK(reduced_row_echelon(z).empty());
  CHECK(z.rows() == 0);

  RationalMatrix id = RationalMatrix::Identity(4, 4);
  auto pivots = reduced_row_echelon(id);
  CHECK(pivots.size() == 4);
  CHECK(id == RationalMatrix::Identity(4, 4));
}

TEST_CASE("kernel basis solves m x = 0") {
  RationalMatrix m = make({{1, 2, 3}, {2, 4, 6}});
  RationalMatrix ker = kernel_basis(m);
  CHECK(ker.rows() == 2);
  for (Eigen::Index r = 0; r < ker.rows(); ++r)
    CHECK(is_exactly_zero(m * ker.row(r).transpose()));

  RationalMatrix full = RationalMatrix::Identity(3, 3);
  CHECK(kernel_basis(full).rows() == 0);

  RationalMatrix zero = RationalMatrix::Zero(2, 3);
  CHECK(kernel_basis(zero).rows() == 3);
}

TEST_CASE("exact inverse") {
  RationalMatrix m = make({{1, 2}, {3, 5}});
  RationalMatrix inv = inverse(m);
  CHECK(RationalMatrix(m * inv) == RationalMatrix::Identity(2, 2));
  CHECK(RationalMatrix(inv * m) == RationalMatrix::Identity(2, 2));

  RationalMatrix singular = make({{1, 2}, {2, 4}});
  CHECK_THROWS_AS(inverse(singular), Error);
}

TEST_CASE("primitive integer normalization") {
  RationalVector v(3);
  v << Rational(1, 2), Rational(0), Rational(-3, 4);
  RationalVector p = primitive_integer_vector(v);
  CHECK(p(0) == Rational(2));
  CHECK(p(1) == Rational(0));
  CHECK(p(2) == Rational(-3));

  RationalVector neg(2);
  neg << Rational(-2), Rational(4);
  RationalVector pn = primitive_integer_vector(neg);
  CHECK(pn(0) == Rational(1));
  CHECK(pn(1) == Rational(-2));

  RationalVector zero = RationalVector::Zero(2);
  CHECK(is_exactly_zero(primitive_integer_vector(zero)));
}

TEST_CASE("rref rank agrees with the dense oracle on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  for (int trial = 0; trial < 30; ++trial) {
    Eigen::Index rows = 1 + trial % 6;
    Eigen::Index cols = 1 + (trial * 7) % 6;
    RationalMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Rational(num(rng), den(rng));
    RationalMatrix copy = m;
    auto pivots = reduced_row_echelon(copy);
    CHECK(static_cast<Eigen::Index>(pivots.size()) == oracles::dense_rank(m));
  }
}
