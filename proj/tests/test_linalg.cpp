#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "glmcr/errors.hpp"
#include "glmcr/linalg.hpp"

using namespace glmcr;

namespace {

// Leibniz expansion; independent of the elimination code.
Rat leibniz(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  Rat total(0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Rat term = sign_power(static_cast<long>(inversions));
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

Matrix sample(std::size_t n, int salt) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int v = static_cast<int>((i * 7 + j * 3 + static_cast<std::size_t>(salt)) % 11) - 5;
      m(i, j) = (v % 3 == 0) ? Rat(0) : Rat(v, static_cast<std::int64_t>(j + 2));
    }
  return m;
}

Rat lagrange(std::span<const Rat> xs, std::span<const Rat> ys, const Rat& t) {
  Rat total(0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rat term = ys[i];
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) term *= (t - xs[j]) / (xs[i] - xs[j]);
    total += term;
  }
  return total;
}

}  // namespace

TEST_CASE("determinant agrees with the Leibniz expansion") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int salt = 0; salt < 4; ++salt) {
      const Matrix m = sample(n, salt);
      CHECK(determinant(m) == leibniz(m));
    }
  }
  Matrix singular(2, 2);
  singular(0, 0) = Rat(1);
  singular(0, 1) = Rat(2);
  singular(1, 0) = Rat(2);
  singular(1, 1) = Rat(4);
  CHECK(determinant(singular) == Rat(0));
}

TEST_CASE("products, transposes and differences") {
  const Matrix a = sample(4, 1), b = sample(4, 2);
  const Matrix ab = a * b;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Rat s(0);
      for (std::size_t k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      CHECK(ab(i, j) == s);
    }
  CHECK((a * b).transposed() == b.transposed() * a.transposed());
  CHECK(Matrix::identity(4) * a == a);
  CHECK(!first_difference(a, a));
  Matrix a2 = a;
  a2(2, 3) += Rat(1);
  const auto d = first_difference(a, a2);
  REQUIRE(d);
  CHECK(d->row == 2);
  CHECK(d->col == 3);
  const Vector x{Rat(1), Rat(-1, 2), Rat(0), Rat(3)};
  const Vector ax = a * x;
  const Vector xa = x * a;
  CHECK(ax == a * x);
  CHECK(xa == a.transposed() * x);
}

TEST_CASE("sparse and dense arithmetic agree") {
  const Matrix a = sample(5, 3), b = sample(5, 4);
  const SparseMatrix sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b);
  CHECK((sa * sb).to_dense() == a * b);
  CHECK((sa + sb).to_dense() == a + b);
  CHECK((sa - sb).to_dense() == a - b);
  CHECK((sa * Rat(2, 3)).to_dense() == a * Rat(2, 3));
  CHECK((sa - sa).nonzeros() == 0);
  CHECK(sa.nonzeros() == a.nonzeros());
  SparseMatrix acc(3);
  acc.accumulate(1, 2, Rat(1));
  acc.accumulate(1, 0, Rat(2));
  acc.accumulate(1, 2, Rat(-1));
  CHECK(acc.at(1, 2) == Rat(0));
  CHECK(acc.at(1, 0) == Rat(2));
}

TEST_CASE("null space and solve") {
  Matrix m(2, 3);
  m(0, 0) = Rat(1);
  m(0, 1) = Rat(2);
  m(0, 2) = Rat(3);
  m(1, 0) = Rat(2);
  m(1, 1) = Rat(4);
  m(1, 2) = Rat(7);
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(m * ns[0] == Vector(2));
  const Matrix a = sample(4, 1);
  REQUIRE(determinant(a) != Rat(0));
  const Vector b{Rat(1), Rat(2), Rat(-1, 3), Rat(5)};
  CHECK(a * solve(a, b) == b);
  CHECK_THROWS_AS(solve(Matrix(2, 2), Vector(2)), ReconstructionError);
}

TEST_CASE("interpolation reproduces the Lagrange polynomial") {
  const std::vector<Rat> xs{Rat(-2), Rat(1, 3), Rat(4), Rat(7, 2)};
  const std::vector<Rat> ys{Rat(5), Rat(-1), Rat(2, 9), Rat(0)};
  const Vector coeffs = interpolate(xs, ys);
  for (const Rat& t : {Rat(0), Rat(9, 7), Rat(-11, 2)}) CHECK(evaluate_polynomial(coeffs, t) == lagrange(xs, ys, t));
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(evaluate_polynomial(coeffs, xs[i]) == ys[i]);
  CHECK(polynomial_degree(Vector{Rat(1), Rat(0), Rat(2), Rat(0)}) == 2);
  CHECK(polynomial_degree(Vector{Rat(0)}) == -1);
  const std::vector<Rat> dup{Rat(1), Rat(1)};
  CHECK_THROWS_AS(interpolate(dup, dup), ReconstructionError);
}
