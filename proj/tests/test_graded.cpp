#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glmcr/errors.hpp"
#include "glmcr/functions.hpp"
#include "glmcr/graded.hpp"

using namespace glmcr;

namespace {

std::size_t pair_index(int i, int j) {
  const int idx[2] = {i, j};
  return state_index(idx, 2);
}

SparseMatrix unit3(int a, int b) {
  SparseMatrix m(3);
  m.push(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1), Rat(1));
  return m;
}

}  // namespace

TEST_CASE("parity and state indexing") {
  CHECK(parity(1) == 0);
  CHECK(parity(2) == 0);
  CHECK(parity(3) == 1);
  CHECK(power_of_three(4) == 81);
  const int s[3] = {3, 1, 2};
  CHECK(state_index(s, 3) == 2 * 9 + 0 * 3 + 1);
}

TEST_CASE("graded permutation") {
  const SparseMatrix p = graded_permutation();
  CHECK(p.at(pair_index(3, 1), pair_index(1, 3)) == Rat(1));
  CHECK(p.at(pair_index(3, 3), pair_index(3, 3)) == Rat(-1));
  CHECK(p.at(pair_index(2, 1), pair_index(1, 2)) == Rat(1));
  CHECK(p.nonzeros() == 9);
  for (std::size_t r = 0; r < 9; ++r)
    for (const auto& e : p.row(r)) CHECK((e.value == Rat(1) || e.value == Rat(-1)));
  CHECK(p * p == SparseMatrix::identity(9));
}

TEST_CASE("R-matrix") {
  const Coupling c(Rat(1));
  const Rat u(5, 2), v(-1, 3);
  const SparseMatrix r = r_matrix(u, v, c);
  CHECK(r - SparseMatrix::identity(9) == g(u, v, c) * graded_permutation());
  // u - v = -c gives g = -1
  const SparseMatrix r2 = r_matrix(Rat(0), Rat(1), c);
  CHECK(r2.at(pair_index(3, 3), pair_index(3, 3)) == Rat(2));
  CHECK(r * r_matrix(v, u, c) == SparseMatrix::identity(9) * (f(u, v, c) * f(v, u, c)));
  // the even-even block is the ungraded six-vertex structure
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) {
          Rat expect = (i == k && j == l) ? Rat(1) : Rat(0);
          if (i == l && j == k) expect += g(u, v, c);
          CHECK(r.at(pair_index(i, j), pair_index(k, l)) == expect);
        }
  CHECK_THROWS_AS(r_matrix(u, u, c), PoleError);
}

TEST_CASE("embedding signs") {
  CHECK(graded_embed(SparseMatrix::identity(3), 1, 3) == SparseMatrix::identity(27));
  CHECK(graded_embed(SparseMatrix::identity(9), 0, 2, 3) == SparseMatrix::identity(27));
  // even operators at different sites commute
  const SparseMatrix e11 = graded_embed(unit3(1, 1), 0, 3);
  const SparseMatrix e21 = graded_embed(unit3(2, 1), 2, 3);
  CHECK(e11 * e21 == e21 * e11);
  // odd operators at different sites anticommute
  const SparseMatrix o1 = graded_embed(unit3(1, 3), 0, 3);
  const SparseMatrix o2 = graded_embed(unit3(3, 2), 2, 3);
  CHECK(o1 * o2 == Rat(-1) * (o2 * o1));
  CHECK(o1 * o2 != SparseMatrix(27));
  // a site to the left in state 3 flips the sign of an odd unit
  const int before[2] = {3, 1};
  const int after[2] = {3, 3};
  CHECK(embed_unit(3, 1, 1, 2).at(state_index(after, 2), state_index(before, 2)) == Rat(-1));
  CHECK_THROWS_AS(graded_embed(unit3(1, 1), 3, 3), RangeError);
  CHECK_THROWS_AS(graded_embed(SparseMatrix::identity(9), 1, 1, 3), RangeError);
}

TEST_CASE("graded Yang-Baxter equation") {
  const Coupling c(Rat(3, 2));
  const Rat pts[][3] = {{Rat(1), Rat(5, 2), Rat(-7, 3)}, {Rat(-4), Rat(2, 9), Rat(11, 5)}, {Rat(0), Rat(13, 4), Rat(-1, 6)}};
  for (const auto& p : pts) {
    const SparseMatrix r12 = graded_embed(r_matrix(p[0], p[1], c), 0, 1, 3);
    const SparseMatrix r13 = graded_embed(r_matrix(p[0], p[2], c), 0, 2, 3);
    const SparseMatrix r23 = graded_embed(r_matrix(p[1], p[2], c), 1, 2, 3);
    CHECK(r12 * r13 * r23 == r23 * r13 * r12);
  }
}
