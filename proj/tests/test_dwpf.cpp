#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "glmcr/dwpf.hpp"
#include "glmcr/errors.hpp"
#include "glmcr/functions.hpp"
#include "glmcr/linalg.hpp"

using namespace glmcr;

namespace {

const Coupling one(Rat(1));

// Determinant formula evaluated by permutation expansion, with every factor
// written out: Delta'(u) Delta(v) h(u,v) det[g/h].
Rat k_oracle(const std::vector<Rat>& u, const std::vector<Rat>& v, const Rat& c) {
  const std::size_t n = u.size();
  auto gfun = [&](const Rat& x, const Rat& y) { return c / (x - y); };
  auto hfun = [&](const Rat& x, const Rat& y) { return (x - y + c) / c; };
  Rat pre(1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) pre *= gfun(u[j], u[k]);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < j; ++k) pre *= gfun(v[j], v[k]);
  for (const auto& a : u)
    for (const auto& b : v) pre *= hfun(a, b);
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  Rat det(0);
  do {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += p[i] > p[j];
    Rat term = sign_power(static_cast<long>(inv));
    for (std::size_t i = 0; i < n; ++i) term *= gfun(u[i], v[p[i]]) / hfun(u[i], v[p[i]]);
    det += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return pre * det;
}

VarSet vs(std::initializer_list<Rat> xs) { return make_varset(xs); }

}  // namespace

TEST_CASE("delta products") {
  CHECK(delta_upper(vs({Rat(4)}), one) == Rat(1));
  CHECK(delta_lower(vs({Rat(4)}), one) == Rat(1));
  CHECK(delta_upper(vs({Rat(3), Rat(1)}), one) == Rat(1, 2));
  CHECK(delta_lower(vs({Rat(3), Rat(1)}), one) == Rat(-1, 2));
  const DeltaPair d = delta_products(vs({Rat(3), Rat(1)}), vs({Rat(3), Rat(1)}), one);
  CHECK(d.delta_prime == Rat(1, 2));
  CHECK(d.delta == Rat(-1, 2));
  CHECK_THROWS_AS(delta_upper(std::vector<Rat>{Rat(2), Rat(2)}, one), PoleError);
}

TEST_CASE("K at small sizes") {
  CHECK(K(VarSet{}, VarSet{}, one) == Rat(1));
  CHECK(K(vs({Rat(2)}), vs({Rat(0)}), one) == Rat(1, 2));
  // frozen value, cross-checked by the expansion oracle
  const Rat k2 = K(vs({Rat(5), Rat(2)}), vs({Rat(0), Rat(1)}), one);
  CHECK(k2 == k_oracle({Rat(5), Rat(2)}, {Rat(0), Rat(1)}, Rat(1)));
  CHECK(k2 == Rat(1, 2));
}

TEST_CASE("K agrees with the expansion oracle at generic points") {
  const std::vector<Rat> pool{Rat(5, 3), Rat(-7, 5), Rat(11, 4), Rat(-1, 3), Rat(13, 5), Rat(9, 7), Rat(-17, 6), Rat(4),
                              Rat(23, 8), Rat(-29, 5)};
  const Coupling c(Rat(2, 3));
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Rat> u(pool.begin(), pool.begin() + static_cast<long>(n));
    std::vector<Rat> v(pool.begin() + 5, pool.begin() + 5 + static_cast<long>(n));
    CHECK(K(u, v, c) == k_oracle(u, v, c.value()));
    CHECK(K_literal(u, v, c) == K(u, v, c));
  }
}

TEST_CASE("h-zeros are removable; the literal form reports its guard") {
  // u_1 - v_2 + c = 0
  const VarSet u = vs({Rat(0), Rat(5, 2)});
  const VarSet v = vs({Rat(3, 7), Rat(1)});
  CHECK_NOTHROW(K(u, v, one));
  try {
    K_literal(u, v, one);
    FAIL("expected PoleError");
  } catch (const PoleError& e) {
    CHECK(std::string(e.what()).find("h-zero") != std::string::npos);
  }
  try {
    K_literal(vs({Rat(1)}), vs({Rat(1)}), one);
    FAIL("expected PoleError");
  } catch (const PoleError& e) {
    CHECK(std::string(e.what()).find("g-pole") != std::string::npos);
  }
  // K({z-c}|{z}) = -1
  CHECK(K(vs({Rat(2) - Rat(1)}), vs({Rat(2)}), one) == Rat(-1));
  CHECK_THROWS_AS(KArgs(vs({Rat(1)}), vs({Rat(1)}), one), PoleError);
  CHECK_THROWS_AS(KArgs(vs({Rat(1)}), vs({Rat(1), Rat(2)}), one), SizeMismatchError);
}

TEST_CASE("shift and reflection properties") {
  CHECK(K_shift_properties_check(KArgs(VarSet{}, VarSet{}, one), Rat(3)).ok);
  CHECK(K_shift_properties_check(KArgs(vs({Rat(5, 2)}), vs({Rat(-4, 3)}), one), Rat(7, 5)).ok);
  const Coupling c(Rat(-3, 4));
  CHECK(K_shift_properties_check(KArgs(vs({Rat(5, 2), Rat(1, 9)}), vs({Rat(-4, 3), Rat(6)}), c), Rat(7, 5)).ok);
  // (c) directly: K with -c equals K(v|u)
  const VarSet u = vs({Rat(5, 2), Rat(1, 9)}), v = vs({Rat(-4, 3), Rat(6)});
  CHECK(K(u, v, Coupling(Rat(3, 4))) == K(v, u, c));
}

TEST_CASE("symmetry under separate permutations") {
  const KArgs args(vs({Rat(1, 2), Rat(7, 3), Rat(-5), Rat(11, 4)}), vs({Rat(3), Rat(-2, 7), Rat(9, 5), Rat(-13, 6)}), one);
  const CheckResult r = K_symmetry_check(args);
  CHECK(r.ok);
  CHECK(r.terms == 48);
}

TEST_CASE("residues and decay in the last variable") {
  const ResidueReport r1 = K_residue_check(vs({Rat(3)}), vs({Rat(1, 2)}), one);
  CHECK(r1.check.ok);
  REQUIRE(r1.residues.size() == 1);
  CHECK(r1.residues[0] == Rat(1));
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<Rat> u, v;
    for (std::size_t k = 0; k < n; ++k) {
      u.push_back(Rat(static_cast<std::int64_t>(7 * k + 2), 3));
      v.push_back(Rat(-static_cast<std::int64_t>(5 * k + 1), 4));
    }
    const ResidueReport r = K_residue_check(make_varset(u), make_varset(v), Coupling(Rat(2, 5)));
    CHECK(r.check.ok);
    CHECK(r.numerator_degree <= static_cast<long>(n) - 1);
    CHECK(r.residues == r.expected);
  }
}

TEST_CASE("Cauchy determinant") {
  CHECK(cauchy_determinant_check(vs({Rat(2)}), vs({Rat(5)}), one).ok);
  CHECK(cauchy_determinant_check(vs({Rat(4), Rat(1)}), vs({Rat(0), Rat(2)}), one).ok);
  CHECK(cauchy_determinant_check(vs({Rat(4), Rat(1, 3), Rat(-7, 2)}), vs({Rat(0), Rat(2), Rat(9, 4)}), Coupling(Rat(3))).ok);
  // n=2 by hand: g(u,v) = Delta(u) Delta'(v) det[g]
  const Rat lhs = gg(vs({Rat(4), Rat(1)}), vs({Rat(0), Rat(2)}), one);
  CHECK(lhs == Rat(1, 4) * Rat(1, 2) * Rat(1) * Rat(-1));
}

TEST_CASE("reflection rewrite") {
  CHECK(reflection_rewrite_check(Rat(3), Rat(1, 2), one).ok);
  CHECK(reflection_rewrite_check(Rat(-5, 3), Rat(7), Coupling(Rat(2, 9))).ok);
}

TEST_CASE("summation lemmas at small sizes") {
  const Coupling c(Rat(1, 2));
  SUBCASE("cauchy sum, one plus one") {
    const LemmaParams p{vs({Rat(3)}), vs({Rat(-1)}), vs({Rat(5, 2), Rat(7)}), Rat(0)};
    const LemmaOutcome out = lemma_sum_check(Lemma::cauchy_sum, p, c);
    CHECK(out.check.ok);
    CHECK(out.check.terms == 2);
    const VarSet w = p.w;
    CHECK(out.rhs == gg(w, p.u, c) * gg(w, p.v, c) / gg(p.u, p.v, c));
  }
  SUBCASE("dwpf sum, one plus zero") {
    const LemmaParams p{vs({Rat(3)}), VarSet{}, vs({Rat(7, 3)}), Rat(0)};
    const LemmaOutcome out = lemma_sum_check(Lemma::dwpf_sum, p, c);
    CHECK(out.check.ok);
    CHECK(out.check.terms == 1);
    CHECK(out.lhs == K(p.w, p.u, c));
    CHECK(out.lhs == Rat(-3, 4));
    CHECK(out.rhs == -f(Rat(7, 3), Rat(3), c) * K(vs({Rat(3) - c.value()}), p.w, c));
  }
  SUBCASE("single sum, n = 1") {
    const LemmaParams p{vs({Rat(3)}), vs({Rat(-2, 3)}), VarSet{}, Rat(9, 4)};
    const LemmaOutcome out = lemma_sum_check(Lemma::single_sum, p, c);
    CHECK(out.check.ok);
    CHECK(out.check.terms == 1);
    CHECK(out.rhs == (f(Rat(3), p.xi, c) - f(Rat(-2, 3), p.xi, c)) * K(p.v, p.u, c));
  }
  SUBCASE("larger instances of every lemma") {
    const VarSet a = vs({Rat(1, 3), Rat(-7, 4), Rat(5)});
    const VarSet b = vs({Rat(11, 6), Rat(-3), Rat(2, 7)});
    const VarSet w = vs({Rat(9, 5), Rat(-13, 8), Rat(17, 3)});
    CHECK(lemma_sum_check(Lemma::cauchy_sum, {a, b, join(w, vs({Rat(40), Rat(-31), Rat(22, 3)})), Rat(0)}, c).check.ok);
    CHECK(lemma_sum_check(Lemma::dwpf_sum, {a, b, join(w, vs({Rat(40), Rat(-31), Rat(22, 3)})), Rat(0)}, c).check.ok);
    CHECK(lemma_sum_check(Lemma::single_sum, {a, b, VarSet{}, Rat(13, 2)}, c).check.ok);
    CHECK(lemma_sum_check(Lemma::single_sum_dual, {a, b, VarSet{}, Rat(13, 2)}, c).check.ok);
    CHECK(lemma_sum_check(Lemma::contour_sum, {VarSet{}, vs({Rat(4, 9)}), w, Rat(13, 2)}, c).check.ok);
    CHECK(lemma_sum_check(Lemma::forget_sum, {a, VarSet{}, w, Rat(13, 2)}, c).check.ok);
    CHECK(lemma_sum_check(Lemma::shifted_dwpf_sum, {a, b.without(2), VarSet{}, Rat(13, 2)}, c).check.ok);
    CHECK(lemma_sum_check(Lemma::absorb_sum, {a.without(0), VarSet{}, w, Rat(13, 2)}, c).check.ok);
  }
  SUBCASE("size errors") {
    CHECK_THROWS_AS(lemma_sum_check(Lemma::cauchy_sum, {vs({Rat(1)}), vs({Rat(2)}), vs({Rat(3)}), Rat(0)}, c),
                    SizeMismatchError);
  }
}
