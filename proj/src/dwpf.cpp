#include "glmcr/dwpf.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "glmcr/functions.hpp"
#include "glmcr/linalg.hpp"

namespace glmcr {

Rat delta_upper(std::span<const Rat> x, const Coupling& c) {
  Rat r(1);
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (std::size_t k = j + 1; k < x.size(); ++k) r *= g(x[j], x[k], c);
  }
  return r;
}

Rat delta_lower(std::span<const Rat> x, const Coupling& c) {
  Rat r(1);
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (std::size_t k = 0; k < j; ++k) r *= g(x[j], x[k], c);
  }
  return r;
}

DeltaPair delta_products(std::span<const Rat> u, std::span<const Rat> v, const Coupling& c) {
  return {delta_upper(u, c), delta_lower(v, c)};
}

namespace {

void require_same_size(std::span<const Rat> u, std::span<const Rat> v) {
  if (u.size() != v.size()) {
    throw SizeMismatchError("K(u|v) needs #u = #v, got " + std::to_string(u.size()) + " and " +
                            std::to_string(v.size()));
  }
}

std::vector<Rat> shifted(std::span<const Rat> s, const Rat& d) {
  std::vector<Rat> out(s.begin(), s.end());
  for (auto& x : out) x += d;
  return out;
}

std::vector<Rat> concat(std::span<const Rat> a, std::span<const Rat> b) {
  std::vector<Rat> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<Rat> with(std::span<const Rat> a, const Rat& x) {
  std::vector<Rat> out(a.begin(), a.end());
  out.push_back(x);
  return out;
}

void compare(CheckResult& r, const std::string& what, const Rat& lhs, const Rat& rhs) {
  if (lhs != rhs) r.fail(what + ": lhs=" + lhs.str() + " rhs=" + rhs.str());
}

}  // namespace

Rat K(std::span<const Rat> u, std::span<const Rat> v, const Coupling& c) {
  require_same_size(u, v);
  const std::size_t n = u.size();
  if (n == 0) return Rat(1);
  const auto [dp, d] = delta_products(u, v, c);
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      Rat e = g(u[j], v[k], c);
      for (std::size_t l = 0; l < n; ++l) {
        if (l != k) e *= h(u[j], v[l], c);
      }
      m(j, k) = std::move(e);
    }
  }
  return dp * d * determinant(std::move(m));
}

Rat K_literal(std::span<const Rat> u, std::span<const Rat> v, const Coupling& c) {
  require_same_size(u, v);
  const std::size_t n = u.size();
  if (n == 0) return Rat(1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (u[j] == v[k]) throw PoleError("g-pole: u_" + std::to_string(j + 1) + " = v_" + std::to_string(k + 1) + " = " + u[j].str());
      if (h(u[j], v[k], c).is_zero()) {
        throw PoleError("h-zero: u_" + std::to_string(j + 1) + " - v_" + std::to_string(k + 1) + " + c = 0");
      }
    }
  }
  const auto [dp, d] = delta_products(u, v, c);
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) m(j, k) = g(u[j], v[k], c) / h(u[j], v[k], c);
  }
  return dp * d * hh(u, v, c) * determinant(std::move(m));
}

KArgs::KArgs(VarSet u_set, VarSet v_set, Coupling coupling)
    : u(std::move(u_set)), v(std::move(v_set)), c(std::move(coupling)) {
  require_same_size(u, v);
  for (std::size_t j = 0; j < u.size(); ++j) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (u[j] == v[k]) throw PoleError("K arguments collide: u_" + std::to_string(j + 1) + " = v_" + std::to_string(k + 1));
    }
  }
}

CheckResult K_shift_properties_check(const KArgs& a, const Rat& z) {
  CheckResult r;
  const Coupling& c = a.c;
  const Rat& cv = c.value();
  const Rat base = K(a.u, a.v, c);
  const long n = static_cast<long>(a.n());

  compare(r, "K({u,z-c}|{v,z}) = -K(u|v)", K(with(a.u, z - cv), with(a.v, z), c), -base);
  compare(r, "K({u,z}|{v,z+c}) = -K(u|v)", K(with(a.u, z), with(a.v, z + cv), c), -base);

  const Rat left_shift = K(shifted(a.u, -cv), a.v, c);
  const Rat right_shift = K(a.u, shifted(a.v, cv), c);
  const Rat swapped = sign_power(n) * K(a.v, a.u, c) / ff(a.v, a.u, c);
  compare(r, "K(u-c|v) = K(u|v+c)", left_shift, right_shift);
  compare(r, "K(u|v+c) = (-1)^n K(v|u)/f(v,u)", right_shift, swapped);

  compare(r, "K(u|v)[c->-c] = K(v|u)", K(a.u, a.v, c.negated()), K(a.v, a.u, c));
  r.terms = 5;
  return r;
}

CheckResult K_symmetry_check(const KArgs& a) {
  CheckResult r;
  const Rat base = K(a.u, a.v, a.c);
  std::vector<std::size_t> perm(a.n());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<Rat> moved(a.n());
  do {
    for (std::size_t i = 0; i < perm.size(); ++i) moved[i] = a.u[perm[i]];
    const Rat ku = K(moved, a.v, a.c);
    for (std::size_t i = 0; i < perm.size(); ++i) moved[i] = a.v[perm[i]];
    const Rat kv = K(a.u, moved, a.c);
    if (ku != base) r.fail("permuting u changes K: " + ku.str() + " vs " + base.str());
    if (kv != base) r.fail("permuting v changes K: " + kv.str() + " vs " + base.str());
    r.terms += 2;
    if (!r.ok) break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

ResidueReport K_residue_check(const VarSet& u, const VarSet& v, const Coupling& c) {
  ResidueReport rep;
  const std::size_t n = v.size();
  if (u.size() != n || n == 0) throw SizeMismatchError("K_residue_check needs #u = #v >= 1");
  const VarSet u_rest = u.without(n - 1);

  // Sample points t = u_n + k avoiding the poles v_k and collisions with u_rest.
  const std::size_t wanted = n + 2;
  std::vector<Rat> ts;
  std::vector<Rat> ps;
  std::vector<Rat> args(u.begin(), u.end());
  for (long k = 1; ts.size() < wanted; ++k) {
    if (k > 10000) throw ReconstructionError("could not find pole-free sample points");
    const Rat t = u[n - 1] + Rat(k);
    const bool bad = std::any_of(v.begin(), v.end(), [&](const Rat& x) { return x == t; }) ||
                     std::any_of(u_rest.begin(), u_rest.end(), [&](const Rat& x) { return x == t; });
    if (bad) continue;
    args[n - 1] = t;
    Rat p = K(args, v, c);
    for (const auto& vk : v) p *= t - vk;
    ts.push_back(t);
    ps.push_back(std::move(p));
  }

  // Fit with n+1 nodes (degree <= n allowed), confirm on the remaining node.
  const std::span<const Rat> fit_t(ts.data(), n + 1);
  const std::span<const Rat> fit_p(ps.data(), n + 1);
  const Vector coeffs = interpolate(fit_t, fit_p);
  if (evaluate_polynomial(coeffs, ts.back()) != ps.back()) {
    rep.check.fail("numerator is not a polynomial of degree <= n on the sampled points");
  }
  rep.numerator_degree = polynomial_degree(coeffs);
  if (rep.numerator_degree > static_cast<long>(n) - 1) {
    rep.check.fail("numerator degree " + std::to_string(rep.numerator_degree) + " exceeds n-1 = " +
                   std::to_string(n - 1));
  }

  for (std::size_t k = 0; k < n; ++k) {
    Rat denom(1);
    for (std::size_t l = 0; l < n; ++l) {
      if (l != k) denom *= v[k] - v[l];
    }
    const Rat residue = evaluate_polynomial(coeffs, v[k]) / denom;
    const VarSet v_rest = v.without(k);
    const std::vector<Rat> vk{v[k]};
    const Rat expected = c.value() * ff(vk, v_rest, c) * ff(u_rest, vk, c) * K(u_rest, v_rest, c);
    if (residue != expected) {
      rep.check.fail("residue at u_n = v_" + std::to_string(k + 1) + ": " + residue.str() + " expected " + expected.str());
    }
    rep.residues.push_back(residue);
    rep.expected.push_back(expected);
  }
  rep.check.terms = ts.size();
  return rep;
}

CheckResult cauchy_determinant_check(const VarSet& u, const VarSet& v, const Coupling& c) {
  CheckResult r;
  require_same_size(u, v);
  const std::size_t n = u.size();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) m(j, k) = g(u[j], v[k], c);
  }
  const Rat rhs = delta_lower(u, c) * delta_upper(v, c) * determinant(std::move(m));
  compare(r, "g(u,v) = Delta(u) Delta'(v) det g", gg(u, v, c), rhs);
  r.terms = 1;
  return r;
}

CheckResult reflection_rewrite_check(const Rat& u, const Rat& v, const Coupling& c) {
  CheckResult r;
  const std::vector<Rat> us{u};
  const std::vector<Rat> vs{v + c.value()};
  compare(r, "1/h(v,u) = -K(u|v+c)", Rat(1) / h(v, u, c), -K(us, vs, c));
  r.terms = 1;
  return r;
}

const char* lemma_name(Lemma id) {
  switch (id) {
    case Lemma::cauchy_sum:
      return "cauchy-sum";
    case Lemma::dwpf_sum:
      return "dwpf-sum";
    case Lemma::single_sum:
      return "single-sum";
    case Lemma::single_sum_dual:
      return "single-sum-dual";
    case Lemma::contour_sum:
      return "contour-sum";
    case Lemma::forget_sum:
      return "forget-sum";
    case Lemma::shifted_dwpf_sum:
      return "shifted-dwpf-sum";
    case Lemma::absorb_sum:
      return "absorb-sum";
  }
  return "?";
}

namespace {

void require_size(const VarSet& s, std::size_t n, const char* what) {
  if (s.size() != n) {
    throw SizeMismatchError(std::string("lemma parameter ") + what + " must have " + std::to_string(n) +
                            " elements, got " + std::to_string(s.size()));
  }
}

struct Digest {
  std::uint64_t h = 1469598103934665603ull;
  void add(std::uint64_t x) {
    h ^= x + 0x9e;
    h *= 1099511628211ull;
  }
  void add(const Split& s) {
    for (const auto& part : s.positions) {
      for (auto p : part) add(p);
      add(0xff);
    }
  }
  std::string str() const {
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 0; i < 16; ++i) out[15 - i] = hex[(h >> (4 * i)) & 0xf];
    return out;
  }
};

}  // namespace

LemmaOutcome lemma_sum_check(Lemma id, const LemmaParams& p, const Coupling& c) {
  LemmaOutcome out;
  Digest digest;
  Rat lhs(0);
  Rat rhs(0);
  std::size_t terms = 0;
  const Rat& cv = c.value();
  const std::vector<Rat> xi{p.xi};

  switch (id) {
    case Lemma::cauchy_sum: {
      require_size(p.w, p.u.size() + p.v.size(), "w");
      for (const auto& s : enumerate_bipartitions(p.w, p.u.size())) {
        const auto& wa = s.parts[0];
        const auto& wb = s.parts[1];
        lhs += gg(wa, p.u, c) * gg(wb, p.v, c) * gg(wb, wa, c);
        digest.add(s);
        ++terms;
      }
      rhs = gg(p.w, p.u, c) * gg(p.w, p.v, c) / gg(p.u, p.v, c);
      break;
    }
    case Lemma::dwpf_sum: {
      require_size(p.w, p.u.size() + p.v.size(), "w");
      for (const auto& s : enumerate_bipartitions(p.w, p.u.size())) {
        const auto& wa = s.parts[0];
        const auto& wb = s.parts[1];
        lhs += K(wa, p.u, c) * K(p.v, wb, c) * ff(wb, wa, c);
        digest.add(s);
        ++terms;
      }
      rhs = sign_power(static_cast<long>(p.u.size())) * ff(p.w, p.u, c) *
            K(concat(shifted(p.u, -cv), p.v), p.w, c);
      break;
    }
    case Lemma::single_sum: {
      require_size(p.v, p.u.size(), "v");
      for (const auto& s : enumerate_bipartitions(p.u, 1)) {
        const auto& ua = s.parts[0];
        const auto& ub = s.parts[1];
        lhs += K(p.v, with(ub, p.xi), c) * gg(ua, xi, c) * ff(ub, ua, c);
        digest.add(s);
        ++terms;
      }
      rhs = (ff(p.u, xi, c) - ff(p.v, xi, c)) * K(p.v, p.u, c);
      break;
    }
    case Lemma::single_sum_dual: {
      require_size(p.v, p.u.size(), "v");
      for (const auto& s : enumerate_bipartitions(p.v, 1)) {
        const auto& va = s.parts[0];
        const auto& vb = s.parts[1];
        lhs += K(with(vb, p.xi), p.u, c) * gg(va, xi, c) * ff(va, vb, c);
        digest.add(s);
        ++terms;
      }
      rhs = (ff(xi, p.u, c) - ff(xi, p.v, c)) * K(p.v, p.u, c);
      break;
    }
    case Lemma::contour_sum: {
      require_size(p.v, 1, "v");
      if (!p.w.empty()) {
        for (const auto& s : enumerate_bipartitions(p.w, 1)) {
          const auto& r = s.parts[0];
          const auto& sg = s.parts[1];
          lhs += ff(r, sg, c) * gg(p.v, r, c) * gg(xi, r, c);
          digest.add(s);
          ++terms;
        }
      }
      rhs = gg(xi, p.v, c) * (ff(p.v, p.w, c) - ff(xi, p.w, c));
      break;
    }
    case Lemma::forget_sum: {
      require_size(p.u, p.w.size(), "u");
      if (!p.w.empty()) {
        for (const auto& s : enumerate_bipartitions(p.w, 1)) {
          const auto& t = s.parts[0];
          const auto& sg = s.parts[1];
          lhs += K(with(sg, p.xi), p.u, c) * ff(t, sg, c) * gg(t, xi, c);
          digest.add(s);
          ++terms;
        }
      }
      rhs = K(p.w, p.u, c) * (ff(xi, p.u, c) - ff(xi, p.w, c));
      break;
    }
    case Lemma::shifted_dwpf_sum: {
      require_size(p.u, p.v.size() + 1, "u");
      for (const auto& s : enumerate_bipartitions(p.u, p.v.size())) {
        const auto& ua = s.parts[0];
        const auto& ut = s.parts[1];
        lhs += K(p.v, ua, c) * gg(ut, xi, c) * ff(ua, ut, c);
        digest.add(s);
        ++terms;
      }
      rhs = -ff(p.u, xi, c) * K(concat(std::vector<Rat>{p.xi - cv}, p.v), p.u, c);
      break;
    }
    case Lemma::absorb_sum: {
      require_size(p.w, p.u.size() + 1, "w");
      for (const auto& s : enumerate_bipartitions(p.w, p.u.size())) {
        const auto& wa = s.parts[0];
        const auto& r = s.parts[1];
        lhs += K(wa, p.u, c) * ff(r, wa, c) * ff(wa, xi, c) * gg(r, xi, c);
        digest.add(s);
        ++terms;
      }
      rhs = K(p.w, with(p.u, p.xi), c);
      break;
    }
  }

  out.check.terms = terms;
  if (lhs != rhs) out.check.fail(std::string(lemma_name(id)) + ": lhs=" + lhs.str() + " rhs=" + rhs.str());
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  out.split_digest = digest.str();
  return out;
}

}  // namespace glmcr
