#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glmcr/check.hpp"
#include "glmcr/rational.hpp"
#include "glmcr/varset.hpp"

namespace glmcr {

/// prod_{j<k} g(x_j, x_k)
Rat delta_upper(std::span<const Rat> x, const Coupling& c);
/// prod_{j>k} g(x_j, x_k)
Rat delta_lower(std::span<const Rat> x, const Coupling& c);

struct DeltaPair {
  Rat delta_prime;  ///< prod_{j<k} g(u_j, u_k)
  Rat delta;        ///< prod_{j>k} g(v_j, v_k)
};

DeltaPair delta_products(std::span<const Rat> u, std::span<const Rat> v, const Coupling& c);

/// Domain-wall partition function K(u|v).
///
/// Evaluated as Delta'(u) Delta(v) det[ g(u_j,v_k) prod_{l!=k} h(u_j,v_l) ],
/// which is the determinant formula with every row multiplied through by its
/// h-product. This form stays finite where u_j - v_k + c = 0, so points on
/// that locus (needed for the shift identities) evaluate normally. Poles at
/// u_j = v_k and repeated elements within a set raise PoleError.
Rat K(std::span<const Rat> u, std::span<const Rat> v, const Coupling& c);

/// The determinant formula taken literally: h(u,v) det[g/h]. Raises
/// PoleError naming the guard ("g-pole" or "h-zero") that fired.
Rat K_literal(std::span<const Rat> u, std::span<const Rat> v, const Coupling& c);

/// Arguments of K with their invariants checked on construction.
struct KArgs {
  VarSet u;
  VarSet v;
  Coupling c;
  KArgs(VarSet u_set, VarSet v_set, Coupling coupling);
  std::size_t n() const { return u.size(); }
};

/// Shift and reflection properties of K:
///  (a) K({u, z-c}|{v, z}) = K({u, z}|{v, z+c}) = -K(u|v)
///  (b) K(u-c|v) = K(u|v+c) = (-1)^n K(v|u)/f(v,u)
///  (c) K(u|v) with c -> -c equals K(v|u)
CheckResult K_shift_properties_check(const KArgs& args, const Rat& z);

/// K is symmetric in u and in v separately: every permutation of u (v held
/// fixed) and every permutation of v (u held fixed) gives the same value.
CheckResult K_symmetry_check(const KArgs& args);

struct ResidueReport {
  CheckResult check;
  long numerator_degree = -1;
  std::vector<Rat> residues;  ///< residue at u_n = v_k, k = 1..n
  std::vector<Rat> expected;
};

/// Treats K(u|v) as a rational function of the last element u_n. Samples it
/// at pole-free rational points, reconstructs the numerator P(t) of
/// K = P(t)/prod_k (t - v_k) by exact interpolation, checks deg P <= n-1
/// and that every residue P(v_k)/prod_{l!=k}(v_k - v_l) equals
/// c f(v_k, v\v_k) f(u\u_n, v_k) K(u\u_n | v\v_k).
ResidueReport K_residue_check(const VarSet& u, const VarSet& v, const Coupling& c);

/// g(u,v) = Delta_n(u) Delta'_n(v) det[g(u_j, v_k)].
CheckResult cauchy_determinant_check(const VarSet& u, const VarSet& v, const Coupling& c);

/// 1/h(v,u) = -K({u}|{v+c}): the rewrite used inside the summation proofs.
CheckResult reflection_rewrite_check(const Rat& u, const Rat& v, const Coupling& c);

enum class Lemma {
  cauchy_sum,        ///< sum g(wa,u) g(wb,v) g(wb,wa) = g(w,u) g(w,v) / g(u,v)
  dwpf_sum,          ///< sum K(wa|u) K(v|wb) f(wb,wa) = (-1)^m1 f(w,u) K({u-c, v}|w)
  single_sum,        ///< sum K(v|{ub, xi}) g(ua,xi) f(ub,ua) = (f(u,xi) - f(v,xi)) K(v|u)
  single_sum_dual,   ///< sum K({vb, xi}|u) g(va,xi) f(va,vb) = (f(xi,u) - f(xi,v)) K(v|u)
  contour_sum,       ///< sum f(r,s) g(t,r) g(x,r) = g(x,t) (f(t,w) - f(x,w)), w => {s, r}
  // instances of the above that appear in the recursion proof
  forget_sum,        ///< sum K({s, y}|u) f(t,s) g(t,y) = K(w|u)(f(y,u) - f(y,w)), w => {s, t}
  shifted_dwpf_sum,  ///< sum K(v|ua) g(ut,y) f(ua,ut) = -f(u,y) K({y-c, v}|u), u => {ua, ut}
  absorb_sum,        ///< sum K(wa|u) f(r,wa) f(wa,x) g(r,x) = K(w|{u, x}), w => {wa, r}
};

const char* lemma_name(Lemma id);

/// Parameter sets for a summation lemma. Which fields are used, and their
/// required sizes, depends on the lemma:
///  cauchy_sum, dwpf_sum : u (m1), v (m2), w (m1+m2)
///  single_sum(_dual)    : u, v (n each), xi
///  contour_sum          : w (remainder set), v = {t} (one element), xi = external point x
///  forget_sum           : w (n), u (n), xi = y
///  shifted_dwpf_sum     : u (n+1), v (n), xi = y
///  absorb_sum           : w (n+1), u (n), xi = x
struct LemmaParams {
  VarSet u;
  VarSet v;
  VarSet w;
  Rat xi;
};

struct LemmaOutcome {
  CheckResult check;
  Rat lhs;
  Rat rhs;
  /// FNV-1a digest of the enumerated split positions, for diffing failures.
  std::string split_digest;
};

/// Left side as a literal sum over enumerate_splits, right side from the
/// closed form; exact comparison.
LemmaOutcome lemma_sum_check(Lemma id, const LemmaParams& p, const Coupling& c);

}  // namespace glmcr
