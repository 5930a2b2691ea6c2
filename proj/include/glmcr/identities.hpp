#pragma once

#include <array>
#include <string>
#include <vector>

#include "glmcr/check.hpp"
#include "glmcr/monodromy.hpp"

namespace glmcr {

/// Multiple commutation relations. Row relations (first six) hold for
/// #u = n, #v = m with sums over w = {u, v} => {w_a, w_b}, #w_a = n:
///   TijTik  T_ij(u)T_ik(v)   = (-1)^n sum K(w_a|u+c) f(w_b,w_a) T_ik(w_b)T_ij(w_a)          i,j,k < 3
///   Ti3Tj3  T_i3(u)T_j3(v)   = (-1)^n h(v,u) sum K(u|w_a+c) g(w_a,w_b) T_j3(w_b)T_i3(w_a)  i,j < 3
///   TijTi3  T_ij(u)T_i3(v)   = sum h(w_b,u) g(w_b,w_a) T_i3(w_b)T_ij(w_a)                  i,j < 3
///   Ti3Tij  T_i3(u)T_ij(v)   = sum h(v,w_a) g(w_b,w_a) T_ij(w_b)T_i3(w_a)                  i,j < 3
///   T33T3i  T_33(u)T_3i(v)   = sum h(u,w_b) g(w_a,w_b) T_3i(w_b)T_33(w_a)                  i < 3
///   T3iT33  T_3i(u)T_33(v)   = sum h(w_a,v) g(w_a,w_b) T_33(w_b)T_3i(w_a)                  i < 3
/// Odd products are the symmetric ones. Column special cases, #v = 1, sums over u => {u_r, u_s}, #u_r = 1:
///   T22T12  T_22(v)T_12(u) = f(v,u)T_12(u)T_22(v) + sum g(u_r,v) f(u_r,u_s) T_12(v)T_12(u_s)T_22(u_r)
///   T23T13  T_23(u)T_13(v) = (-1)^b f(v,u)T_13(v)T_23(u) + sum g(v,u_r) g(u_s,u_r) h(v,u_s) T_13(u_r)T_23({v,u_s})
///           (as printed the last T_13 carries the argument v; see Reading)
/// and, with #u = 1, sums over v => {v_a, v_b}, #v_a = 1:
///   CommA1  [T_12(u), T_23(v)] = sum g(u,v_a) g(v_b,v_a) (T_13(u)T_23(v_b)T_22(v_a) - T_13(v_a)T_23(v_b)T_22(u))
enum class McrEquation { TijTik, Ti3Tj3, TijTi3, Ti3Tij, T33T3i, T3iT33, T22T12, T23T13, CommA1 };

/// Which reading of a formula whose printed form is suspect is evaluated.
enum class Reading { corrected, as_printed };

const char* mcr_name(McrEquation eq);

struct McrCase {
  McrEquation eq;
  std::array<int, 3> idx{1, 1, 1};  ///< (i, j, k); unused entries ignored
  VarSet u;
  VarSet v;
  Reading reading = Reading::corrected;
};

/// Index triples allowed for an equation; a single {0,0,0} placeholder for
/// the index-free ones.
std::vector<std::array<int, 3>> admissible_indices(McrEquation eq);

struct McrSides {
  Matrix lhs;
  Matrix rhs;
  std::size_t terms = 0;
};

/// Left side as the literal product, right side as the brute-force partition
/// sum. RangeError for inadmissible indices, SizeMismatchError for wrong set sizes.
McrSides mcr_sides(const Monodromy& t, const McrCase& mc);
CheckResult mcr_check(const Monodromy& t, const McrCase& mc);

/// X_{a,b}(u,v) = sum g(v_a,u_a) f(u_a,u_b) g(v_b,v_a) h(u_a,u_a) T13(u_a) T12(u_b) T23(v_b) T22(v_a)
/// restricted to partitions with #u_a = #v_a = n >= min_n.
Matrix x_operator(const Monodromy& t, const VarSet& u, const VarSet& v, std::size_t min_n = 0);
/// Y_{a,b}(u,v) = sum K(v_a|u_a) f(u_a,u_b) g(v_b,v_a) T13(v_a) T23(v_b) T12(u_b) T22(u_a), #u_a = #v_a = n >= min_n.
Matrix y_operator(const Monodromy& t, const VarSet& u, const VarSet& v, std::size_t min_n = 0);

enum class XYKind { X, Y };
const char* xy_name(XYKind kind);

CheckResult xy_equivalence_check(const Monodromy& t, const VarSet& u, const VarSet& v);

/// Op_{a,b}(u,v) = T12(u_a) Op_{a-1,b}(u\u_a, v)
///   + sum_{#v_r=1} g(v_r,u_a) f(v_r,u\u_a) g(v\v_r,v_r) T13(u_a) Op_{a-1,b-1}(u\u_a, v\v_r) T22(v_r)
/// where u_a is the last element of u. Requires a >= 1.
CheckResult recursion_check(const Monodromy& t, XYKind kind, const VarSet& u, const VarSet& v);

/// X_{0,b}(0,v) = Y_{0,b}(0,v) = T23(v).
CheckResult xy_base_check(const Monodromy& t, const VarSet& v);

/// X - T12(u)T23(v) and Y - T23(v)T12(u) equal the n >= 1 parts of their sums.
CheckResult xy_leading_term_check(const Monodromy& t, XYKind kind, const VarSet& u, const VarSet& v);

/// The four Bethe-vector formulas:
///  rep1a  sum g(v_a,u_a) f(u_a,u_b) g(v_b,v_a) h(u_a,u_a) lambda2(v_a) T13(u_a) T12(u_b) T23(v_b) Omega
///  rep1b  sum K(v_a|u_a) f(u_a,u_b) g(v_b,v_a) lambda2(u_a) T13(v_a) T23(v_b) T12(u_b) Omega
///  rep2a  sum g(v_a,u_a) f(u_b,u_a) g(v_b,v_a) f(v_a,u_b) h(u_a,u_a) lambda2(v_a) T12(u_b) T13(u_a) T23(v_b) Omega
///  rep2b  sum K(v_a|u_a) f(u_a,u_b) g(v_b,v_a) f(v_b,u_a) lambda2(u_a) T23(v_b) T13(v_a) T12(u_b) Omega
/// The dual ones carry (-1)^{b(b-1)/2}, act on Omega^dag from the right and
/// use T21, T31, T32 in the mirrored orders:
///  rep1a  Omega^dag T32(v_b) T21(u_b) T31(u_a)
///  rep1b  Omega^dag T21(u_b) T32(v_b) T31(v_a)
///  rep2a  Omega^dag T32(v_b) T31(u_a) T21(u_b)
///  rep2b  Omega^dag T21(u_b) T31(v_a) T32(v_b)
/// For rep2b the printed weight lacks the sign (-1)^{n(b-n)} that appears
/// when reordering the odd products; Reading::corrected includes it.
enum class BetheRep { rep1a, rep1b, rep2a, rep2b };
const char* bethe_rep_name(BetheRep rep);
inline constexpr std::array<BetheRep, 4> kBetheReps{BetheRep::rep1a, BetheRep::rep1b, BetheRep::rep2a, BetheRep::rep2b};

Vector bethe_vector(const Monodromy& t, const VacuumPair& vac, BetheRep rep, const VarSet& u, const VarSet& v,
                    Reading reading = Reading::corrected);
Vector dual_bethe_vector(const Monodromy& t, const VacuumPair& vac, BetheRep rep, const VarSet& u, const VarSet& v,
                         Reading reading = Reading::corrected);

/// All four (corrected) representations agree; the detail records whether
/// the as-printed rep2b also agrees.
CheckResult bethe_agreement_check(const Monodromy& t, const VacuumPair& vac, const VarSet& u, const VarSet& v);
CheckResult dual_bethe_agreement_check(const Monodromy& t, const VacuumPair& vac, const VarSet& u, const VarSet& v);

/// rep1a is invariant under permutations of u and of v.
CheckResult bethe_symmetry_check(const Monodromy& t, const VacuumPair& vac, const VarSet& u, const VarSet& v);

}  // namespace glmcr
