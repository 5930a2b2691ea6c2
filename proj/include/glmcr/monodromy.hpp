#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "glmcr/check.hpp"
#include "glmcr/linalg.hpp"
#include "glmcr/varset.hpp"

namespace glmcr {

/// Order of the R-matrix factors in T(u) = R_{0L}(u,xi_L) ... R_{01}(u,xi_1).
/// `first_site_leftmost` is the reversed product, kept for diagnostics.
enum class AuxOrder { last_site_leftmost, first_site_leftmost };

/// How the entries T_ij are read off the auxiliary blocks B_ij of T(u) on V (x) H:
/// T_ij = sign * B_ij.
enum class EntryConvention {
  koszul,       ///< sign (-1)^{([i]+[j])[j]}, from T = sum E_ij (x) T_ij in the graded product
  row_parity,   ///< sign (-1)^{([i]+[j])[i]}
  odd_negated,  ///< sign (-1)^{[i]+[j]}
  raw,          ///< no sign
};

const char* convention_name(EntryConvention conv);
int entry_sign(EntryConvention conv, int i, int j);

/// Inhomogeneous fundamental chain: L = #xi sites, one inhomogeneity each.
struct ChainSpec {
  VarSet xi;
  Coupling c;
  AuxOrder order = AuxOrder::last_site_leftmost;
  EntryConvention convention = EntryConvention::koszul;

  std::size_t sites() const { return xi.size(); }
};

enum class OddKind {
  column,  ///< T_{j3}, j = 1, 2
  row,     ///< T_{3k}, k = 1, 2
};

/// Monodromy matrix of a chain. Entries T_ij(u) are 3^L x 3^L exact matrices,
/// built on demand and cached per spectral point. Not thread-safe.
class Monodromy {
 public:
  explicit Monodromy(ChainSpec chain);

  const ChainSpec& chain() const { return chain_; }
  const Coupling& coupling() const { return chain_.c; }
  std::size_t dim() const { return dim_; }

  /// T_ij(u), 1 <= i,j <= 3. PoleError when u hits an inhomogeneity.
  const Matrix& entry(int i, int j, const Rat& u) const;

  /// T(u) on V_aux (x) H with the auxiliary space at tensor factor `aux` and
  /// the quantum sites at factors first_site, ..., first_site+L-1 of a
  /// `total_sites`-fold graded tensor product.
  SparseMatrix embedded(const Rat& u, std::size_t aux, std::size_t first_site, std::size_t total_sites) const;

  /// T_ij(u_1) ... T_ij(u_n) for an even entry ([i]+[j] = 0). Identity for an empty set.
  Matrix even_product(int i, int j, std::span<const Rat> us) const;

  /// Symmetric product of odd entries:
  ///  column: T_j3(v_1)...T_j3(v_n) / prod_{l>m} h(v_l, v_m)
  ///  row:    T_3k(v_1)...T_3k(v_n) / prod_{l>m} h(v_m, v_l)
  /// PoleError when one of the h-factors vanishes.
  Matrix sym_odd_product(OddKind kind, int index, std::span<const Rat> vs) const;

  /// Any entry product: even entries via even_product, odd ones as the
  /// symmetric product (the natural reading of T_ab(set) in formulas).
  /// Memoized per (i, j, argument list).
  const Matrix& set_product(int i, int j, std::span<const Rat> us) const;

  /// Applies the same product to a column vector from the left, right to
  /// left, without forming matrix products.
  Vector apply(int i, int j, std::span<const Rat> us, const Vector& x) const;
  /// Row vector times the product.
  Vector apply_left(const Vector& x, int i, int j, std::span<const Rat> us) const;

  std::size_t cached_points() const { return cache_.size(); }
  void clear_cache() const {
    cache_.clear();
    products_.clear();
  }

 private:
  void check_point(const Rat& u) const;
  ChainSpec chain_;
  std::size_t dim_;
  mutable std::map<Rat, std::array<Matrix, 9>> cache_;
  mutable std::map<std::tuple<int, int, std::vector<Rat>>, Matrix> products_;
};

/// R(u,v)(T(u) (x) I)(I (x) T(v)) = (I (x) T(v))(T(u) (x) I)R(u,v) on V (x) V (x) H.
CheckResult rtt_check(const Monodromy& t, const Rat& u, const Rat& v);

/// The graded commutator [T_ij(u), T_kl(v)} = T_ij(u)T_kl(v) - (-1)^{([i]+[j])([k]+[l])} T_kl(v)T_ij(u).
Matrix graded_commutator(const Monodromy& t, int i, int j, int k, int l, const Rat& u, const Rat& v);

/// Checks both closed forms of the graded commutator:
///  form 1: (-1)^{[i]([k]+[l])+[k][l]} g(u,v) (T_kj(v)T_il(u) - T_kj(u)T_il(v))
///  form 2: (-1)^{[l]([i]+[j])+[i][j]} g(u,v) (T_il(u)T_kj(v) - T_il(v)T_kj(u))
struct CommutatorReport {
  CheckResult check;
  bool form1 = false;
  bool form2 = false;
};
CommutatorReport graded_commutator_check(const Monodromy& t, int i, int j, int k, int l, const Rat& u, const Rat& v);

/// Odd exchange relations:
///  column: h(v1,v2) T_j3(v1)T_j3(v2) = h(v2,v1) T_j3(v2)T_j3(v1)
///  row:    h(v2,v1) T_3j(v1)T_3j(v2) = h(v1,v2) T_3j(v2)T_3j(v1)
/// The detail records whether the column relation with the operator order
/// left unswapped on the right side also holds.
CheckResult odd_exchange_check(const Monodromy& t, OddKind kind, int index, const Rat& v1, const Rat& v2);

/// sym_odd_product / even_product do not depend on the order of the set.
CheckResult product_symmetry_check(const Monodromy& t, int i, int j, const VarSet& vs);

/// T_ij(u) only connects basis states whose parities differ by [i]+[j].
CheckResult entry_parity_check(const Monodromy& t, const Rat& u);

struct VacuumPair {
  Vector omega;       ///< column vector, first nonzero component 1
  Vector omega_dual;  ///< row vector, normalized to omega_dual . omega = 1
};

/// Solves T_ij(t)Omega = 0 (i > j) and Omega^dag T_ij(t) = 0 (i < j) at the
/// given sample points; each solution space must be one-dimensional, else
/// CheckFailure. With no sample points, L+2 integers above max(xi) are used.
VacuumPair build_vacuum(const Monodromy& t, std::span<const Rat> sample_points = {});

/// lambda_i(u), read off T_ii(u)Omega. CheckFailure if Omega is not an eigenvector.
Rat vacuum_eigenvalue(const Monodromy& t, const VacuumPair& vac, int i, const Rat& u);
Rat dual_vacuum_eigenvalue(const Monodromy& t, const VacuumPair& vac, int i, const Rat& u);

/// Annihilation and eigenvalue relations of both vacua at u, plus equality
/// of the column and row eigenvalues.
CheckResult vacuum_check(const Monodromy& t, const VacuumPair& vac, const Rat& u);

}  // namespace glmcr
