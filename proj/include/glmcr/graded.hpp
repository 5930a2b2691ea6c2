#pragma once

#include <cstddef>

#include "glmcr/linalg.hpp"
#include "glmcr/rational.hpp"

namespace glmcr {

/// Basis indices of C^{2|1} are 1, 2, 3; e_1, e_2 are even and e_3 is odd.
constexpr int parity(int index) { return index == 3 ? 1 : 0; }

/// 3^n
std::size_t power_of_three(std::size_t n);

/// Basis state of V^{(x)N} as 1-based indices, most significant site first.
std::size_t state_index(const int* indices, std::size_t sites);

/// E_ab acting on tensor factor `site` (0-based) of V^{(x)total_sites}, with
/// the Koszul sign (-1)^{([a]+[b]) * sum_{l<site}[s_l]} picked up from the
/// factors to its left.
SparseMatrix embed_unit(int a, int b, std::size_t site, std::size_t total_sites);

/// Embeds a single-factor (3x3) or two-factor (9x9) matrix into the graded
/// tensor product. A two-factor matrix m is read in its own graded basis:
/// m = sum x_{ab,cd} E_ab (x) E_cd with m[(a,c),(b,d)] = (-1)^{([c]+[d])[b]} x_{ab,cd},
/// and placed on factors (first, second), which need not be adjacent or ordered.
/// Throws RangeError for bad positions.
SparseMatrix graded_embed(const SparseMatrix& m, std::size_t first, std::size_t total_sites);
SparseMatrix graded_embed(const SparseMatrix& m, std::size_t first, std::size_t second, std::size_t total_sites);

/// P(e_i (x) e_j) = (-1)^{[i][j]} e_j (x) e_i on V (x) V.
SparseMatrix graded_permutation();

/// R(u,v) = I + g(u,v) P on V (x) V. PoleError at u = v.
SparseMatrix r_matrix(const Rat& u, const Rat& v, const Coupling& c);

}  // namespace glmcr
