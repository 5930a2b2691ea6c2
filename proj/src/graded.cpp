#include "glmcr/graded.hpp"

#include <vector>

#include "glmcr/errors.hpp"
#include "glmcr/functions.hpp"

namespace glmcr {

std::size_t power_of_three(std::size_t n) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= 3;
  return r;
}

std::size_t state_index(const int* indices, std::size_t sites) {
  std::size_t r = 0;
  for (std::size_t k = 0; k < sites; ++k) r = r * 3 + static_cast<std::size_t>(indices[k] - 1);
  return r;
}

namespace {

void decode(std::size_t idx, std::size_t sites, std::vector<int>& out) {
  out.resize(sites);
  for (std::size_t k = sites; k-- > 0;) {
    out[k] = static_cast<int>(idx % 3) + 1;
    idx /= 3;
  }
}

int odd_before(const std::vector<int>& s, std::size_t site) {
  int n = 0;
  for (std::size_t l = 0; l < site; ++l) n += parity(s[l]);
  return n;
}

void check_index(int a) {
  if (a < 1 || a > 3) throw RangeError("basis index must be 1, 2 or 3");
}

}  // namespace

SparseMatrix embed_unit(int a, int b, std::size_t site, std::size_t total_sites) {
  check_index(a);
  check_index(b);
  if (site >= total_sites) throw RangeError("embed_unit: site out of range");
  const std::size_t dim = power_of_three(total_sites);
  SparseMatrix m(dim);
  std::vector<int> s;
  for (std::size_t idx = 0; idx < dim; ++idx) {
    decode(idx, total_sites, s);
    if (s[site] != b) continue;
    const int sign = ((parity(a) + parity(b)) * odd_before(s, site)) % 2 ? -1 : 1;
    s[site] = a;
    m.accumulate(state_index(s.data(), total_sites), idx, Rat(sign));
  }
  return m;
}

SparseMatrix graded_embed(const SparseMatrix& m, std::size_t first, std::size_t total_sites) {
  if (m.dim() != 3) throw RangeError("single-factor embedding needs a 3x3 matrix");
  if (first >= total_sites) throw RangeError("graded_embed: site out of range");
  SparseMatrix out(power_of_three(total_sites));
  for (int a = 1; a <= 3; ++a) {
    for (const auto& e : m.row(static_cast<std::size_t>(a - 1))) {
      out = out + e.value * embed_unit(a, static_cast<int>(e.col) + 1, first, total_sites);
    }
  }
  return out;
}

SparseMatrix graded_embed(const SparseMatrix& m, std::size_t first, std::size_t second, std::size_t total_sites) {
  if (m.dim() != 9) throw RangeError("two-factor embedding needs a 9x9 matrix");
  if (first >= total_sites || second >= total_sites || first == second) {
    throw RangeError("graded_embed: bad site pair");
  }
  const std::size_t dim = power_of_three(total_sites);
  SparseMatrix out(dim);
  std::vector<int> s;
  for (std::size_t row = 0; row < 9; ++row) {
    const int a = static_cast<int>(row / 3) + 1;
    const int cc = static_cast<int>(row % 3) + 1;
    for (const auto& e : m.row(row)) {
      const int b = static_cast<int>(e.col / 3) + 1;
      const int d = static_cast<int>(e.col % 3) + 1;
      const Rat x = ((parity(cc) + parity(d)) * parity(b)) % 2 ? -e.value : e.value;
      // (E_ab)_first (E_cd)_second applied to every basis state
      for (std::size_t idx = 0; idx < dim; ++idx) {
        decode(idx, total_sites, s);
        if (s[second] != d || s[first] != b) continue;
        int sign = (parity(cc) + parity(d)) * odd_before(s, second);
        s[second] = cc;
        sign += (parity(a) + parity(b)) * odd_before(s, first);
        s[first] = a;
        out.accumulate(state_index(s.data(), total_sites), idx, sign % 2 ? -x : x);
      }
    }
  }
  return out;
}

SparseMatrix graded_permutation() {
  SparseMatrix p(9);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const int from[2] = {i, j};
      const int to[2] = {j, i};
      p.accumulate(state_index(to, 2), state_index(from, 2), Rat((parity(i) & parity(j)) ? -1 : 1));
    }
  }
  return p;
}

SparseMatrix r_matrix(const Rat& u, const Rat& v, const Coupling& c) {
  return SparseMatrix::identity(9) + g(u, v, c) * graded_permutation();
}

}  // namespace glmcr
