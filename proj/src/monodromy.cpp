#include "glmcr/monodromy.hpp"

#include <algorithm>

#include "glmcr/errors.hpp"
#include "glmcr/functions.hpp"
#include "glmcr/graded.hpp"

namespace glmcr {

const char* convention_name(EntryConvention conv) {
  switch (conv) {
    case EntryConvention::koszul:
      return "koszul";
    case EntryConvention::row_parity:
      return "row-parity";
    case EntryConvention::odd_negated:
      return "odd-negated";
    case EntryConvention::raw:
      return "raw";
  }
  return "?";
}

int entry_sign(EntryConvention conv, int i, int j) {
  int e = 0;
  switch (conv) {
    case EntryConvention::koszul:
      e = (parity(i) + parity(j)) * parity(j);
      break;
    case EntryConvention::row_parity:
      e = (parity(i) + parity(j)) * parity(i);
      break;
    case EntryConvention::odd_negated:
      e = parity(i) + parity(j);
      break;
    case EntryConvention::raw:
      break;
  }
  return e % 2 ? -1 : 1;
}

namespace {

void check_entry_index(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) throw RangeError("monodromy entry indices must be in 1..3");
}

}  // namespace

Monodromy::Monodromy(ChainSpec chain) : chain_(std::move(chain)), dim_(power_of_three(chain_.sites())) {
  if (chain_.sites() == 0) throw RangeError("a chain needs at least one site");
}

void Monodromy::check_point(const Rat& u) const {
  for (std::size_t k = 0; k < chain_.sites(); ++k) {
    if (u == chain_.xi[k]) {
      throw PoleError("spectral point " + u.str() + " collides with xi_" + std::to_string(k + 1));
    }
  }
}

SparseMatrix Monodromy::embedded(const Rat& u, std::size_t aux, std::size_t first_site, std::size_t total_sites) const {
  check_point(u);
  const std::size_t L = chain_.sites();
  if (first_site + L > total_sites || (aux >= first_site && aux < first_site + L) || aux >= total_sites) {
    throw RangeError("Monodromy::embedded: bad site layout");
  }
  SparseMatrix t = SparseMatrix::identity(power_of_three(total_sites));
  for (std::size_t k = 0; k < L; ++k) {
    const SparseMatrix r = graded_embed(r_matrix(u, chain_.xi[k], chain_.c), aux, first_site + k, total_sites);
    // last_site_leftmost: multiply each new factor on the left
    t = chain_.order == AuxOrder::last_site_leftmost ? r * t : t * r;
  }
  return t;
}

const Matrix& Monodromy::entry(int i, int j, const Rat& u) const {
  check_entry_index(i, j);
  auto it = cache_.find(u);
  if (it == cache_.end()) {
    const SparseMatrix full = embedded(u, 0, 1, chain_.sites() + 1);
    std::array<Matrix, 9> blocks;
    for (auto& b : blocks) b = Matrix(dim_, dim_);
    for (std::size_t r = 0; r < full.dim(); ++r) {
      const std::size_t bi = r / dim_;
      for (const auto& e : full.row(r)) {
        const std::size_t bj = e.col / dim_;
        const int sign = entry_sign(chain_.convention, static_cast<int>(bi) + 1, static_cast<int>(bj) + 1);
        blocks[bi * 3 + bj](r % dim_, e.col % dim_) = sign < 0 ? -e.value : e.value;
      }
    }
    it = cache_.emplace(u, std::move(blocks)).first;
  }
  return it->second[static_cast<std::size_t>((i - 1) * 3 + (j - 1))];
}

Matrix Monodromy::even_product(int i, int j, std::span<const Rat> us) const {
  check_entry_index(i, j);
  if ((parity(i) + parity(j)) % 2) throw RangeError("even_product needs an even entry");
  if (us.empty()) return Matrix::identity(dim_);
  Matrix m = entry(i, j, us[0]);
  for (std::size_t k = 1; k < us.size(); ++k) m = m * entry(i, j, us[k]);
  return m;
}

namespace {

Rat odd_normalization(OddKind kind, std::span<const Rat> vs, const Coupling& c) {
  Rat den(1);
  for (std::size_t l = 0; l < vs.size(); ++l) {
    for (std::size_t m = 0; m < l; ++m) den *= kind == OddKind::column ? h(vs[l], vs[m], c) : h(vs[m], vs[l], c);
  }
  if (den.is_zero()) throw PoleError("symmetric odd product: an h-factor in the normalization vanishes");
  return den;
}

std::pair<int, int> odd_indices(OddKind kind, int index) {
  if (index != 1 && index != 2) throw RangeError("odd product index must be 1 or 2");
  return kind == OddKind::column ? std::pair{index, 3} : std::pair{3, index};
}

}  // namespace

Matrix Monodromy::sym_odd_product(OddKind kind, int index, std::span<const Rat> vs) const {
  const auto [i, j] = odd_indices(kind, index);
  const Rat den = odd_normalization(kind, vs, chain_.c);
  if (vs.empty()) return Matrix::identity(dim_);
  Matrix m = entry(i, j, vs[0]);
  for (std::size_t k = 1; k < vs.size(); ++k) m = m * entry(i, j, vs[k]);
  m *= Rat(1) / den;
  return m;
}

const Matrix& Monodromy::set_product(int i, int j, std::span<const Rat> us) const {
  check_entry_index(i, j);
  auto key = std::make_tuple(i, j, std::vector<Rat>(us.begin(), us.end()));
  auto it = products_.find(key);
  if (it != products_.end()) return it->second;
  Matrix m;
  if ((parity(i) + parity(j)) % 2 == 0) {
    m = even_product(i, j, us);
  } else {
    m = i == 3 ? sym_odd_product(OddKind::row, j, us) : sym_odd_product(OddKind::column, i, us);
  }
  return products_.emplace(std::move(key), std::move(m)).first->second;
}

Vector Monodromy::apply(int i, int j, std::span<const Rat> us, const Vector& x) const {
  check_entry_index(i, j);
  Vector y = x;
  for (std::size_t k = us.size(); k-- > 0;) y = entry(i, j, us[k]) * y;
  if ((parity(i) + parity(j)) % 2) {
    const Rat den = odd_normalization(i == 3 ? OddKind::row : OddKind::column, us, chain_.c);
    for (auto& e : y) e /= den;
  }
  return y;
}

Vector Monodromy::apply_left(const Vector& x, int i, int j, std::span<const Rat> us) const {
  check_entry_index(i, j);
  Vector y = x;
  for (const auto& u : us) y = y * entry(i, j, u);
  if ((parity(i) + parity(j)) % 2) {
    const Rat den = odd_normalization(i == 3 ? OddKind::row : OddKind::column, us, chain_.c);
    for (auto& e : y) e /= den;
  }
  return y;
}

// ---------------------------------------------------------------------------

CheckResult rtt_check(const Monodromy& t, const Rat& u, const Rat& v) {
  CheckResult r;
  const std::size_t total = t.chain().sites() + 2;
  const SparseMatrix R = graded_embed(r_matrix(u, v, t.coupling()), 0, 1, total);
  const SparseMatrix T1 = t.embedded(u, 0, 2, total);
  const SparseMatrix T2 = t.embedded(v, 1, 2, total);
  const SparseMatrix lhs = R * T1 * T2;
  const SparseMatrix rhs = T2 * T1 * R;
  if (auto d = first_difference(lhs, rhs)) r.fail("RTT: " + d->str());
  r.terms = 1;
  return r;
}

Matrix graded_commutator(const Monodromy& t, int i, int j, int k, int l, const Rat& u, const Rat& v) {
  const int s = ((parity(i) + parity(j)) * (parity(k) + parity(l))) % 2 ? -1 : 1;
  Matrix m = t.entry(i, j, u) * t.entry(k, l, v);
  m.add_scaled(t.entry(k, l, v) * t.entry(i, j, u), Rat(-s));
  return m;
}

CommutatorReport graded_commutator_check(const Monodromy& t, int i, int j, int k, int l, const Rat& u, const Rat& v) {
  CommutatorReport rep;
  const Coupling& c = t.coupling();
  const Matrix lhs = graded_commutator(t, i, j, k, l, u, v);
  const Rat guv = g(u, v, c);

  const int e1 = (parity(i) * (parity(k) + parity(l)) + parity(k) * parity(l)) % 2;
  Matrix rhs1 = t.entry(k, j, v) * t.entry(i, l, u) - t.entry(k, j, u) * t.entry(i, l, v);
  rhs1 *= e1 ? -guv : guv;

  const int e2 = (parity(l) * (parity(i) + parity(j)) + parity(i) * parity(j)) % 2;
  Matrix rhs2 = t.entry(i, l, u) * t.entry(k, j, v) - t.entry(i, l, v) * t.entry(k, j, u);
  rhs2 *= e2 ? -guv : guv;

  const std::string tag = "[T" + std::to_string(i) + std::to_string(j) + ",T" + std::to_string(k) + std::to_string(l) + "}";
  const auto d1 = first_difference(lhs, rhs1);
  const auto d2 = first_difference(lhs, rhs2);
  rep.form1 = !d1;
  rep.form2 = !d2;
  if (d1) rep.check.fail(tag + " form 1: " + d1->str());
  if (d2) rep.check.fail(tag + " form 2: " + d2->str());
  rep.check.terms = 2;
  return rep;
}

CheckResult odd_exchange_check(const Monodromy& t, OddKind kind, int index, const Rat& v1, const Rat& v2) {
  CheckResult r;
  const Coupling& c = t.coupling();
  const auto [i, j] = odd_indices(kind, index);
  const Matrix p12 = t.entry(i, j, v1) * t.entry(i, j, v2);
  const Matrix p21 = t.entry(i, j, v2) * t.entry(i, j, v1);
  const Rat h12 = h(v1, v2, c);
  const Rat h21 = h(v2, v1, c);
  if (kind == OddKind::column) {
    if (auto d = first_difference(h12 * p12, h21 * p21)) r.fail("column odd exchange: " + d->str());
    const bool literal = h12 * p12 == h21 * p12;
    r.note(std::string("unswapped reading ") + (literal ? "holds" : "fails"));
  } else {
    if (auto d = first_difference(h21 * p12, h12 * p21)) r.fail("row odd exchange: " + d->str());
  }
  r.terms = 1;
  return r;
}

CheckResult product_symmetry_check(const Monodromy& t, int i, int j, const VarSet& vs) {
  CheckResult r;
  std::vector<Rat> xs(vs.begin(), vs.end());
  const Matrix base = t.set_product(i, j, xs);
  std::sort(xs.begin(), xs.end());
  do {
    if (auto d = first_difference(t.set_product(i, j, xs), base)) {
      r.fail("T" + std::to_string(i) + std::to_string(j) + " product depends on argument order: " + d->str());
      break;
    }
    ++r.terms;
  } while (std::next_permutation(xs.begin(), xs.end()));
  return r;
}

namespace {

int state_parity(std::size_t idx, std::size_t sites) {
  int p = 0;
  for (std::size_t k = 0; k < sites; ++k) {
    if (idx % 3 == 2) ++p;
    idx /= 3;
  }
  return p % 2;
}

}  // namespace

CheckResult entry_parity_check(const Monodromy& t, const Rat& u) {
  CheckResult r;
  const std::size_t L = t.chain().sites();
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const Matrix& m = t.entry(i, j, u);
      const int want = (parity(i) + parity(j)) % 2;
      for (std::size_t a = 0; a < m.rows(); ++a) {
        for (std::size_t b = 0; b < m.cols(); ++b) {
          if (!m(a, b).is_zero() && (state_parity(a, L) + state_parity(b, L)) % 2 != want) {
            r.fail("T" + std::to_string(i) + std::to_string(j) + " has a wrong-parity entry at (" + std::to_string(a) +
                   "," + std::to_string(b) + ")");
          }
        }
      }
      ++r.terms;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Rat> default_samples(const Monodromy& t) {
  Rat top = t.chain().xi[0];
  for (const auto& x : t.chain().xi) top = std::max(top, x);
  std::vector<Rat> out;
  for (std::size_t k = 1; k <= t.chain().sites() + 2; ++k) out.push_back(top + Rat(static_cast<std::int64_t>(k)));
  return out;
}

// One-dimensional solution of the stacked homogeneous system, normalized so
// its first nonzero component is 1.
Vector unique_kernel_vector(const std::vector<const Matrix*>& blocks, std::size_t dim, const char* what) {
  Matrix stacked(blocks.size() * dim, dim);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) stacked(b * dim + r, c) = (*blocks[b])(r, c);
    }
  }
  auto kernel = nullspace(std::move(stacked));
  if (kernel.size() != 1) {
    throw CheckFailure(std::string(what) + ": solution space has dimension " + std::to_string(kernel.size()) +
                       ", expected 1");
  }
  Vector x = std::move(kernel.front());
  const auto nz = std::find_if(x.begin(), x.end(), [](const Rat& e) { return !e.is_zero(); });
  const Rat scale = *nz;
  for (auto& e : x) e /= scale;
  return x;
}

Rat dot(const Vector& a, const Vector& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s.add_product(a[i], b[i]);
  }
  return s;
}

std::size_t first_nonzero(const Vector& x) {
  return static_cast<std::size_t>(std::find_if(x.begin(), x.end(), [](const Rat& e) { return !e.is_zero(); }) - x.begin());
}

}  // namespace

VacuumPair build_vacuum(const Monodromy& t, std::span<const Rat> sample_points) {
  std::vector<Rat> pts(sample_points.begin(), sample_points.end());
  if (pts.empty()) pts = default_samples(t);

  std::vector<Matrix> transposed;
  std::vector<const Matrix*> lower;
  std::vector<const Matrix*> upper;
  transposed.reserve(pts.size() * 3);
  for (const auto& u : pts) {
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        if (i > j) lower.push_back(&t.entry(i, j, u));
        if (i < j) transposed.push_back(t.entry(i, j, u).transposed());
      }
    }
  }
  for (const auto& m : transposed) upper.push_back(&m);

  VacuumPair vac;
  vac.omega = unique_kernel_vector(lower, t.dim(), "vacuum");
  vac.omega_dual = unique_kernel_vector(upper, t.dim(), "dual vacuum");
  const Rat pairing = dot(vac.omega_dual, vac.omega);
  if (pairing.is_zero()) throw CheckFailure("dual vacuum is orthogonal to the vacuum");
  for (auto& e : vac.omega_dual) e /= pairing;
  return vac;
}

Rat vacuum_eigenvalue(const Monodromy& t, const VacuumPair& vac, int i, const Rat& u) {
  const Vector y = t.entry(i, i, u) * vac.omega;
  const std::size_t k = first_nonzero(vac.omega);
  const Rat lambda = y[k] / vac.omega[k];
  for (std::size_t a = 0; a < y.size(); ++a) {
    if (y[a] != lambda * vac.omega[a]) throw CheckFailure("vacuum is not an eigenvector of T" + std::to_string(i) + std::to_string(i));
  }
  return lambda;
}

Rat dual_vacuum_eigenvalue(const Monodromy& t, const VacuumPair& vac, int i, const Rat& u) {
  const Vector y = vac.omega_dual * t.entry(i, i, u);
  const std::size_t k = first_nonzero(vac.omega_dual);
  const Rat lambda = y[k] / vac.omega_dual[k];
  for (std::size_t a = 0; a < y.size(); ++a) {
    if (y[a] != lambda * vac.omega_dual[a]) {
      throw CheckFailure("dual vacuum is not a left eigenvector of T" + std::to_string(i) + std::to_string(i));
    }
  }
  return lambda;
}

CheckResult vacuum_check(const Monodromy& t, const VacuumPair& vac, const Rat& u) {
  CheckResult r;
  const Vector zero(t.dim());
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const std::string tag = "T" + std::to_string(i) + std::to_string(j);
      if (i > j && t.entry(i, j, u) * vac.omega != zero) r.fail(tag + " does not annihilate the vacuum");
      if (i < j && vac.omega_dual * t.entry(i, j, u) != zero) r.fail(tag + " does not annihilate the dual vacuum");
    }
    try {
      const Rat a = vacuum_eigenvalue(t, vac, i, u);
      const Rat b = dual_vacuum_eigenvalue(t, vac, i, u);
      if (a != b) r.fail("lambda_" + std::to_string(i) + " differs: " + a.str() + " vs " + b.str());
    } catch (const CheckFailure& e) {
      r.fail(e.what());
    }
  }
  r.terms = 12;
  return r;
}

}  // namespace glmcr
