#include "glmcr/linalg.hpp"

#include <algorithm>

#include "glmcr/errors.hpp"

namespace glmcr {

std::string EntryDiff::str() const {
  return "first difference at (" + std::to_string(row) + "," + std::to_string(col) + "): lhs=" + lhs.str() +
         " rhs=" + rhs.str();
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatchError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatchError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
  }
  return *this;
}

Matrix& Matrix::operator*=(const Rat& s) {
  for (auto& x : a_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

void Matrix::add_scaled(const Matrix& o, const Rat& s) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatchError("matrix sum: shape mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!o.a_[i].is_zero()) a_[i].add_product(o.a_[i], s);
  }
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw SizeMismatchError("matrix product: shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rat& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j).add_product(aik, bkj);
      }
    }
  }
  return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols_ != x.size()) throw SizeMismatchError("matrix-vector product: shape mismatch");
  Vector y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!x[k].is_zero() && !a(i, k).is_zero()) y[i].add_product(a(i, k), x[k]);
    }
  }
  return y;
}

Vector operator*(const Vector& x, const Matrix& a) {
  if (a.rows_ != x.size()) throw SizeMismatchError("vector-matrix product: shape mismatch");
  Vector y(a.cols_);
  for (std::size_t k = 0; k < a.rows_; ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (!a(k, j).is_zero()) y[j].add_product(x[k], a(k, j));
    }
  }
  return y;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x.is_zero(); });
}

std::size_t Matrix::nonzeros() const {
  return static_cast<std::size_t>(std::count_if(a_.begin(), a_.end(), [](const Rat& x) { return !x.is_zero(); }));
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::optional<EntryDiff> first_difference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw SizeMismatchError("compare: shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return EntryDiff{i, j, a(i, j), b(i, j)};
    }
  }
  return std::nullopt;
}

std::optional<EntryDiff> first_difference(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw SizeMismatchError("compare: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return EntryDiff{i, 0, a[i], b[i]};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.push(i, i, Rat(1));
  return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& d) {
  if (d.rows() != d.cols()) throw SizeMismatchError("sparse matrices are square");
  SparseMatrix m(d.rows());
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (!d(i, j).is_zero()) m.push(i, j, d(i, j));
    }
  }
  return m;
}

void SparseMatrix::push(std::size_t r, std::size_t c, Rat v) {
  if (v.is_zero()) return;
  auto& row = rows_.at(r);
  if (!row.empty() && row.back().col >= c) {
    accumulate(r, c, v);
    return;
  }
  row.push_back({static_cast<std::uint32_t>(c), std::move(v)});
}

void SparseMatrix::accumulate(std::size_t r, std::size_t c, const Rat& v) {
  if (v.is_zero()) return;
  auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    it->value += v;
    if (it->value.is_zero()) row.erase(it);
  } else {
    row.insert(it, {static_cast<std::uint32_t>(c), v});
  }
}

Rat SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return Rat(0);
}

Matrix SparseMatrix::to_dense() const {
  Matrix d(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    for (const auto& e : rows_[i]) d(i, e.col) = e.value;
  }
  return d;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

void SparseMatrix::prune() {
  for (auto& r : rows_) {
    r.erase(std::remove_if(r.begin(), r.end(), [](const Entry& e) { return e.value.is_zero(); }), r.end());
  }
}

SparseMatrix& SparseMatrix::operator*=(const Rat& s) {
  for (auto& r : rows_) {
    for (auto& e : r) e.value *= s;
  }
  prune();
  return *this;
}

namespace {

SparseMatrix merge(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
  if (a.dim() != b.dim()) throw SizeMismatchError("sparse sum: dimension mismatch");
  SparseMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto& ra = a.row(i);
    const auto& rb = b.row(i);
    std::size_t p = 0;
    std::size_t q = 0;
    while (p < ra.size() || q < rb.size()) {
      if (q == rb.size() || (p < ra.size() && ra[p].col < rb[q].col)) {
        c.push(i, ra[p].col, ra[p].value);
        ++p;
      } else if (p == ra.size() || rb[q].col < ra[p].col) {
        c.push(i, rb[q].col, subtract ? -rb[q].value : rb[q].value);
        ++q;
      } else {
        c.push(i, ra[p].col, subtract ? ra[p].value - rb[q].value : ra[p].value + rb[q].value);
        ++p;
        ++q;
      }
    }
  }
  return c;
}

}  // namespace

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return merge(a, b, false); }
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return merge(a, b, true); }

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.dim() != b.dim()) throw SizeMismatchError("sparse product: dimension mismatch");
  const std::size_t n = a.dim();
  SparseMatrix c(n);
  std::vector<Rat> acc(n);
  std::vector<char> touched(n, 0);
  std::vector<std::uint32_t> cols;
  for (std::size_t i = 0; i < n; ++i) {
    cols.clear();
    for (const auto& ea : a.rows_[i]) {
      for (const auto& eb : b.rows_[ea.col]) {
        if (!touched[eb.col]) {
          touched[eb.col] = 1;
          cols.push_back(eb.col);
          acc[eb.col] = Rat(0);
        }
        acc[eb.col].add_product(ea.value, eb.value);
      }
    }
    std::sort(cols.begin(), cols.end());
    for (auto col : cols) {
      touched[col] = 0;
      c.push(i, col, acc[col]);
    }
  }
  return c;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto& ra = a.rows_[i];
    const auto& rb = b.rows_[i];
    if (ra.size() != rb.size()) return false;
    for (std::size_t k = 0; k < ra.size(); ++k) {
      if (ra[k].col != rb[k].col || ra[k].value != rb[k].value) return false;
    }
  }
  return true;
}

std::optional<EntryDiff> first_difference(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.dim() != b.dim()) throw SizeMismatchError("compare: dimension mismatch");
  if (a == b) return std::nullopt;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    // merge the two sorted rows and report the first disagreeing column
    const auto& ra = a.row(i);
    const auto& rb = b.row(i);
    std::size_t p = 0;
    std::size_t q = 0;
    while (p < ra.size() || q < rb.size()) {
      if (q == rb.size() || (p < ra.size() && ra[p].col < rb[q].col)) return EntryDiff{i, ra[p].col, ra[p].value, Rat(0)};
      if (p == ra.size() || rb[q].col < ra[p].col) return EntryDiff{i, rb[q].col, Rat(0), rb[q].value};
      if (ra[p].value != rb[q].value) return EntryDiff{i, ra[p].col, ra[p].value, rb[q].value};
      ++p;
      ++q;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Rat determinant(Matrix m) {
  if (m.rows() != m.cols()) throw SizeMismatchError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    const Rat p = m(col, col);
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Rat factor = m(r, col) / p;
      for (std::size_t j = col; j < n; ++j) {
        if (!m(col, j).is_zero()) m(r, j) -= factor * m(col, j);
      }
    }
  }
  return det;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    }
    const Rat inv = Rat(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rat factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= factor * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<Vector> nullspace(Matrix m) {
  const auto pivots = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(m.cols());
    x[free] = Rat(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

Vector solve(Matrix m, Vector b) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.size() != n) throw SizeMismatchError("solve: shape mismatch");
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) throw ReconstructionError("solve: singular system");
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

Vector interpolate(std::span<const Rat> xs, std::span<const Rat> ys) {
  if (xs.size() != ys.size()) throw SizeMismatchError("interpolate: node/value count mismatch");
  const std::size_t n = xs.size();
  if (n == 0) return {};
  Matrix vandermonde(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat p(1);
    for (std::size_t j = 0; j < n; ++j) {
      vandermonde(i, j) = p;
      p *= xs[i];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (xs[i] == xs[j]) throw ReconstructionError("interpolate: repeated node " + xs[i].str());
    }
  }
  return solve(std::move(vandermonde), Vector(ys.begin(), ys.end()));
}

Rat evaluate_polynomial(std::span<const Rat> coeffs, const Rat& x) {
  Rat r(0);
  for (std::size_t k = coeffs.size(); k-- > 0;) r = r * x + coeffs[k];
  return r;
}

long polynomial_degree(std::span<const Rat> coeffs) {
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (!coeffs[k].is_zero()) return static_cast<long>(k);
  }
  return -1;
}

}  // namespace glmcr
