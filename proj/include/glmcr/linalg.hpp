#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glmcr/rational.hpp"

namespace glmcr {

using Vector = std::vector<Rat>;

/// Location and values of the first entry where two matrices disagree.
struct EntryDiff {
  std::size_t row = 0;
  std::size_t col = 0;
  Rat lhs;
  Rat rhs;
  std::string str() const;
};

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t n) { return Matrix(n, n); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rat& s);
  /// this += s * o
  void add_scaled(const Matrix& o, const Rat& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rat& s) { return a *= s; }
  friend Matrix operator*(const Rat& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);
  /// Row vector times matrix.
  friend Vector operator*(const Vector& x, const Matrix& a);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  bool is_zero() const;
  std::size_t nonzeros() const;
  Matrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

std::optional<EntryDiff> first_difference(const Matrix& a, const Matrix& b);
std::optional<EntryDiff> first_difference(const Vector& a, const Vector& b);

/// Square matrix with per-row sorted nonzero entries. Used for the graded
/// tensor-product spaces, where operators are very sparse.
class SparseMatrix {
 public:
  struct Entry {
    std::uint32_t col;
    Rat value;
  };

  SparseMatrix() = default;
  explicit SparseMatrix(std::size_t n) : rows_(n) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const Matrix& m);

  std::size_t dim() const { return rows_.size(); }
  const std::vector<Entry>& row(std::size_t r) const { return rows_[r]; }

  /// Adds v at (r, c). Entries must be pushed in increasing column order per
  /// row; use `accumulate` otherwise.
  void push(std::size_t r, std::size_t c, Rat v);
  void accumulate(std::size_t r, std::size_t c, const Rat& v);

  Rat at(std::size_t r, std::size_t c) const;
  Matrix to_dense() const;
  std::size_t nonzeros() const;

  SparseMatrix& operator*=(const Rat& s);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(SparseMatrix a, const Rat& s) { return a *= s; }
  friend SparseMatrix operator*(const Rat& s, SparseMatrix a) { return a *= s; }
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  void prune();
  std::vector<std::vector<Entry>> rows_;
};

std::optional<EntryDiff> first_difference(const SparseMatrix& a, const SparseMatrix& b);

/// Determinant by fraction-exact Gaussian elimination with first-nonzero pivoting.
Rat determinant(Matrix m);

/// Basis of the right null space {x : m x = 0}, one vector per free column,
/// with that free coordinate set to 1.
std::vector<Vector> nullspace(Matrix m);

/// Solves m x = b for square nonsingular m. Throws ReconstructionError if singular.
Vector solve(Matrix m, Vector b);

/// Coefficients (constant term first) of the unique polynomial of degree
/// < |xs| through the points (xs[i], ys[i]). Throws ReconstructionError on
/// repeated nodes.
Vector interpolate(std::span<const Rat> xs, std::span<const Rat> ys);

Rat evaluate_polynomial(std::span<const Rat> coeffs, const Rat& x);

/// Index of the highest nonzero coefficient, or -1 for the zero polynomial.
long polynomial_degree(std::span<const Rat> coeffs);

}  // namespace glmcr
