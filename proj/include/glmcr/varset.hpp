#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "glmcr/rational.hpp"

namespace glmcr {

/// Ordered list of pairwise distinct spectral parameters. The order is the
/// order of construction and every split preserves it.
class VarSet {
 public:
  VarSet() = default;

  std::size_t size() const { return xs_.size(); }
  bool empty() const { return xs_.empty(); }
  const Rat& operator[](std::size_t i) const { return xs_[i]; }
  auto begin() const { return xs_.begin(); }
  auto end() const { return xs_.end(); }
  std::span<const Rat> span() const { return xs_; }
  operator std::span<const Rat>() const { return xs_; }  // NOLINT(google-explicit-constructor)

  /// Every element shifted by d; order preserved.
  VarSet shifted(const Rat& d) const;
  /// The set with the element at position i removed.
  VarSet without(std::size_t i) const;
  /// Elements at the given (increasing) positions.
  VarSet pick(std::span<const std::size_t> positions) const;

  /// "{p1/q1, p2, ...}"
  std::string str() const;

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  friend VarSet make_varset(std::vector<Rat> xs);
  explicit VarSet(std::vector<Rat> xs) : xs_(std::move(xs)) {}
  std::vector<Rat> xs_;
};

/// Throws DuplicateError naming the repeated value.
VarSet make_varset(std::vector<Rat> xs);
VarSet make_varset(std::initializer_list<Rat> xs);

inline VarSet shift_set(const VarSet& s, const Rat& d) { return s.shifted(d); }

/// {a, b}: concatenation in that order. Throws DuplicateError on overlap.
VarSet join(const VarSet& a, const VarSet& b);

/// Ordered partition of a parent set. parts[k] lists the elements of the k-th
/// subset in natural order; positions[k] their indices in the parent.
struct Split {
  std::vector<VarSet> parts;
  std::vector<std::vector<std::size_t>> positions;
};

/// All multinomial(|s|; sizes) splits of s, in lexicographic order of the
/// index subsets (first part varies slowest).
std::vector<Split> enumerate_splits(const VarSet& s, std::span<const std::size_t> sizes);
std::vector<Split> enumerate_splits(const VarSet& s, std::initializer_list<std::size_t> sizes);

/// Two-part splits s => {alpha, complement} with |alpha| = k.
std::vector<Split> enumerate_bipartitions(const VarSet& s, std::size_t k);

/// Integer binomial coefficient.
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace glmcr
