#include "glmcr/varset.hpp"

#include <algorithm>
#include <numeric>

#include "glmcr/errors.hpp"

namespace glmcr {

VarSet make_varset(std::vector<Rat> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (xs[i] == xs[j]) throw DuplicateError("duplicate element " + xs[i].str() + " in variable set");
    }
  }
  return VarSet(std::move(xs));
}

VarSet make_varset(std::initializer_list<Rat> xs) { return make_varset(std::vector<Rat>(xs)); }

VarSet VarSet::shifted(const Rat& d) const {
  std::vector<Rat> out(xs_);
  for (auto& x : out) x += d;
  return VarSet(std::move(out));
}

VarSet VarSet::without(std::size_t i) const {
  if (i >= xs_.size()) throw RangeError("VarSet::without: index out of range");
  std::vector<Rat> out;
  out.reserve(xs_.size() - 1);
  for (std::size_t k = 0; k < xs_.size(); ++k) {
    if (k != i) out.push_back(xs_[k]);
  }
  return VarSet(std::move(out));
}

VarSet VarSet::pick(std::span<const std::size_t> positions) const {
  std::vector<Rat> out;
  out.reserve(positions.size());
  for (auto p : positions) {
    if (p >= xs_.size()) throw RangeError("VarSet::pick: index out of range");
    out.push_back(xs_[p]);
  }
  return VarSet(std::move(out));
}

std::string VarSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (i) s += ", ";
    s += xs_[i].str();
  }
  return s + "}";
}

VarSet join(const VarSet& a, const VarSet& b) {
  std::vector<Rat> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return make_varset(std::move(out));
}

namespace {

// Recursively choose the index subset of part `k` among the still free
// positions, smallest subsets (lexicographically) first.
void splits_rec(const VarSet& s, std::span<const std::size_t> sizes, std::size_t k,
                std::vector<std::size_t>& free, Split& current, std::vector<Split>& out) {
  if (k + 1 == sizes.size()) {
    current.positions[k] = free;
    current.parts[k] = s.pick(free);
    out.push_back(current);
    return;
  }
  const std::size_t want = sizes[k];
  std::vector<std::size_t> chosen(want);
  std::vector<std::size_t> idx(want);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  const std::size_t n = free.size();
  while (true) {
    for (std::size_t t = 0; t < want; ++t) chosen[t] = free[idx[t]];
    std::vector<std::size_t> rest;
    rest.reserve(n - want);
    for (std::size_t t = 0, c = 0; t < n; ++t) {
      if (c < want && idx[c] == t) {
        ++c;
      } else {
        rest.push_back(free[t]);
      }
    }
    current.positions[k] = chosen;
    current.parts[k] = s.pick(chosen);
    splits_rec(s, sizes, k + 1, rest, current, out);

    // next combination of `want` out of `n`
    std::size_t t = want;
    while (t > 0 && idx[t - 1] == n - want + t - 1) --t;
    if (t == 0) break;
    ++idx[t - 1];
    for (std::size_t r = t; r < want; ++r) idx[r] = idx[r - 1] + 1;
  }
}

}  // namespace

std::vector<Split> enumerate_splits(const VarSet& s, std::span<const std::size_t> sizes) {
  if (sizes.empty()) throw SizeMismatchError("enumerate_splits: no part sizes given");
  const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  if (total != s.size()) {
    throw SizeMismatchError("enumerate_splits: part sizes sum to " + std::to_string(total) +
                            " but the set has " + std::to_string(s.size()) + " elements");
  }
  std::vector<Split> out;
  Split current;
  current.parts.resize(sizes.size());
  current.positions.resize(sizes.size());
  std::vector<std::size_t> free(s.size());
  std::iota(free.begin(), free.end(), std::size_t{0});
  splits_rec(s, sizes, 0, free, current, out);
  return out;
}

std::vector<Split> enumerate_splits(const VarSet& s, std::initializer_list<std::size_t> sizes) {
  return enumerate_splits(s, std::span<const std::size_t>(sizes.begin(), sizes.size()));
}

std::vector<Split> enumerate_bipartitions(const VarSet& s, std::size_t k) {
  if (k > s.size()) throw SizeMismatchError("enumerate_bipartitions: subset larger than set");
  const std::size_t sizes[2] = {k, s.size() - k};
  return enumerate_splits(s, sizes);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace glmcr
