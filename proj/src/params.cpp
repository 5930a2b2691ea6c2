#include "glmcr/params.hpp"

#include <vector>

#include "glmcr/errors.hpp"

namespace glmcr {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t case_seed(std::uint64_t run_seed, std::string_view case_id) {
  // splitmix64 finalizer over the combined value
  std::uint64_t z = fnv1a(case_id) ^ (run_seed * 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rat ParamSource::next_rational() {
  const auto p = static_cast<std::int64_t>(rng_() % 81) - 40;
  const auto q = static_cast<std::int64_t>(rng_() % 8) + 1;
  return Rat(p, q);
}

namespace {

bool clashes(const Rat& x, const Rat& y, const Coupling& c) {
  const Rat d = x - y;
  return d.is_zero() || d == c.value() || d == -c.value();
}

}  // namespace

VarSet ParamSource::draw(std::size_t count, const Coupling& c, std::span<const Rat> anchors, std::size_t max_rejections) {
  std::vector<Rat> out;
  out.reserve(count);
  std::size_t rejected = 0;
  while (out.size() < count) {
    const Rat x = next_rational();
    bool ok = true;
    for (const auto& y : out) ok = ok && !clashes(x, y, c);
    for (const auto& y : anchors) ok = ok && !clashes(x, y, c);
    if (ok) {
      out.push_back(x);
      rejected = 0;
    } else if (++rejected >= max_rejections) {
      throw ExhaustionError("could not draw " + std::to_string(count) + " pole-free parameters after " +
                            std::to_string(max_rejections) + " rejections");
    }
  }
  return make_varset(std::move(out));
}

VarSet draw_parameters(std::uint64_t seed, std::size_t count, const Coupling& c, std::span<const Rat> anchors) {
  ParamSource src(seed);
  return src.draw(count, c, anchors);
}

}  // namespace glmcr
