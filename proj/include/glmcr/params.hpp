#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

#include "glmcr/varset.hpp"

namespace glmcr {

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view text);

/// Seed for one case, derived from the run seed and the case id.
std::uint64_t case_seed(std::uint64_t run_seed, std::string_view case_id);

/// Pole-avoiding random rationals p/q with |p| <= 40, 1 <= q <= 8.
///
/// The raw generator is mt19937_64, reduced by plain modulo so streams are
/// identical across standard libraries.
class ParamSource {
 public:
  explicit ParamSource(std::uint64_t seed) : rng_(seed) {}

  Rat next_rational();

  /// `count` values whose pairwise differences, and differences to every
  /// anchor, avoid {0, +c, -c}. Throws ExhaustionError after
  /// `max_rejections` consecutive rejected candidates.
  VarSet draw(std::size_t count, const Coupling& c, std::span<const Rat> anchors = {},
              std::size_t max_rejections = 10000);

 private:
  std::mt19937_64 rng_;
};

/// One-shot form of ParamSource::draw.
VarSet draw_parameters(std::uint64_t seed, std::size_t count, const Coupling& c, std::span<const Rat> anchors = {});

}  // namespace glmcr
