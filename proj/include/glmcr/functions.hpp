#pragma once

#include <span>

#include "glmcr/rational.hpp"

namespace glmcr {

/// g(x,y) = c/(x-y). PoleError at x = y.
Rat g(const Rat& x, const Rat& y, const Coupling& c);
/// f(x,y) = (x-y+c)/(x-y) = 1 + g(x,y). PoleError at x = y.
Rat f(const Rat& x, const Rat& y, const Coupling& c);
/// h(x,y) = (x-y+c)/c = f/g. Polynomial, defined everywhere.
Rat h(const Rat& x, const Rat& y, const Coupling& c);

enum class Fn { g, f, h };

Rat eval(Fn fn, const Rat& x, const Rat& y, const Coupling& c);

/// Product of fn(a,b) over all ordered pairs a in A, b in B. When A and B
/// are the same set the diagonal pairs are included; h(x,x) = 1 so they do
/// not matter there. Empty products are 1. PoleError names the offending pair.
Rat set_product(Fn fn, std::span<const Rat> A, std::span<const Rat> B, const Coupling& c);

/// Shorthands matching the set-product convention.
inline Rat gg(std::span<const Rat> A, std::span<const Rat> B, const Coupling& c) {
  return set_product(Fn::g, A, B, c);
}
inline Rat ff(std::span<const Rat> A, std::span<const Rat> B, const Coupling& c) {
  return set_product(Fn::f, A, B, c);
}
inline Rat hh(std::span<const Rat> A, std::span<const Rat> B, const Coupling& c) {
  return set_product(Fn::h, A, B, c);
}

}  // namespace glmcr
