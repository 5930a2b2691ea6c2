#include "glmcr/functions.hpp"

#include "glmcr/errors.hpp"

namespace glmcr {

namespace {

[[noreturn]] void pole(const char* name, const Rat& x, const Rat& y) {
  throw PoleError(std::string(name) + "(" + x.str() + ", " + y.str() + ") has a pole");
}

}  // namespace

Rat g(const Rat& x, const Rat& y, const Coupling& c) {
  if (x == y) pole("g", x, y);
  return c.value() / (x - y);
}

Rat f(const Rat& x, const Rat& y, const Coupling& c) {
  if (x == y) pole("f", x, y);
  const Rat d = x - y;
  return (d + c.value()) / d;
}

Rat h(const Rat& x, const Rat& y, const Coupling& c) { return (x - y + c.value()) / c.value(); }

Rat eval(Fn fn, const Rat& x, const Rat& y, const Coupling& c) {
  switch (fn) {
    case Fn::g:
      return g(x, y, c);
    case Fn::f:
      return f(x, y, c);
    case Fn::h:
      return h(x, y, c);
  }
  return Rat(0);
}

Rat set_product(Fn fn, std::span<const Rat> A, std::span<const Rat> B, const Coupling& c) {
  Rat r(1);
  for (const auto& a : A) {
    for (const auto& b : B) r *= eval(fn, a, b, c);
  }
  return r;
}

}  // namespace glmcr
