#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace glmcr {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Division by zero throws
/// PoleError instead of aborting, and text I/O uses the "p/q" form
/// ("p" when q = 1).
class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rat(std::int64_t num, std::int64_t den);
  explicit Rat(mpq_class v);

  /// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed text
  /// and PoleError on a zero denominator.
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  std::string str() const;

  Rat& operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
  }
  Rat& operator/=(const Rat& o);

  /// this += a * b without an intermediate Rat.
  void add_product(const Rat& a, const Rat& b);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

Rat pow(const Rat& base, unsigned exponent);

/// (-1)^k as a Rat.
inline Rat sign_power(long k) { return (k % 2 == 0) ? Rat(1) : Rat(-1); }

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// The constant c of the R-matrix. Never zero.
class Coupling {
 public:
  explicit Coupling(Rat c);
  const Rat& value() const { return c_; }
  /// The same coupling with c replaced by -c.
  Coupling negated() const { return Coupling(-c_); }

 private:
  Rat c_;
};

}  // namespace glmcr
