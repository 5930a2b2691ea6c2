#include "glmcr/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "glmcr/errors.hpp"

namespace glmcr {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_text(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat::Rat(std::int64_t n) : v_(static_cast<long>(n)) {}

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PoleError("rational with zero denominator");
  v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(mpq_class(parse_integer(text)));
  mpz_class num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (den_text.empty() || den_text[0] == '-' || den_text[0] == '+')
    throw std::invalid_argument("malformed denominator in '" + std::string(text) + "'");
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw PoleError("rational with zero denominator: '" + std::string(text) + "'");
  return Rat(mpq_class(num, den));
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw PoleError("division by zero");
  v_ /= o.v_;
  return *this;
}

void Rat::add_product(const Rat& a, const Rat& b) {
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
  mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), tmp.get_mpq_t());
}

Rat pow(const Rat& base, unsigned exponent) {
  Rat r(1);
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Coupling::Coupling(Rat c) : c_(std::move(c)) {
  if (c_.is_zero()) throw PoleError("coupling constant c must be nonzero");
}

}  // namespace glmcr
