#include "cspoly/rat.hpp"

#include <cctype>
#include <ostream>

#include "cspoly/errors.hpp"

namespace cspoly {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(mpq_class value) : v_(std::move(value)) {
  if (v_.get_den() == 0) throw DivisionByZero();
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  mpq_class q;
  q.get_num() = parse_integer(num);
  q.get_den() = 1;
  if (slash != std::string_view::npos) {
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den)) {
      throw InputError("malformed rational '" + std::string(text) + "'");
    }
    q.get_den() = parse_integer(den);
    if (q.get_den() == 0) {
      throw InputError("zero denominator in '" + std::string(text) + "'");
    }
  }
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rat Rat::pow(unsigned exponent) const {
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), v_.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), v_.get_den_mpz_t(), exponent);
  return Rat(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace cspoly
