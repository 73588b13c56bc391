#include "hecke/rational.hpp"

#include <stdexcept>

#include "hecke/error.hpp"

namespace hecke {

Rational::Rational(long num, long den) {
  if (den == 0) throw MathError({ErrorKind::division_by_zero, "zero denominator"});
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den = slash == std::string::npos ? mpz_class(1)
                                               : mpz_class(s.substr(slash + 1), 10);
    if (den == 0) throw MathError({ErrorKind::parse, "zero denominator in '" + s + "'"});
    return Rational(mpq_class(num, den));
  } catch (const std::invalid_argument&) {
    throw MathError({ErrorKind::parse, "malformed rational '" + s + "'"});
  }
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::string Rational::to_fraction_string() const {
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MathError({ErrorKind::division_by_zero, "rational division by zero"});
  value_ /= o.value_;
  return *this;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return pow(Rational(1) / base, -exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

}  // namespace hecke
