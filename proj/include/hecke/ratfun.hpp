#pragma once

#include <span>
#include <string>

#include "hecke/error.hpp"
#include "hecke/poly.hpp"

namespace hecke {

/// Quotient num/den of bivariate polynomials, den != 0.
///
/// Arithmetic results are normalized on a best-effort basis: rational content
/// is moved to the numerator and common atom factors (q, r, Phi_k(q),
/// Phi_k(-r)) are cancelled by trial division. Every denominator in this
/// library is a product of such atoms, so sums use the atom lcm instead of a
/// general gcd. Equality never relies on normalization; it is decided by
/// cross-multiplication.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(Rational c) : num_(std::move(c)), den_(1) {}  // NOLINT
  RatFun(long c) : RatFun(Rational(c)) {}               // NOLINT
  RatFun(BivarPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  /// Throws MathError on a zero denominator. Does not normalize.
  RatFun(BivarPoly num, BivarPoly den);

  static Result<RatFun> make(BivarPoly num, BivarPoly den);
  static RatFun q() { return RatFun(BivarPoly::q()); }
  static RatFun r() { return RatFun(BivarPoly::r()); }

  const BivarPoly& num() const noexcept { return num_; }
  const BivarPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  /// True when the (normalized) denominator is a constant.
  bool is_polynomial() const;
  /// Polynomial value; throws InternalError when not a polynomial.
  BivarPoly as_polynomial() const;
  bool depends_on(Var v) const noexcept {
    return num_.depends_on(v) || den_.depends_on(v);
  }

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);  // throws MathError on zero divisor
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  RatFun operator-() const;

  /// Cross-multiplication equality.
  friend bool operator==(const RatFun& a, const RatFun& b);

  std::string to_string() const;

 private:
  BivarPoly num_;
  BivarPoly den_;
};

enum class ArithOp { add, sub, mul, div };

Result<RatFun> ratfun_arith(const RatFun& a, const RatFun& b, ArithOp op);
bool ratfun_eq(const RatFun& a, const RatFun& b);
RatFun normalize(const RatFun& a);
RatFun pow(const RatFun& base, int exponent);  // negative exponents allowed

/// Sum of c_i * f_i over a common atom denominator.
RatFun linear_combination(std::span<const Rational> coeffs,
                          std::span<const RatFun> values);

/// Simultaneous substitution q -> q_value, r -> r_value.
RatFun substitute(const RatFun& a, const RatFun& q_value, const RatFun& r_value);
/// r^k -> (-q^N)^k.
RatFun substitute_r_pow(const RatFun& a, int N);
/// q -> -r, r -> -q: evaluation at the partner parameter t = -r.
RatFun swap_q_t(const RatFun& a);
/// Exact value at the given point; pole error when the normalized
/// denominator vanishes there.
Result<Rational> evaluate(const RatFun& a, const Rational& q, const Rational& r);
/// Limit q -> 1 of a univariate rational function in q.
Result<Rational> limit_q1(const RatFun& a);

/// Atom factorization of a polynomial: atoms^exponents times a cofactor
/// (a constant when the polynomial fully factors over the catalog).
struct AtomFactorization {
  std::vector<std::pair<int, int>> atoms;  // (catalog index, multiplicity)
  BivarPoly cofactor;
};
AtomFactorization factor_over_atoms(const BivarPoly& p);
const BivarPoly& atom(int index);
int atom_count();

}  // namespace hecke
