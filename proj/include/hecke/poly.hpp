#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

enum class Var { q, r };

/// Exponent pair q^q_deg r^r_deg. The natural ordering is lexicographic with
/// q most significant; it is the storage order and the division order.
struct Monomial {
  int q_deg = 0;
  int r_deg = 0;

  int total() const noexcept { return q_deg + r_deg; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Canonical serialization order: ascending total degree, ties broken by
/// descending q-degree ("1+q+r+q^2+q*r+r^2").
struct GradedOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.q_deg > b.q_deg;
  }
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial in q and r over the rationals. No zero coefficients
/// are ever stored.
class BivarPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  BivarPoly() = default;
  BivarPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  BivarPoly(long constant) : BivarPoly(Rational(constant)) {}  // NOLINT

  static BivarPoly monomial(Rational coeff, int q_deg, int r_deg);
  static BivarPoly variable(Var v) {
    return v == Var::q ? monomial(1, 1, 0) : monomial(1, 0, 1);
  }
  static BivarPoly q() { return variable(Var::q); }
  static BivarPoly r() { return variable(Var::r); }
  static BivarPoly from_terms(const std::vector<Term>& terms);

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term value; only meaningful when is_constant().
  Rational constant_value() const;
  Rational coefficient(int q_deg, int r_deg) const;
  bool depends_on(Var v) const noexcept;

  int degree(Var v) const noexcept;      // -1 for the zero polynomial
  int min_degree(Var v) const noexcept;  // 0 for the zero polynomial
  /// Lex-leading term (q most significant). Precondition: nonzero.
  const Term leading_term() const;

  /// Terms in GradedOrder.
  std::vector<Term> canonical_terms() const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const BivarPoly& o) { return *this = *this * o; }
  BivarPoly& operator*=(const Rational& c);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(BivarPoly a, const Rational& c) { return a *= c; }
  friend BivarPoly operator*(const Rational& c, BivarPoly a) { return a *= c; }
  BivarPoly operator-() const;
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

  /// Multiply by q^q_shift r^r_shift; negative shifts must keep all
  /// exponents nonnegative.
  BivarPoly shifted(int q_shift, int r_shift) const;

  /// Exact quotient when divisor | *this, std::nullopt otherwise.
  std::optional<BivarPoly> divide_exact(const BivarPoly& divisor) const;

  /// Evaluate at exact rational values.
  Rational evaluate(const Rational& q, const Rational& r) const;
  /// Univariate slice: coefficient polynomial (in the other variable) of v^k.
  BivarPoly coefficient_of(Var v, int k) const;

  /// "1-q^2", "(1/2)*" style: "-1/2*q*r+r^2". Zero prints as "0".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

BivarPoly pow(const BivarPoly& base, int exponent);

/// q-cyclotomic polynomial Phi_k(q).
const BivarPoly& cyclotomic_q(int k);
/// Phi_k(-r), i.e. Phi_k(t) under t = -r.
const BivarPoly& cyclotomic_neg_r(int k);

}  // namespace hecke
