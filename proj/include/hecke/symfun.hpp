#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hecke/partition.hpp"
#include "hecke/ratfun.hpp"

namespace hecke {

/// p_mu * p_nu = p_{mu u nu}.
Partition merge_parts(const Partition& a, const Partition& b);

/// Homogeneous symmetric function of a fixed degree, stored in the
/// power-sum basis: coeffs[mu] is the coefficient of p_mu.
class SymFun {
 public:
  using CoeffMap = std::map<Partition, RatFun, CanonicalLess>;

  explicit SymFun(int degree = 0) : degree_(degree) {}
  static SymFun power_sum(const Partition& mu, RatFun coeff = RatFun(1));

  int degree() const noexcept { return degree_; }
  const CoeffMap& coeffs() const noexcept { return coeffs_; }
  RatFun coefficient(const Partition& mu) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Adds c * p_mu; mu must have weight degree().
  void add(const Partition& mu, const RatFun& c);

  SymFun& operator+=(const SymFun& o);
  SymFun& operator-=(const SymFun& o);
  SymFun& operator*=(const RatFun& c);
  friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
  friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
  friend SymFun operator*(SymFun a, const RatFun& c) { return a *= c; }
  friend SymFun operator*(const RatFun& c, SymFun a) { return a *= c; }
  /// Ordinary (outer) product; degrees add.
  friend SymFun operator*(const SymFun& a, const SymFun& b);

  /// Coefficientwise ratfun_eq.
  friend bool operator==(const SymFun& a, const SymFun& b);

 private:
  int degree_;
  CoeffMap coeffs_;
};

SymFun complete_h(int m);
SymFun elementary_e(int m);
SymFun complete_h(const Partition& mu);

/// s_lambda = sum_mu z_mu^{-1} chi^lambda(mu) p_mu. Memoized.
SymFun schur(const Partition& lambda);

/// Hall-Littlewood q_mu(x; t), generating function prod_i (1 - t x_i u)/(1 - x_i u).
SymFun hl_q(const Partition& mu, const RatFun& t);
enum class HLParam { q, r, inverse_q };
SymFun hl_q(const Partition& mu, HLParam param);
/// q^{|mu|} q_mu(x; q^{-1}); all coefficients are polynomials in q.
SymFun hl_q_inverse_cleared(const Partition& mu);

/// Bilinear extension of p_mu * p_nu = delta z_mu p_mu.
/// Throws std::invalid_argument on a degree mismatch.
SymFun internal_product(const SymFun& f, const SymFun& g);

using SchurExpansion = std::map<Partition, RatFun, CanonicalLess>;
/// c_lambda = <f, s_lambda>; zero coefficients are omitted.
SchurExpansion expand_in_schur(const SymFun& f);

/// p_k -> (1 - (-r)^k) / (1 - q^k).
RatFun principal_super_spec(const SymFun& f);

/// Product over cells of (q^{i-1} + r q^{j-1}) / (1 - q^{hook(i,j)}).
struct SpecProduct {
  std::vector<BivarPoly> numerators;  // one per cell, row-major
  std::vector<int> hooks;             // one per cell, row-major
  RatFun value() const;
  /// "(1+r)(1+q*r)/((1-q)(1-q^2))".
  std::string to_string() const;
};
SpecProduct schur_spec_factors(const Partition& gamma);
RatFun schur_spec_product(const Partition& gamma);

/// p_k -> N p_k (every variable repeated N times).
SymFun scale_alphabet(const SymFun& f, int N);
/// Evaluate at a finite alphabet x = (x_1, ..., x_k).
RatFun evaluate_at(const SymFun& f, std::span<const Rational> alphabet);

/// s_lambda(x^{(N)}) assembled from Kronecker coefficients and hook-content
/// products of s_nu(1^N).
SymFun n_schur(const Partition& lambda, int N);
/// s_nu(1^N) = prod (N + j - i) / hook(i,j).
Rational hook_content(const Partition& nu, int N);

/// s_gamma(xy) = sum_lambda (s_gamma * s_lambda)(x) s_lambda(y).
bool two_alphabet_product_check(const Partition& gamma);

/// Symmetric function in two alphabets; key (mu, nu) means p_mu(x) p_nu(y).
class TwoAlphabetSymFun {
 public:
  using Key = std::pair<Partition, Partition>;
  using CoeffMap = std::map<Key, RatFun>;

  TwoAlphabetSymFun() = default;
  static TwoAlphabetSymFun outer(const SymFun& fx, const SymFun& gy);

  const CoeffMap& coeffs() const noexcept { return coeffs_; }
  RatFun coefficient(const Partition& mu, const Partition& nu) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  void add(const Key& key, const RatFun& c);

  /// Components with empty y-partition, as a function of x.
  SymFun restrict_x(int degree) const;

  TwoAlphabetSymFun& operator+=(const TwoAlphabetSymFun& o);
  TwoAlphabetSymFun& operator*=(const RatFun& c);
  friend TwoAlphabetSymFun operator+(TwoAlphabetSymFun a, const TwoAlphabetSymFun& b) {
    return a += b;
  }
  friend TwoAlphabetSymFun operator*(TwoAlphabetSymFun a, const RatFun& c) { return a *= c; }
  friend TwoAlphabetSymFun operator*(const TwoAlphabetSymFun& a, const TwoAlphabetSymFun& b);
  friend bool operator==(const TwoAlphabetSymFun& a, const TwoAlphabetSymFun& b);

 private:
  CoeffMap coeffs_;
};

/// Involution omega on the y alphabet: p_nu(y) -> prod (-1)^{nu_k - 1} p_nu(y).
TwoAlphabetSymFun omega_y(const TwoAlphabetSymFun& f);
/// y_j -> -y_j: p_nu(y) -> (-1)^{|nu|} p_nu(y).
TwoAlphabetSymFun negate_y(const TwoAlphabetSymFun& f);
/// Ring map p_k -> p_k(x) + (-1)^{k-1} p_k(y).
TwoAlphabetSymFun super_map(const SymFun& f);
TwoAlphabetSymFun super_schur(const Partition& lambda);
TwoAlphabetSymFun super_hl(const Partition& mu, const RatFun& t);
/// q_m(x/y; t) read off the generating function
/// prod_i (1 - t x_i u)/(1 - x_i u) prod_j (1 + y_j u)/(1 + t y_j u).
TwoAlphabetSymFun super_hl_generating(int m, const RatFun& t);

/// Monomial symmetric functions in the power-sum basis, from the brute-force
/// p -> m expansion inverted exactly.
struct MonomialBasis {
  int n = 0;
  std::vector<Partition> order;
  /// p_to_m[mu][lambda] = coefficient of m_lambda in p_mu.
  std::vector<std::vector<Rational>> p_to_m;
  /// m_in_p[lambda] = m_lambda as a SymFun.
  std::vector<SymFun> m_in_p;
};
const MonomialBasis& monomial_basis(int n);
SymFun monomial_m(const Partition& lambda);
using MonomialExpansion = std::map<Partition, RatFun, CanonicalLess>;
/// Coefficients of f in the m-basis (zeros omitted).
MonomialExpansion to_monomial_coefficients(const SymFun& f);

}  // namespace hecke
