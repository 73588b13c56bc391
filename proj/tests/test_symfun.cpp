#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "hecke/sn_characters.hpp"
#include "hecke/symfun.hpp"

using namespace hecke;

namespace {

const RatFun Q = RatFun::q();
const RatFun R = RatFun::r();

Rational rdet(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

// s_lambda(x_1..x_k) = det(x_i^{lambda_j + k - j}) / det(x_i^{k - j}), distinct x_i.
Rational bialternant(const Partition& lambda, const std::vector<Rational>& x) {
  const int k = static_cast<int>(x.size());
  if (lambda.length() > k) return Rational(0);
  std::vector<std::vector<Rational>> num(k, std::vector<Rational>(k)), den = num;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      num[i][j] = pow(x[i], lambda.part(j + 1) + k - 1 - j);
      den[i][j] = pow(x[i], k - 1 - j);
    }
  return rdet(num) / rdet(den);
}

// m_lambda(x) as the sum over distinct rearrangements of the exponent vector.
Rational monomial_direct(const Partition& lambda, const std::vector<Rational>& x) {
  if (lambda.length() > static_cast<int>(x.size())) return Rational(0);
  std::vector<int> exps(x.size(), 0);
  for (int i = 0; i < lambda.length(); ++i) exps[i] = lambda.part(i + 1);
  std::sort(exps.begin(), exps.end());
  Rational total(0);
  do {
    Rational term(1);
    for (std::size_t i = 0; i < x.size(); ++i) term *= pow(x[i], exps[i]);
    total += term;
  } while (std::next_permutation(exps.begin(), exps.end()));
  return total;
}

Rational eval_const(const RatFun& f) { return evaluate(f, Rational(0), Rational(0)).value(); }

}  // namespace

TEST_CASE("schur examples") {
  CHECK(schur(Partition{1}) == SymFun::power_sum(Partition{1}));
  const RatFun half(Rational(1, 2));
  CHECK(schur(Partition{2}) == half * SymFun::power_sum(Partition{1, 1}) + half * SymFun::power_sum(Partition{2}));
  CHECK(schur(Partition{1, 1}) == half * SymFun::power_sum(Partition{1, 1}) - half * SymFun::power_sum(Partition{2}));
}

TEST_CASE("schur agrees with the bialternant at numeric alphabets") {
  const std::vector<std::vector<Rational>> alphabets = {
      {Rational(1), Rational(2), Rational(3)},
      {Rational(1, 2), Rational(-1), Rational(3), Rational(5, 3)},
  };
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : enumerate(n))
      for (const auto& x : alphabets)
        CHECK(eval_const(evaluate_at(schur(lambda), x)) == bialternant(lambda, x));
}

TEST_CASE("h and e against Schur rows and columns") {
  for (int m = 1; m <= 7; ++m) {
    CHECK(complete_h(m) == schur(Partition::row(m)));
    CHECK(elementary_e(m) == schur(Partition::column(m)));
  }
  CHECK(complete_h(Partition{2, 1}) == schur(Partition{3}) + schur(Partition{2, 1}));
}

TEST_CASE("orthonormality") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : enumerate(n)) {
      const auto e = expand_in_schur(schur(lambda));
      REQUIRE(e.size() == 1);
      CHECK(e.begin()->first == lambda);
      CHECK(e.begin()->second == RatFun(1));
    }
  CHECK(expand_in_schur(SymFun(3)).empty());
  for (int n = 1; n <= 6; ++n) {
    const auto e = expand_in_schur(SymFun::power_sum(Partition::column(n)));
    for (const auto& lambda : enumerate(n))
      CHECK(e.at(lambda) == RatFun(static_cast<long>(standard_tableaux_count(lambda))));
  }
}

TEST_CASE("internal product") {
  const auto s21 = schur(Partition{2, 1});
  CHECK(internal_product(s21, s21) == schur(Partition{3}) + s21 + schur(Partition{1, 1, 1}));
  CHECK_THROWS_AS(internal_product(s21, schur(Partition{2})), std::invalid_argument);
  for (int n = 1; n <= 5; ++n) {
    const auto parts = enumerate(n);
    const SymFun unit = schur(Partition::row(n));
    for (const auto& a : parts) {
      CHECK(internal_product(unit, schur(a)) == schur(a));
      CHECK(internal_product(schur(Partition::column(n)), schur(a)) == schur(a.conjugate()));
      for (const auto& b : parts) {
        const SymFun ab = internal_product(schur(a), schur(b));
        CHECK(ab == internal_product(schur(b), schur(a)));
        for (const auto& c : parts)
          CHECK(internal_product(ab, schur(c)) == internal_product(schur(a), internal_product(schur(b), schur(c))));
      }
    }
  }
}

TEST_CASE("outer product and Pieri") {
  const SymFun lhs = schur(Partition{2}) * schur(Partition{1});
  CHECK(lhs == schur(Partition{3}) + schur(Partition{2, 1}));
  CHECK(lhs.degree() == 3);
}

TEST_CASE("hall-littlewood degenerations") {
  const RatFun t = Q;
  CHECK(hl_q(Partition{1}, t) == (RatFun(1) - t) * SymFun::power_sum(Partition{1}));
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : enumerate(n)) {
      CHECK(hl_q(mu, RatFun(0)) == complete_h(mu));
      CHECK(hl_q(mu, RatFun(1)).is_zero());
    }
  // cleared inverse form: q^|mu| q_mu(x; 1/q)
  for (int n = 1; n <= 4; ++n)
    for (const auto& mu : enumerate(n)) {
      const SymFun direct = pow(Q, n) * hl_q(mu, RatFun(1) / Q);
      CHECK(hl_q_inverse_cleared(mu) == direct);
      CHECK(hl_q(mu, HLParam::inverse_q) == hl_q(mu, RatFun(1) / Q));
      const SymFun cleared = hl_q_inverse_cleared(mu);
      for (const auto& [nu, c] : cleared.coeffs()) CHECK(c.is_polynomial());
    }
}

TEST_CASE("principal super specialization examples") {
  const RatFun one(1);
  CHECK(principal_super_spec(schur(Partition{1})) == (one + R) / (one - Q));
  CHECK(principal_super_spec(schur(Partition{2})) == (one + R) * (one + Q * R) / ((one - Q) * (one - Q * Q)));
  CHECK(principal_super_spec(SymFun::power_sum(Partition{2})) == (one - R * R) / (one - Q * Q));
}

TEST_CASE("schur product formula") {
  const RatFun one(1);
  CHECK(schur_spec_product(Partition{1}) == (one + R) / (one - Q));
  CHECK(schur_spec_product(Partition{2}) == (one + R) * (one + R * Q) / ((one - Q) * (one - Q * Q)));
  CHECK(schur_spec_product(Partition{1, 1}) == (one + R) * (Q + R) / ((one - Q) * (one - Q * Q)));
  CHECK(schur_spec_factors(Partition{2}).to_string() == "(1+r)(1+q*r)/((1-q)(1-q^2))");
  CHECK(schur_spec_factors(Partition{1}).to_string() == "(1+r)/(1-q)");
  CHECK(schur_spec_factors(Partition{2, 1}).to_string() == "(1+r)(1+q*r)(q+r)/((1-q)^2(1-q^3))");
  for (int n = 1; n <= 6; ++n)
    for (const auto& gamma : enumerate(n))
      CHECK(schur_spec_product(gamma) == principal_super_spec(schur(gamma)));
}

TEST_CASE("finite N principal specialization") {
  // r = -q^N turns the alphabet into (1, q, ..., q^{N-1}); s_lambda there at q = 1 is s_lambda(1^N).
  for (int n = 1; n <= 5; ++n)
    for (const auto& gamma : enumerate(n))
      for (int N = 1; N <= 3; ++N) {
        const RatFun v = substitute_r_pow(schur_spec_product(gamma), N);
        CHECK(limit_q1(v).value() == hook_content(gamma, N));
      }
}

TEST_CASE("scale_alphabet and n_schur") {
  for (const auto& lambda : enumerate(3)) CHECK(scale_alphabet(schur(lambda), 1) == schur(lambda));
  CHECK(scale_alphabet(SymFun::power_sum(Partition{2, 1}), 3) == RatFun(9) * SymFun::power_sum(Partition{2, 1}));
  const std::vector<Rational> x{Rational(1)};
  CHECK(eval_const(evaluate_at(scale_alphabet(schur(Partition{2}), 2), x)) == Rational(3));
  CHECK(hook_content(Partition{2}, 2) == Rational(3));
  for (int N = 1; N <= 3; ++N) CHECK(n_schur(Partition{1}, N) == RatFun(N) * schur(Partition{1}));
  CHECK(n_schur(Partition{2}, 1) == schur(Partition{2}));
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : enumerate(n))
      for (int N = 1; N <= 3; ++N) CHECK(n_schur(lambda, N) == scale_alphabet(schur(lambda), N));
}

TEST_CASE("two alphabet product") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& gamma : enumerate(n)) CHECK(two_alphabet_product_check(gamma));
}

TEST_CASE("omega_y") {
  TwoAlphabetSymFun f;
  f.add({Partition{}, Partition{2}}, RatFun(3));
  f.add({Partition{}, Partition{1, 1}}, RatFun(5));
  const auto g = omega_y(f);
  CHECK(g.coefficient(Partition{}, Partition{2}) == RatFun(-3));
  CHECK(g.coefficient(Partition{}, Partition{1, 1}) == RatFun(5));

  std::mt19937 rng(314);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    TwoAlphabetSymFun h;
    for (int a = 0; a <= 4; ++a)
      for (const auto& mu : enumerate(a))
        for (const auto& nu : enumerate(4 - a)) h.add({mu, nu}, RatFun(c(rng)) * (RatFun(1) + Q * c(rng)));
    CHECK(omega_y(omega_y(h)) == h);
    CHECK(negate_y(negate_y(h)) == h);
  }
}

TEST_CASE("super schur and super hall-littlewood") {
  TwoAlphabetSymFun s1;
  s1.add({Partition{1}, Partition{}}, RatFun(1));
  s1.add({Partition{}, Partition{1}}, RatFun(1));
  CHECK(super_schur(Partition{1}) == s1);
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : enumerate(n)) {
      CHECK(super_schur(lambda).restrict_x(n) == schur(lambda));
      CHECK(super_hl(lambda, RatFun(0)) == super_map(complete_h(lambda)));
      CHECK(super_hl(lambda, Q).restrict_x(n) == hl_q(lambda, Q));
    }
  for (int m = 1; m <= 4; ++m) CHECK(super_hl_generating(m, Q) == super_hl(Partition{m}, Q));
}

TEST_CASE("super specialization bridge") {
  // x = (1, q, q^2, ...), y = r x: p_k(x) -> 1/(1-q^k), p_k(y) -> r^k/(1-q^k).
  for (int n = 1; n <= 5; ++n)
    for (const auto& gamma : enumerate(n)) {
      RatFun total(0);
      const TwoAlphabetSymFun s = super_schur(gamma);
      for (const auto& [key, c] : s.coeffs()) {
        RatFun term = c;
        for (int k : key.first.parts()) term *= RatFun(1) / (RatFun(1) - pow(Q, k));
        for (int k : key.second.parts()) term *= pow(R, k) / (RatFun(1) - pow(Q, k));
        total += term;
      }
      CHECK(total == principal_super_spec(schur(gamma)));
    }
}

TEST_CASE("monomial basis") {
  const std::vector<Rational> x{Rational(2), Rational(-1), Rational(1, 3), Rational(4)};
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : enumerate(n))
      CHECK(eval_const(evaluate_at(monomial_m(lambda), x)) == monomial_direct(lambda, x));
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : enumerate(n)) {
      const auto m = to_monomial_coefficients(monomial_m(lambda));
      REQUIRE(m.size() == 1);
      CHECK(m.begin()->first == lambda);
    }
  // coefficient of m_lambda in s_lambda is 1 (Kostka unitriangularity)
  for (const auto& lambda : enumerate(5)) CHECK(to_monomial_coefficients(schur(lambda)).at(lambda) == RatFun(1));
}
