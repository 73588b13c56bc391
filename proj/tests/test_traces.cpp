#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hecke/characters.hpp"
#include "hecke/graded.hpp"
#include "hecke/traces.hpp"

using namespace hecke;

namespace {

const RatFun Q = RatFun::q();
const RatFun R = RatFun::r();
const RatFun ONE(1);

std::vector<RatFun> row_of(const Matrix& m, std::size_t i) { return m[i]; }

}  // namespace

TEST_CASE("markov z and prefactor") {
  CHECK(markov_z() == (Q - ONE) * R / (ONE + R));
  CHECK(markov_prefactor(3) == pow((ONE - Q) / (ONE + R), 3));
}

TEST_CASE("n=2 trace table") {
  const auto& t = markov_trace_table(2);
  CHECK(t.at(Partition{2}, Partition{2}) == (Q - ONE) * R / (ONE + R));
  CHECK(t.at(Partition{2}, Partition{1, 1}) == ONE);
  CHECK(t.at(Partition{1, 1}, Partition{2}) == (Q - ONE) / (ONE + R));
  CHECK(t.at(Partition{1, 1}, Partition{1, 1}) == ONE);
}

TEST_CASE("closed-form rows and the identity column") {
  const RatFun z = markov_z();
  for (int n = 1; n <= 6; ++n) {
    const auto& t = markov_trace_table(n);
    for (const auto& beta : t.order) {
      const int l = coxeter_length(beta);
      CHECK(t.at(Partition::row(n), beta) == pow(z, l));
      CHECK(t.at(Partition::column(n), beta) == pow(z / R, l));
    }
    for (const auto& gamma : t.order)
      CHECK(t.at(gamma, Partition::column(n)) == RatFun(static_cast<long>(standard_tableaux_count(gamma))));
    CHECK(verify_trace_examples(n).passed());
  }
}

TEST_CASE("routes agree") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(matrices_equal(trace_matrix_route(n), trace_inner_product_route(n)));
    CHECK(verify_routes(n).passed());
  }
  CHECK(matrices_equal(trace_matrix_route(5, 1), trace_matrix_route(5, 3)));
}

TEST_CASE("dual character") {
  const auto& chi = hecke_char_table(3);
  const auto& tau = markov_trace_table(3);
  // dual of the trivial row is the tau^(n) row
  CHECK(dual_character(row_of(chi.entries, 0), 3) == tau.entries[0]);
  // dual of the constant one
  const std::vector<RatFun> ones(chi.order.size(), ONE);
  const auto d = dual_character(ones, 3);
  for (std::size_t j = 0; j < chi.order.size(); ++j)
    CHECK(d[j] == pow((ONE - Q) / (ONE + R), coxeter_length(chi.order[j])));
  for (int n = 1; n <= 6; ++n) {
    const auto& c = hecke_char_table(n);
    const auto& t = markov_trace_table(n);
    for (std::size_t i = 0; i < c.order.size(); ++i) {
      CHECK(dual_character(dual_character(c.entries[i], n), n) == c.entries[i]);
      CHECK(dual_character(dual_character(t.entries[i], n), n) == t.entries[i]);
      CHECK(dual_character(c.entries[i], n) == t.entries[i]);
    }
  }
}

TEST_CASE("duality") {
  for (int n = 1; n <= 6; ++n) {
    const Report rep = verify_duality(n);
    CHECK(rep.passed());
    CHECK(rep.checked == enumerate(n).size() * enumerate(n).size());
  }
}

TEST_CASE("starkey-type identity") {
  const Matrix two = starkey_product(2);
  CHECK(two[0][0] == RatFun(0));
  CHECK(two[0][1] == ONE);
  CHECK(two[1][0] == RatFun(-1));
  CHECK(two[1][1] == ONE);
  const Matrix m_chi = matrix_product(graded_matrix(2, MolienKind::sym).entries, hecke_char_table(2).entries);
  CHECK(m_chi[0][0] == RatFun(0));
  CHECK(m_chi[0][1] == ONE / ((ONE - Q) * (ONE - Q)));
  CHECK(m_chi[1][0] == -ONE / (ONE - Q));
  for (int n = 1; n <= 6; ++n) {
    CHECK(verify_starkey(n).passed());
    const auto& chi = hecke_char_table(n);
    for (std::size_t j = 0; j + 1 < chi.order.size(); ++j)
      CHECK(evaluate(chi.entries[0][j], Rational(0), Rational(0)).value().is_zero());
  }
}

TEST_CASE("m-basis transform") {
  for (int n = 1; n <= 4; ++n) {
    const auto& chi = hecke_char_table(n);
    for (std::size_t i = 0; i < chi.order.size(); ++i) {
      const TransformSides sides = prop3_transform(chi.entries[i], n);
      CHECK(sides.equal());
      CHECK(sides.lhs == sides.rhs);
    }
    const std::vector<RatFun> zero(chi.order.size(), RatFun(0));
    const TransformSides z = prop3_transform(zero, n);
    CHECK(z.lhs.is_zero());
    CHECK(z.rhs.is_zero());
  }
  CHECK(verify_prop3(5).passed());
}

TEST_CASE("limit to N-fold alphabets") {
  const LimitSpec one = limit_n_spec(Partition{1}, 1);
  REQUIRE(one.constant.has_value());
  CHECK(*one.constant == Rational(1));
  for (int n = 1; n <= 4; ++n)
    for (int N = 1; N <= 3; ++N) {
      for (const auto& gamma : enumerate(n)) {
        const LimitSpec spec = limit_n_spec(gamma, N);
        REQUIRE(spec.constant.has_value());
        CHECK(*spec.constant == pow(Rational(N), -n));
        CHECK(spec.result == RatFun(*spec.constant) * spec.target);
        CHECK(spec.target == scale_alphabet(schur(gamma), N));
      }
      CHECK(verify_limit(n, N).passed());
    }
}

TEST_CASE("super quantum Frobenius and the conjugate trace identity") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(verify_super_frobenius(n).passed());
    CHECK(verify_example2_trace(n).passed());
  }
}

TEST_CASE("bridge between the three specialization routes") {
  for (int n = 1; n <= 6; ++n) CHECK(verify_bridge(n).passed());
}

TEST_CASE("run_check dispatch") {
  CHECK(check_names().size() == 14);
  for (auto name : check_names()) {
    const auto rep = run_check(name, 3, 2);
    REQUIRE(rep.has_value());
    CHECK(rep->check == std::string(name));
    CHECK(rep->passed());
  }
  CHECK_FALSE(run_check("nope", 3).has_value());
}
