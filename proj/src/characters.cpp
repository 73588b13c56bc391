#include "hecke/characters.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "hecke/symfun.hpp"

namespace hecke {

CharTable sn_char_table(int n) {
  const auto& ints = sn_characters(n);
  CharTable t;
  t.n = n;
  t.order = ints.order;
  for (const auto& row : ints.values) {
    auto& dst = t.entries.emplace_back();
    for (long v : row) dst.emplace_back(v);
  }
  return t;
}

long kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const int n = lambda.weight();
  if (mu.weight() != n || nu.weight() != n)
    throw std::invalid_argument("kronecker: partitions of different weight");
  const auto& t = sn_characters(n);
  const auto& a = t.values[canonical_index(lambda)];
  const auto& b = t.values[canonical_index(mu)];
  const auto& c = t.values[canonical_index(nu)];
  Rational sum;
  for (std::size_t k = 0; k < t.order.size(); ++k)
    sum += Rational(a[k] * b[k] * c[k]) / Rational(static_cast<long>(z_mu(t.order[k])));
  if (!sum.is_integer() || sum.sign() < 0)
    throw InternalError("kronecker: non-integral multiplicity " + sum.to_string());
  return sum.numerator().get_si();
}

TensorMatrix tensor_matrix(const Partition& gamma) {
  TensorMatrix m;
  m.n = gamma.weight();
  m.order = enumerate(m.n);
  for (const auto& lambda : m.order) {
    auto& row = m.entries.emplace_back();
    for (const auto& nu : m.order) row.emplace_back(kronecker(gamma, lambda, nu));
  }
  return m;
}

namespace {

CharTable build_hecke_table(int n) {
  CharTable t;
  t.n = n;
  t.order = enumerate(n);
  const std::size_t size = t.order.size();
  t.entries.assign(size, std::vector<RatFun>(size));
  for (std::size_t col = 0; col < size; ++col) {
    const Partition& mu = t.order[col];
    const BivarPoly divisor = pow(BivarPoly::q() - BivarPoly(1), mu.length());
    SchurExpansion column = expand_in_schur(hl_q_inverse_cleared(mu));
    for (std::size_t row = 0; row < size; ++row) {
      auto it = column.find(t.order[row]);
      if (it == column.end()) continue;
      BivarPoly numerator = it->second.as_polynomial();
      auto quotient = numerator.divide_exact(divisor);
      if (!quotient)
        throw InternalError("quantum Frobenius: (q-1)^" + std::to_string(mu.length()) +
                            " does not divide " + numerator.to_string() + " at " +
                            t.order[row].to_string() + ", " + mu.to_string());
      t.entries[row][col] = RatFun(std::move(*quotient));
    }
  }
  return t;
}

}  // namespace

const CharTable& hecke_char_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CharTable>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<CharTable>(build_hecke_table(n));
  std::lock_guard lock(mutex);
  return *cache.try_emplace(n, std::move(table)).first->second;
}

RatFun invert_q(const RatFun& f) {
  return substitute(f, RatFun(BivarPoly(1), BivarPoly::q()), RatFun::r());
}

Report example_checks(int n) {
  Report report{"examples", n};
  const auto& chi = hecke_char_table(n);
  const auto& sn = sn_characters(n);
  const auto& order = chi.order;
  const Partition trivial = Partition::row(n);
  const Partition sign = Partition::column(n);

  for (const auto& beta : order) {
    const int l = coxeter_length(beta);
    report.expect_equal(trivial.to_string(), beta.to_string(), chi.at(trivial, beta),
                        RatFun(BivarPoly::monomial(1, l, 0)));
    report.expect_equal(sign.to_string(), beta.to_string(), chi.at(sign, beta),
                        RatFun(l % 2 ? -1 : 1));
  }

  for (const auto& lambda : order) {
    const Partition conj = lambda.conjugate();
    for (const auto& beta : order) {
      const int l = coxeter_length(beta);
      RatFun twisted = pow(-RatFun::q(), l) * invert_q(chi.at(lambda, beta));
      report.expect_equal(conj.to_string(), beta.to_string(), chi.at(conj, beta), twisted);
    }
  }

  if (n >= 2) {
    std::vector<int> parts(n - 1, 1);
    parts[0] = 2;
    const Partition transposition(parts);
    const Partition identity = Partition::column(n);
    for (const auto& lambda : order) {
      Rational dim(sn.at(lambda, identity));
      Rational at_s(sn.at(lambda, transposition));
      RatFun expected = RatFun::q() * RatFun((dim + at_s) / Rational(2)) -
                        RatFun((dim - at_s) / Rational(2));
      report.expect_equal(lambda.to_string(), transposition.to_string(),
                          chi.at(lambda, transposition), expected);
    }
  }
  return report;
}

}  // namespace hecke
