#include "hecke/graded.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "hecke/sn_characters.hpp"

namespace hecke {

std::string to_string(MolienKind kind) {
  switch (kind) {
    case MolienKind::sym: return "sym";
    case MolienKind::ext: return "ext";
    case MolienKind::sym_ext: return "symext";
    case MolienKind::coinvariant: return "coinv";
  }
  return "?";
}

std::optional<MolienKind> parse_molien_kind(std::string_view text) {
  if (text == "sym") return MolienKind::sym;
  if (text == "ext") return MolienKind::ext;
  if (text == "symext" || text == "sym-ext") return MolienKind::sym_ext;
  if (text == "coinv" || text == "coinvariant") return MolienKind::coinvariant;
  return std::nullopt;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

RatFun cycle_weight(MolienKind kind, int m) {
  const BivarPoly one(1);
  const BivarPoly sym_den = one - BivarPoly::monomial(1, m, 0);
  const BivarPoly ext = one - BivarPoly::monomial(m % 2 ? -1 : 1, 0, m);
  switch (kind) {
    case MolienKind::sym: return RatFun(one, sym_den);
    case MolienKind::ext: return RatFun(ext);
    case MolienKind::sym_ext: return RatFun(ext, sym_den);
    case MolienKind::coinvariant: break;
  }
  throw std::invalid_argument("cycle_weight: coinvariant weights are not per-cycle");
}

namespace {

// Builds sum_mu z_mu^{-1} chi^i(mu) chi^j(mu) w(mu) for all (i, j).
Matrix class_function_matrix(int n, const std::vector<RatFun>& class_weights, unsigned threads) {
  const auto& t = sn_characters(n);
  const std::size_t size = t.order.size();
  std::vector<Rational> inv_z(size);
  for (std::size_t k = 0; k < size; ++k)
    inv_z[k] = Rational(1) / Rational(static_cast<long>(z_mu(t.order[k])));
  Matrix m(size, std::vector<RatFun>(size));
  parallel_for(size, threads, [&](std::size_t i) {
    std::vector<Rational> coeffs(size);
    for (std::size_t j = i; j < size; ++j) {
      for (std::size_t k = 0; k < size; ++k)
        coeffs[k] = inv_z[k] * Rational(t.values[i][k] * t.values[j][k]);
      m[i][j] = linear_combination(coeffs, class_weights);
    }
  });
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < i; ++j) m[i][j] = m[j][i];
  return m;
}

std::vector<RatFun> per_cycle_weights(int n, MolienKind kind) {
  std::vector<RatFun> out;
  for (const auto& mu : enumerate(n)) {
    RatFun w(1);
    for (int part : mu.parts()) w *= cycle_weight(kind, part);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

GradedTensorMatrix graded_matrix(int n, MolienKind kind, unsigned threads) {
  GradedTensorMatrix g;
  g.n = n;
  g.kind = kind;
  g.order = enumerate(n);
  if (kind == MolienKind::coinvariant) {
    g.entries = coinvariant_character(n).multiplicities;
  } else {
    g.entries = class_function_matrix(n, per_cycle_weights(n, kind), threads);
  }
  return g;
}

std::vector<RatFun> poincare_row(int n) {
  return graded_matrix(n, MolienKind::sym_ext).entries.front();
}

CoinvariantCharacter coinvariant_character(int n) {
  CoinvariantCharacter c;
  c.n = n;
  c.order = enumerate(n);
  const auto sym_weights = per_cycle_weights(n, MolienKind::sym);
  const Matrix sym = class_function_matrix(n, sym_weights, 1);
  // Trivial-trivial entry: Hilbert series of the invariants.
  c.invariant_hilbert = normalize(sym[0][0]);
  const RatFun inverse_hilbert = RatFun(1) / c.invariant_hilbert;
  if (!inverse_hilbert.is_polynomial())
    throw InternalError("coinvariant: invariant Hilbert series is not 1/polynomial");

  // Peel (1 - q^k) factors off prod (1 - q^e), smallest k first.
  BivarPoly rest = inverse_hilbert.as_polynomial();
  while (!rest.is_constant()) {
    int k = 1;
    while (rest.coefficient(k, 0).is_zero()) ++k;
    auto quotient = rest.divide_exact(BivarPoly(1) - BivarPoly::monomial(1, k, 0));
    if (!quotient) throw InternalError("coinvariant: Hilbert series is not a product of (1-q^k)");
    rest = std::move(*quotient);
    c.invariant_degrees.push_back(k);
  }

  for (const auto& w : sym_weights) {
    RatFun v = inverse_hilbert * w;
    if (!v.is_polynomial())
      throw InternalError("coinvariant: class value " + v.to_string() + " is not a polynomial");
    c.class_values.push_back(RatFun(v.as_polynomial()));
  }
  c.multiplicities = class_function_matrix(n, c.class_values, 1);
  for (auto& row : c.multiplicities)
    for (auto& e : row) {
      if (!e.is_polynomial())
        throw InternalError("coinvariant: multiplicity " + e.to_string() + " is not a polynomial");
      e = RatFun(e.as_polynomial());
    }
  return c;
}

}  // namespace hecke
