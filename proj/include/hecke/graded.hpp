#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/partition.hpp"

namespace hecke {

enum class MolienKind { sym, ext, sym_ext, coinvariant };

std::string to_string(MolienKind kind);
/// "sym", "ext", "symext" | "sym-ext", "coinv" | "coinvariant".
std::optional<MolienKind> parse_molien_kind(std::string_view text);

/// Graded trace of an m-cycle of the permutation representation:
/// 1/(1-q^m) on S(V), 1-(-r)^m on the exterior algebra, their product on S(V) x L(V).
RatFun cycle_weight(MolienKind kind, int m);

/// Graded tensor-multiplication matrix in the irreducible-character basis:
/// entry(i, j) = sum_mu z_mu^{-1} chi^i(mu) chi^j(mu) w(mu).
struct GradedTensorMatrix {
  int n = 0;
  MolienKind kind = MolienKind::sym;
  std::vector<Partition> order;
  Matrix entries;
};

/// `threads` > 1 computes rows concurrently; the result does not depend on it.
GradedTensorMatrix graded_matrix(int n, MolienKind kind, unsigned threads = 1);

/// Trivial-character row of graded_matrix(n, sym_ext).
std::vector<RatFun> poincare_row(int n);

/// Graded character of the coinvariant algebra for the permutation
/// representation.
struct CoinvariantCharacter {
  int n = 0;
  std::vector<Partition> order;
  /// zeta_C(q) at each class, polynomials in q.
  std::vector<RatFun> class_values;
  /// Hilbert series of invariants, sum d_i q^i, as a rational function.
  RatFun invariant_hilbert;
  /// Degrees e with sum d_i q^i = prod 1/(1-q^e), read off the series.
  std::vector<int> invariant_degrees;
  /// M[zeta_C(q)], entries polynomials in q.
  Matrix multiplicities;
};
CoinvariantCharacter coinvariant_character(int n);

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace hecke
