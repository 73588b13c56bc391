#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/partition.hpp"
#include "hecke/report.hpp"
#include "hecke/symfun.hpp"

namespace hecke {

/// tau_q^gamma(T_{w_beta}): rows gamma, columns beta, canonical order.
struct TraceTable {
  int n = 0;
  std::vector<Partition> order;
  Matrix entries;

  const RatFun& at(const Partition& gamma, const Partition& beta) const {
    return entries.at(canonical_index(gamma)).at(canonical_index(beta));
  }
};

/// ((1-q)/(1+r))^n
RatFun markov_prefactor(int n);
/// z with z (1+r) = (q-1) r.
RatFun markov_z();

/// prefactor * M[zeta_S(q) (x) zeta_A(r)] * chi_q
Matrix trace_matrix_route(int n, unsigned threads = 1);
/// prefactor * [principal_super_spec(s_lambda * s_gamma)] * chi_q
Matrix trace_inner_product_route(int n, unsigned threads = 1);

/// Both routes, compared entrywise before returning; throws InternalError
/// naming the first differing (gamma, beta). Memoized per n.
const TraceTable& markov_trace_table(int n, unsigned threads = 1);

/// zeta^(lambda) = ((1-q)/(1-t))^{l(w_lambda)} zeta_t(lambda), t = -r, where
/// zeta_t swaps q -> -r, r -> -q. `values` is indexed by enumerate(n).
std::vector<RatFun> dual_character(std::span<const RatFun> values, int n);

/// (1+r)^n T_q(dual zeta) and (1-q)^n T_t(zeta_t) at t = -r, with
/// T_q(zeta) = sum_lambda (q-1)^{l(lambda)} zeta(T_{w_lambda}) m_lambda.
struct TransformSides {
  SymFun lhs;
  SymFun rhs;
  MonomialExpansion lhs_m;
  MonomialExpansion rhs_m;
  bool equal() const;
};
TransformSides prop3_transform(std::span<const RatFun> values, int n);
/// T_q(zeta) itself, in the power-sum basis.
SymFun m_transform(std::span<const RatFun> values, int n);

/// Frobenius image of lim_{q->1} tau^gamma|_{r=-q^N}, and the constant c
/// with result = c * s_gamma(x^{(N)}).
struct LimitSpec {
  SymFun result;
  SymFun target;
  std::vector<Rational> limits;  // v_beta in canonical order
  std::optional<Rational> constant;  // empty when not proportional
};
LimitSpec limit_n_spec(const Partition& gamma, int N);

/// M[zeta_S(q)] chi_q D[(1-q)^{l(beta)}].
Matrix starkey_product(int n);

Report verify_duality(int n);
Report verify_starkey(int n);
Report verify_prop3(int n);
Report verify_limit(int n, int N);
Report verify_super_frobenius(int n);
Report verify_example2_trace(int n);
/// Closed-form trace rows for gamma = (n), (1^n) and the transposition column.
Report verify_trace_examples(int n);
Report verify_routes(int n, unsigned threads = 1);
/// schur_spec_product = principal_super_spec(schur) = Poincare row entry.
Report verify_bridge(int n);
Report verify_coinvariant(int n);
/// Commuting Molien family and the factorization sym-ext = sym * ext.
Report verify_molien_family(int n);

/// Names accepted by run_check, in display order.
std::span<const std::string_view> check_names();
/// Dispatches a named check; std::nullopt for an unknown name.
std::optional<Report> run_check(std::string_view name, int n, int N = 1, unsigned threads = 1);

}  // namespace hecke
