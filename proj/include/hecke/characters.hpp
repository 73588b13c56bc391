#pragma once

#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/partition.hpp"
#include "hecke/report.hpp"
#include "hecke/sn_characters.hpp"

namespace hecke {

/// Square table in canonical order: rows are characters lambda, columns
/// are classes (S_n) or elements T_{w_beta} (Hecke algebra).
struct CharTable {
  int n = 0;
  std::vector<Partition> order;
  Matrix entries;

  const RatFun& at(const Partition& lambda, const Partition& beta) const {
    return entries.at(canonical_index(lambda)).at(canonical_index(beta));
  }
};

CharTable sn_char_table(int n);

/// sum_rho z_rho^{-1} chi^lambda(rho) chi^mu(rho) chi^nu(rho).
long kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);

/// M[chi^gamma]^lambda_nu = kronecker(gamma, lambda, nu).
struct TensorMatrix {
  int n = 0;
  std::vector<Partition> order;
  Matrix entries;
};
TensorMatrix tensor_matrix(const Partition& gamma);

/// chi_q^lambda(T_{w_mu}) from the quantum Frobenius expansion of
/// q^n (q-1)^{-l(mu)} q_mu(x; q^{-1}). Memoized. Throws InternalError if a
/// column fails to divide exactly.
const CharTable& hecke_char_table(int n);

/// One-dimensional rows, conjugate twist and transposition column.
Report example_checks(int n);

/// q -> q^{-1} on a function of q, as a Laurent substitution.
RatFun invert_q(const RatFun& f);

}  // namespace hecke
