#pragma once

#include <vector>

#include "hecke/partition.hpp"

namespace hecke {

/// Integer character table of S_n: values[lambda][mu] = chi^lambda(mu),
/// both axes in canonical order.
struct IntCharTable {
  int n = 0;
  std::vector<Partition> order;
  std::vector<std::vector<long>> values;

  long at(const Partition& lambda, const Partition& mu) const;
};

/// Memoized; safe to call concurrently.
const IntCharTable& sn_characters(int n);

/// chi^lambda at the class of cycle type mu (Murnaghan-Nakayama rule).
long sn_character(const Partition& lambda, const Partition& mu);

/// Murnaghan-Nakayama recursion without the table cache.
long murnaghan_nakayama(const Partition& lambda, const Partition& mu);

}  // namespace hecke
