#pragma once

#include <vector>

#include "hecke/ratfun.hpp"

namespace hecke {

using Matrix = std::vector<std::vector<RatFun>>;

Matrix identity_matrix(std::size_t size);
Matrix matrix_product(const Matrix& a, const Matrix& b);
/// Entrywise ratfun_eq.
bool matrices_equal(const Matrix& a, const Matrix& b);

template <class Fn>
Matrix map_entries(const Matrix& m, Fn fn) {
  Matrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    auto& dst = out.emplace_back();
    dst.reserve(row.size());
    for (const auto& x : row) dst.push_back(fn(x));
  }
  return out;
}

}  // namespace hecke
