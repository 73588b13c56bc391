#include "hecke/matrix.hpp"

namespace hecke {

Matrix identity_matrix(std::size_t size) {
  Matrix m(size, std::vector<RatFun>(size));
  for (std::size_t i = 0; i < size; ++i) m[i][i] = RatFun(1);
  return m;
}

Matrix matrix_product(const Matrix& a, const Matrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b.front().size() : 0;
  Matrix out(rows, std::vector<RatFun>(cols));
  std::vector<Rational> ones(inner, Rational(1));
  std::vector<RatFun> terms(inner);
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != inner) throw InternalError("matrix_product: shape mismatch");
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t k = 0; k < inner; ++k) terms[k] = a[i][k] * b[k][j];
      out[i][j] = linear_combination(ones, terms);
    }
  }
  return out;
}

bool matrices_equal(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  }
  return true;
}

}  // namespace hecke
