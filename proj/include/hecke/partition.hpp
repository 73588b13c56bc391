#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/error.hpp"

namespace hecke {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// (n) and (1^n).
  static Partition row(int n);
  static Partition column(int n);

  std::span<const int> parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  /// 1-based row length; 0 past the last row.
  int part(int i) const noexcept {
    return i >= 1 && i <= length() ? parts_[i - 1] : 0;
  }
  /// Number of parts equal to k.
  int multiplicity(int k) const noexcept;

  Partition conjugate() const;

  /// "(2,1)"; the empty partition prints as "()".
  std::string to_string() const;
  /// "2,1", the CLI/JSON syntax.
  std::string to_csv() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Descending lexicographic order: (3) < (2,1) < (1,1,1).
struct CanonicalLess {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// All partitions of n in canonical order; n = 0 gives the empty partition.
std::vector<Partition> enumerate(int n);
/// Position of lambda in enumerate(lambda.weight()).
std::size_t canonical_index(const Partition& lambda);

/// Parses "3,1". Rejects empty fields, non-positive or increasing parts.
Result<Partition> parse_partition(std::string_view text);

/// lambda_i + lambda'_j - i - j + 1 for the 1-based cell (i, j).
/// Throws std::out_of_range for a cell outside the diagram.
int hook(const Partition& lambda, int i, int j);
/// j - i for the 1-based cell (i, j).
int content(int i, int j);

/// Centralizer order prod_i i^{m_i} m_i!.
std::uint64_t z_mu(const Partition& mu);
std::uint64_t factorial(int n);

/// Length of the Coxeter element of the Young subgroup S_lambda: n - l(lambda).
int coxeter_length(const Partition& lambda);

/// Number of standard Young tableaux by the hook length formula.
std::uint64_t standard_tableaux_count(const Partition& lambda);

}  // namespace hecke
