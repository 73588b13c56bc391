#include "hecke/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hecke {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::row(int n) { return n == 0 ? Partition() : Partition({n}); }
Partition Partition::column(int n) { return Partition(std::vector<int>(n, 1)); }

int Partition::multiplicity(int k) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.assign(parts_.front(), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++cols[j];
  }
  return Partition(std::move(cols));
}

std::string Partition::to_string() const { return "(" + to_csv() + ")"; }

std::string Partition::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate(int n) {
  if (n < 0) throw std::invalid_argument("enumerate: negative weight");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_rec(n, n, prefix, out);
  return out;
}

std::size_t canonical_index(const Partition& lambda) {
  auto all = enumerate(lambda.weight());
  auto it = std::lower_bound(all.begin(), all.end(), lambda, CanonicalLess{});
  return static_cast<std::size_t>(it - all.begin());
}

Result<Partition> parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string field;
  auto flush = [&]() -> bool {
    if (field.empty()) return false;
    for (char c : field)
      if (c < '0' || c > '9') return false;
    if (field.size() > 6) return false;
    parts.push_back(std::stoi(field));
    field.clear();
    return true;
  };
  for (char c : text) {
    if (c == ' ') continue;
    if (c == ',') {
      if (!flush()) return Error{ErrorKind::parse, "malformed partition '" + std::string(text) + "'"};
    } else {
      field.push_back(c);
    }
  }
  if (!flush()) return Error{ErrorKind::parse, "malformed partition '" + std::string(text) + "'"};
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    return Error{ErrorKind::parse, "invalid partition '" + std::string(text) + "': " + e.what()};
  }
}

int hook(const Partition& lambda, int i, int j) {
  if (i < 1 || j < 1 || j > lambda.part(i))
    throw std::out_of_range("cell (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside " + lambda.to_string());
  Partition conj = lambda.conjugate();
  return lambda.part(i) + conj.part(j) - i - j + 1;
}

int content(int i, int j) { return j - i; }

std::uint64_t factorial(int n) {
  if (n > 20) throw std::overflow_error("factorial overflows 64 bits");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t z_mu(const Partition& mu) {
  std::uint64_t z = 1;
  int i = 1;
  for (; i <= mu.weight(); ++i) {
    int m = mu.multiplicity(i);
    for (int k = 0; k < m; ++k) z *= static_cast<std::uint64_t>(i);
    z *= factorial(m);
  }
  return z;
}

int coxeter_length(const Partition& lambda) { return lambda.weight() - lambda.length(); }

std::uint64_t standard_tableaux_count(const Partition& lambda) {
  // n! / prod hooks, accumulated without overflow for n <= 20.
  std::uint64_t hooks = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) hooks *= static_cast<std::uint64_t>(hook(lambda, i, j));
  return factorial(lambda.weight()) / hooks;
}

}  // namespace hecke
