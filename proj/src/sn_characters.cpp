#include "hecke/sn_characters.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hecke {

namespace {

using Memo = std::map<std::pair<Partition, std::vector<int>>, long>;

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int p = beta[i] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

// cycles is consumed from the back.
long mn_rec(const Partition& lambda, std::vector<int>& cycles, Memo& memo) {
  if (cycles.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, cycles);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int k = cycles.back();
  cycles.pop_back();
  const int len = lambda.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda.part(i + 1) + (len - 1 - i);

  long total = 0;
  for (int i = 0; i < len; ++i) {
    int target = beta[i] - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> moved = beta;
    moved[i] = target;
    long sub = mn_rec(from_beta(std::move(moved)), cycles, memo);
    total += (between % 2 ? -sub : sub);
  }
  cycles.push_back(k);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

long murnaghan_nakayama(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw std::invalid_argument("character arguments of different weight");
  // Strip the largest cycles first.
  std::vector<int> cycles(mu.parts().rbegin(), mu.parts().rend());
  Memo memo;
  return mn_rec(lambda, cycles, memo);
}

long IntCharTable::at(const Partition& lambda, const Partition& mu) const {
  return values.at(canonical_index(lambda)).at(canonical_index(mu));
}

const IntCharTable& sn_characters(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<IntCharTable>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<IntCharTable>();
  table->n = n;
  table->order = enumerate(n);
  Memo memo;
  for (const auto& lambda : table->order) {
    auto& row = table->values.emplace_back();
    for (const auto& mu : table->order) {
      std::vector<int> cycles(mu.parts().rbegin(), mu.parts().rend());
      row.push_back(mn_rec(lambda, cycles, memo));
    }
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(table));
  return *it->second;
}

long sn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw std::invalid_argument("character arguments of different weight");
  return sn_characters(lambda.weight()).at(lambda, mu);
}

}  // namespace hecke
