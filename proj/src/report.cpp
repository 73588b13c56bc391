#include "hecke/report.hpp"

namespace hecke {

void Report::absorb(const Report& other) {
  checked += other.checked;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  for (const auto& n : other.notes) notes.push_back(n);
}

}  // namespace hecke
