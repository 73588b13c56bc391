#include "hecke/symfun.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "hecke/characters.hpp"
#include "hecke/sn_characters.hpp"

namespace hecke {

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts(a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

// ---------------------------------------------------------------- SymFun

SymFun SymFun::power_sum(const Partition& mu, RatFun coeff) {
  SymFun f(mu.weight());
  f.add(mu, coeff);
  return f;
}

RatFun SymFun::coefficient(const Partition& mu) const {
  auto it = coeffs_.find(mu);
  return it == coeffs_.end() ? RatFun() : it->second;
}

void SymFun::add(const Partition& mu, const RatFun& c) {
  if (mu.weight() != degree_)
    throw std::invalid_argument("SymFun: term " + mu.to_string() + " has the wrong degree");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymFun& SymFun::operator+=(const SymFun& o) {
  if (o.degree_ != degree_) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    throw std::invalid_argument("SymFun: adding functions of different degree");
  }
  for (const auto& [mu, c] : o.coeffs_) add(mu, c);
  return *this;
}

SymFun& SymFun::operator-=(const SymFun& o) { return *this += o * RatFun(-1); }

SymFun& SymFun::operator*=(const RatFun& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [mu, v] : coeffs_) v *= c;
  return *this;
}

SymFun operator*(const SymFun& a, const SymFun& b) {
  SymFun out(a.degree_ + b.degree_);
  for (const auto& [mu, ca] : a.coeffs_)
    for (const auto& [nu, cb] : b.coeffs_) out.add(merge_parts(mu, nu), ca * cb);
  return out;
}

bool operator==(const SymFun& a, const SymFun& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.degree_ != b.degree_ || a.coeffs_.size() != b.coeffs_.size()) return false;
  for (const auto& [mu, c] : a.coeffs_) {
    auto it = b.coeffs_.find(mu);
    if (it == b.coeffs_.end() || !(it->second == c)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- h, e, s

namespace {

template <class Builder>
const SymFun& memoized(std::map<Partition, SymFun>& cache, std::mutex& mutex, const Partition& key,
                       Builder build) {
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  SymFun value = build();
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(value)).first->second;
}

// Newton: m h_m = sum_k p_k h_{m-k};  m e_m = sum_k (-1)^{k-1} p_k e_{m-k}.
SymFun newton(int m, bool elementary, std::map<int, SymFun>& cache) {
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  SymFun out(m);
  if (m == 0) {
    out.add(Partition(), RatFun(1));
  } else {
    for (int k = 1; k <= m; ++k) {
      long sign = elementary && (k % 2 == 0) ? -1 : 1;
      out += SymFun::power_sum(Partition({k}), RatFun(Rational(sign, m))) *
             newton(m - k, elementary, cache);
    }
  }
  cache.emplace(m, out);
  return out;
}

std::mutex& newton_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

SymFun complete_h(int m) {
  static std::map<int, SymFun> cache;
  std::lock_guard lock(newton_mutex());
  return newton(m, false, cache);
}

SymFun elementary_e(int m) {
  static std::map<int, SymFun> cache;
  std::lock_guard lock(newton_mutex());
  return newton(m, true, cache);
}

SymFun complete_h(const Partition& mu) {
  SymFun out = SymFun::power_sum(Partition());
  for (int part : mu.parts()) out = out * complete_h(part);
  return out;
}

SymFun schur(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, SymFun> cache;
  return memoized(cache, mutex, lambda, [&] {
    const auto& table = sn_characters(lambda.weight());
    const auto& row = table.values[canonical_index(lambda)];
    SymFun f(lambda.weight());
    for (std::size_t j = 0; j < table.order.size(); ++j) {
      const auto& mu = table.order[j];
      f.add(mu, RatFun(Rational(row[j]) / Rational(static_cast<long>(z_mu(mu)))));
    }
    return f;
  });
}

// ---------------------------------------------------------------- Hall-Littlewood

namespace {

SymFun hl_part(int m, const RatFun& t) {
  // q_m = sum_{a+b=m} (-t)^b h_a e_b
  SymFun out(m);
  RatFun minus_t_pow(1);
  for (int b = 0; b <= m; ++b) {
    out += complete_h(m - b) * elementary_e(b) * minus_t_pow;
    minus_t_pow = minus_t_pow * (-t);
  }
  return out;
}

}  // namespace

SymFun hl_q(const Partition& mu, const RatFun& t) {
  SymFun out = SymFun::power_sum(Partition());
  for (int part : mu.parts()) out = out * hl_part(part, t);
  return out;
}

SymFun hl_q(const Partition& mu, HLParam param) {
  switch (param) {
    case HLParam::q: return hl_q(mu, RatFun::q());
    case HLParam::r: return hl_q(mu, RatFun::r());
    case HLParam::inverse_q: return hl_q(mu, RatFun(BivarPoly(1), BivarPoly::q()));
  }
  throw std::invalid_argument("hl_q: unknown parameter");
}

SymFun hl_q_inverse_cleared(const Partition& mu) {
  // q^m q_m(x; q^{-1}) = sum_b (-1)^b q^{m-b} h_{m-b} e_b
  SymFun out = SymFun::power_sum(Partition());
  for (int m : mu.parts()) {
    SymFun part(m);
    for (int b = 0; b <= m; ++b) {
      RatFun c(BivarPoly::monomial(b % 2 ? -1 : 1, m - b, 0));
      part += complete_h(m - b) * elementary_e(b) * c;
    }
    out = out * part;
  }
  return out;
}

// ---------------------------------------------------------------- products, expansions

SymFun internal_product(const SymFun& f, const SymFun& g) {
  if (f.degree() != g.degree())
    throw std::invalid_argument("internal_product: degree mismatch (" + std::to_string(f.degree()) +
                                " vs " + std::to_string(g.degree()) + ")");
  SymFun out(f.degree());
  for (const auto& [mu, c] : f.coeffs()) {
    auto it = g.coeffs().find(mu);
    if (it == g.coeffs().end()) continue;
    out.add(mu, c * it->second * RatFun(static_cast<long>(z_mu(mu))));
  }
  return out;
}

SchurExpansion expand_in_schur(const SymFun& f) {
  SchurExpansion out;
  if (f.is_zero()) return out;
  const auto& table = sn_characters(f.degree());
  std::vector<RatFun> values;
  std::vector<std::size_t> cols;
  for (const auto& [mu, c] : f.coeffs()) {
    values.push_back(c);
    cols.push_back(canonical_index(mu));
  }
  std::vector<Rational> weights(values.size());
  for (std::size_t i = 0; i < table.order.size(); ++i) {
    for (std::size_t k = 0; k < cols.size(); ++k) weights[k] = Rational(table.values[i][cols[k]]);
    RatFun c = linear_combination(weights, values);
    if (!c.is_zero()) out.emplace(table.order[i], std::move(c));
  }
  return out;
}

namespace {

RatFun power_sum_spec(const Partition& mu) {
  BivarPoly num(1), den(1);
  for (int k : mu.parts()) {
    num = num * (BivarPoly(1) - BivarPoly::monomial(k % 2 ? -1 : 1, 0, k));
    den = den * (BivarPoly(1) - BivarPoly::monomial(1, k, 0));
  }
  return RatFun(num, den);
}

}  // namespace

RatFun principal_super_spec(const SymFun& f) {
  std::vector<Rational> ones;
  std::vector<RatFun> terms;
  for (const auto& [mu, c] : f.coeffs()) {
    terms.push_back(c * power_sum_spec(mu));
    ones.emplace_back(1);
  }
  return linear_combination(ones, terms);
}

SpecProduct schur_spec_factors(const Partition& gamma) {
  SpecProduct out;
  for (int i = 1; i <= gamma.length(); ++i) {
    for (int j = 1; j <= gamma.part(i); ++j) {
      out.numerators.push_back(BivarPoly::monomial(1, i - 1, 0) + BivarPoly::monomial(1, j - 1, 1));
      out.hooks.push_back(hook(gamma, i, j));
    }
  }
  return out;
}

RatFun SpecProduct::value() const {
  BivarPoly num(1), den(1);
  for (const auto& p : numerators) num = num * p;
  for (int h : hooks) den = den * (BivarPoly(1) - BivarPoly::monomial(1, h, 0));
  return normalize(RatFun(num, den));
}

std::string SpecProduct::to_string() const {
  // Group repeated factors; numerators keep cell order, denominators ascend.
  std::vector<std::pair<std::string, int>> num;
  for (const auto& p : numerators) {
    std::string s = p.to_string();
    auto it = std::find_if(num.begin(), num.end(), [&](const auto& e) { return e.first == s; });
    if (it == num.end()) num.emplace_back(s, 1);
    else ++it->second;
  }
  std::map<int, int> den;
  for (int h : hooks) ++den[h];
  auto factor = [](const std::string& body, int mult) {
    std::string s = "(" + body + ")";
    return mult > 1 ? s + "^" + std::to_string(mult) : s;
  };
  std::ostringstream os;
  if (num.empty()) os << "1";
  for (const auto& [s, m] : num) os << factor(s, m);
  if (den.empty()) return os.str();
  std::ostringstream ds;
  for (const auto& [h, m] : den) ds << factor(h == 1 ? "1-q" : "1-q^" + std::to_string(h), m);
  bool single = den.size() == 1 && den.begin()->second == 1;
  os << "/" << (single ? ds.str() : "(" + ds.str() + ")");
  return os.str();
}

RatFun schur_spec_product(const Partition& gamma) { return schur_spec_factors(gamma).value(); }

SymFun scale_alphabet(const SymFun& f, int N) {
  if (N < 1) throw std::invalid_argument("scale_alphabet: N must be positive");
  SymFun out(f.degree());
  for (const auto& [mu, c] : f.coeffs()) out.add(mu, c * RatFun(pow(Rational(N), mu.length())));
  return out;
}

RatFun evaluate_at(const SymFun& f, std::span<const Rational> alphabet) {
  std::vector<Rational> weights;
  std::vector<RatFun> values;
  for (const auto& [mu, c] : f.coeffs()) {
    Rational w(1);
    for (int k : mu.parts()) {
      Rational pk;
      for (const auto& x : alphabet) pk += pow(x, k);
      w *= pk;
    }
    weights.push_back(w);
    values.push_back(c);
  }
  return linear_combination(weights, values);
}

Rational hook_content(const Partition& nu, int N) {
  Rational v(1);
  for (int i = 1; i <= nu.length(); ++i)
    for (int j = 1; j <= nu.part(i); ++j) v *= Rational(N + content(i, j), hook(nu, i, j));
  return v;
}

SymFun n_schur(const Partition& lambda, int N) {
  const int n = lambda.weight();
  auto parts = enumerate(n);
  SymFun out(n);
  for (const auto& gamma : parts) {
    Rational coeff;
    for (const auto& nu : parts) {
      long g = kronecker(gamma, lambda, nu);
      if (g != 0) coeff += hook_content(nu, N) * Rational(g);
    }
    if (!coeff.is_zero()) out += schur(gamma) * RatFun(coeff);
  }
  return out;
}

bool two_alphabet_product_check(const Partition& gamma) {
  TwoAlphabetSymFun lhs;
  const SymFun s_gamma = schur(gamma);
  for (const auto& [mu, c] : s_gamma.coeffs()) lhs.add({mu, mu}, c);
  TwoAlphabetSymFun rhs;
  for (const auto& lambda : enumerate(gamma.weight()))
    rhs += TwoAlphabetSymFun::outer(internal_product(schur(gamma), schur(lambda)), schur(lambda));
  return lhs == rhs;
}

// ---------------------------------------------------------------- two alphabets

TwoAlphabetSymFun TwoAlphabetSymFun::outer(const SymFun& fx, const SymFun& gy) {
  TwoAlphabetSymFun out;
  for (const auto& [mu, a] : fx.coeffs())
    for (const auto& [nu, b] : gy.coeffs()) out.add({mu, nu}, a * b);
  return out;
}

RatFun TwoAlphabetSymFun::coefficient(const Partition& mu, const Partition& nu) const {
  auto it = coeffs_.find({mu, nu});
  return it == coeffs_.end() ? RatFun() : it->second;
}

void TwoAlphabetSymFun::add(const Key& key, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymFun TwoAlphabetSymFun::restrict_x(int degree) const {
  SymFun out(degree);
  for (const auto& [key, c] : coeffs_)
    if (key.second.empty()) out.add(key.first, c);
  return out;
}

TwoAlphabetSymFun& TwoAlphabetSymFun::operator+=(const TwoAlphabetSymFun& o) {
  for (const auto& [key, c] : o.coeffs_) add(key, c);
  return *this;
}

TwoAlphabetSymFun& TwoAlphabetSymFun::operator*=(const RatFun& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [key, v] : coeffs_) v *= c;
  return *this;
}

TwoAlphabetSymFun operator*(const TwoAlphabetSymFun& a, const TwoAlphabetSymFun& b) {
  TwoAlphabetSymFun out;
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_)
      out.add({merge_parts(ka.first, kb.first), merge_parts(ka.second, kb.second)}, ca * cb);
  return out;
}

bool operator==(const TwoAlphabetSymFun& a, const TwoAlphabetSymFun& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (const auto& [key, c] : a.coeffs_) {
    auto it = b.coeffs_.find(key);
    if (it == b.coeffs_.end() || !(it->second == c)) return false;
  }
  return true;
}

TwoAlphabetSymFun omega_y(const TwoAlphabetSymFun& f) {
  TwoAlphabetSymFun out;
  for (const auto& [key, c] : f.coeffs()) {
    // prod (-1)^{nu_k - 1} = (-1)^{|nu| - l(nu)}
    bool odd = (key.second.weight() - key.second.length()) % 2 != 0;
    out.add(key, odd ? -c : c);
  }
  return out;
}

TwoAlphabetSymFun negate_y(const TwoAlphabetSymFun& f) {
  TwoAlphabetSymFun out;
  for (const auto& [key, c] : f.coeffs()) out.add(key, key.second.weight() % 2 ? -c : c);
  return out;
}

TwoAlphabetSymFun super_map(const SymFun& f) {
  TwoAlphabetSymFun out;
  for (const auto& [mu, c] : f.coeffs()) {
    // Expand prod_k (p_k(x) + (-1)^{k-1} p_k(y)) over subsets of the parts.
    const auto parts = mu.parts();
    const std::size_t len = parts.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
      std::vector<int> xs, ys;
      bool negative = false;
      for (std::size_t k = 0; k < len; ++k) {
        if (mask & (std::size_t{1} << k)) {
          ys.push_back(parts[k]);
          if (parts[k] % 2 == 0) negative = !negative;
        } else {
          xs.push_back(parts[k]);
        }
      }
      out.add({Partition(xs), Partition(ys)}, negative ? -c : c);
    }
  }
  return out;
}

TwoAlphabetSymFun super_schur(const Partition& lambda) { return super_map(schur(lambda)); }

TwoAlphabetSymFun super_hl(const Partition& mu, const RatFun& t) { return super_map(hl_q(mu, t)); }

TwoAlphabetSymFun super_hl_generating(int m, const RatFun& t) {
  // x-side: (sum h_a u^a)(sum (-t)^b e_b u^b); y-side: (sum e_c u^c)(sum (-t)^d h_d u^d).
  TwoAlphabetSymFun out;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; a + b <= m; ++b)
      for (int c = 0; a + b + c <= m; ++c) {
        int d = m - a - b - c;
        RatFun coeff = pow(-t, b + d);
        out += TwoAlphabetSymFun::outer(complete_h(a) * elementary_e(b),
                                        elementary_e(c) * complete_h(d)) *
               coeff;
      }
  return out;
}

// ---------------------------------------------------------------- monomial basis

namespace {

// Coefficient of x^lambda in p_mu: number of ways to assign each part of mu
// to a variable so that variable v receives total degree lambda_v.
long count_assignments(std::span<const int> parts, std::size_t next, std::vector<int>& remaining) {
  if (next == parts.size()) {
    for (int r : remaining)
      if (r != 0) return 0;
    return 1;
  }
  long total = 0;
  for (auto& slot : remaining) {
    if (slot >= parts[next]) {
      slot -= parts[next];
      total += count_assignments(parts, next + 1, remaining);
      slot += parts[next];
    }
  }
  return total;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw InternalError("monomial basis: singular p -> m matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational scale = Rational(1) / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

const MonomialBasis& monomial_basis(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<MonomialBasis>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto basis = std::make_unique<MonomialBasis>();
  basis->n = n;
  basis->order = enumerate(n);
  const std::size_t size = basis->order.size();
  basis->p_to_m.assign(size, std::vector<Rational>(size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const auto& lambda = basis->order[j];
      std::vector<int> remaining(lambda.parts().begin(), lambda.parts().end());
      basis->p_to_m[i][j] = Rational(count_assignments(basis->order[i].parts(), 0, remaining));
    }
  }
  // p = R m  =>  m = R^{-1} p
  auto inv = invert(basis->p_to_m);
  for (std::size_t l = 0; l < size; ++l) {
    SymFun m(n);
    for (std::size_t mu = 0; mu < size; ++mu)
      if (!inv[l][mu].is_zero()) m.add(basis->order[mu], RatFun(inv[l][mu]));
    basis->m_in_p.push_back(std::move(m));
  }
  std::lock_guard lock(mutex);
  return *cache.try_emplace(n, std::move(basis)).first->second;
}

SymFun monomial_m(const Partition& lambda) {
  return monomial_basis(lambda.weight()).m_in_p[canonical_index(lambda)];
}

MonomialExpansion to_monomial_coefficients(const SymFun& f) {
  MonomialExpansion out;
  if (f.is_zero()) return out;
  const auto& basis = monomial_basis(f.degree());
  std::vector<RatFun> values;
  std::vector<std::size_t> rows;
  for (const auto& [mu, c] : f.coeffs()) {
    values.push_back(c);
    rows.push_back(canonical_index(mu));
  }
  std::vector<Rational> weights(values.size());
  for (std::size_t l = 0; l < basis.order.size(); ++l) {
    for (std::size_t k = 0; k < rows.size(); ++k) weights[k] = basis.p_to_m[rows[k]][l];
    RatFun c = linear_combination(weights, values);
    if (!c.is_zero()) out.emplace(basis.order[l], std::move(c));
  }
  return out;
}

}  // namespace hecke
