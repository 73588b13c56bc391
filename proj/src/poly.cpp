#include "hecke/poly.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <sstream>

#include "hecke/error.hpp"

namespace hecke {

BivarPoly::BivarPoly(Rational constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, std::move(constant));
}

BivarPoly BivarPoly::monomial(Rational coeff, int q_deg, int r_deg) {
  BivarPoly p;
  if (!coeff.is_zero()) p.terms_.emplace(Monomial{q_deg, r_deg}, std::move(coeff));
  return p;
}

BivarPoly BivarPoly::from_terms(const std::vector<Term>& terms) {
  BivarPoly p;
  for (const auto& t : terms) {
    if (t.monomial.q_deg < 0 || t.monomial.r_deg < 0)
      throw MathError({ErrorKind::domain, "negative exponent in polynomial term"});
    p.add_term(t.monomial, t.coeff);
  }
  return p;
}

void BivarPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool BivarPoly::is_constant() const noexcept {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational BivarPoly::constant_value() const { return coefficient(0, 0); }

Rational BivarPoly::coefficient(int q_deg, int r_deg) const {
  auto it = terms_.find(Monomial{q_deg, r_deg});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool BivarPoly::depends_on(Var v) const noexcept {
  for (const auto& [m, c] : terms_)
    if ((v == Var::q ? m.q_deg : m.r_deg) > 0) return true;
  return false;
}

int BivarPoly::degree(Var v) const noexcept {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, v == Var::q ? m.q_deg : m.r_deg);
  return d;
}

int BivarPoly::min_degree(Var v) const noexcept {
  if (terms_.empty()) return 0;
  int d = std::numeric_limits<int>::max();
  for (const auto& [m, c] : terms_) d = std::min(d, v == Var::q ? m.q_deg : m.r_deg);
  return d;
}

const Term BivarPoly::leading_term() const {
  const auto& [m, c] = *terms_.rbegin();
  return Term{m, c};
}

std::vector<Term> BivarPoly::canonical_terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back({m, c});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    return GradedOrder{}(a.monomial, b.monomial);
  });
  return out;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b * a.constant_value();
  if (b.is_constant()) return a * b.constant_value();
  BivarPoly out;
  mpq_class prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m{ma.q_deg + mb.q_deg, ma.r_deg + mb.r_deg};
      mpq_mul(prod.get_mpq_t(), ca.raw().get_mpq_t(), cb.raw().get_mpq_t());
      out.add_term(m, Rational(prod));
    }
  }
  return out;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

BivarPoly BivarPoly::shifted(int q_shift, int r_shift) const {
  BivarPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial s{m.q_deg + q_shift, m.r_deg + r_shift};
    if (s.q_deg < 0 || s.r_deg < 0)
      throw MathError({ErrorKind::domain, "monomial shift below degree zero"});
    out.terms_.emplace_hint(out.terms_.end(), s, c);
  }
  return out;
}

std::optional<BivarPoly> BivarPoly::divide_exact(const BivarPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return BivarPoly{};
  if (divisor.is_constant()) return *this * (Rational(1) / divisor.constant_value());
  if (divisor.degree(Var::q) > degree(Var::q) || divisor.degree(Var::r) > degree(Var::r))
    return std::nullopt;

  const Term lead = divisor.leading_term();
  const Rational inv_lead = Rational(1) / lead.coeff;
  BivarPoly rem = *this;
  BivarPoly quot;
  while (!rem.is_zero()) {
    const auto& [m, c] = *rem.terms_.rbegin();
    int dq = m.q_deg - lead.monomial.q_deg;
    int dr = m.r_deg - lead.monomial.r_deg;
    if (dq < 0 || dr < 0) return std::nullopt;
    Rational factor = c * inv_lead;
    quot.add_term(Monomial{dq, dr}, factor);
    for (const auto& [dm, dc] : divisor.terms_)
      rem.add_term(Monomial{dm.q_deg + dq, dm.r_deg + dr}, -(dc * factor));
  }
  return quot;
}

Rational BivarPoly::evaluate(const Rational& q, const Rational& r) const {
  Rational sum;
  for (const auto& [m, c] : terms_) sum += c * pow(q, m.q_deg) * pow(r, m.r_deg);
  return sum;
}

BivarPoly BivarPoly::coefficient_of(Var v, int k) const {
  BivarPoly out;
  for (const auto& [m, c] : terms_) {
    if (v == Var::q && m.q_deg == k) out.add_term({0, m.r_deg}, c);
    if (v == Var::r && m.r_deg == k) out.add_term({m.q_deg, 0}, c);
  }
  return out;
}

namespace {

void append_monomial(std::ostringstream& os, const Monomial& m) {
  bool first = true;
  auto factor = [&](const char* name, int d) {
    if (d == 0) return;
    if (!first) os << '*';
    os << name;
    if (d > 1) os << '^' << d;
    first = false;
  };
  factor("q", m.q_deg);
  factor("r", m.r_deg);
}

}  // namespace

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : canonical_terms()) {
    bool negative = c.sign() < 0;
    Rational mag = negative ? -c : c;
    if (negative) os << '-';
    else if (!first) os << '+';
    if (m == Monomial{}) {
      os << mag.to_string();
    } else {
      if (!mag.is_one()) os << mag.to_string() << '*';
      append_monomial(os, m);
    }
    first = false;
  }
  return os.str();
}

BivarPoly pow(const BivarPoly& base, int exponent) {
  if (exponent < 0) throw MathError({ErrorKind::domain, "negative polynomial power"});
  BivarPoly result(1);
  BivarPoly b = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * b;
    exponent >>= 1;
    if (exponent) b = b * b;
  }
  return result;
}

namespace {

std::vector<BivarPoly> build_cyclotomics(Var v, int count) {
  // Phi_k(x) = (x^k - 1) / prod_{d | k, d < k} Phi_d(x), with x = q or x = -r.
  std::vector<BivarPoly> phi(count + 1);
  BivarPoly x = v == Var::q ? BivarPoly::q() : -BivarPoly::r();
  for (int k = 1; k <= count; ++k) {
    BivarPoly p = pow(x, k) - BivarPoly(1);
    for (int d = 1; d < k; ++d)
      if (k % d == 0) p = *p.divide_exact(phi[d]);
    phi[k] = p;
  }
  return phi;
}

constexpr int kMaxCyclotomic = 64;

}  // namespace

const BivarPoly& cyclotomic_q(int k) {
  static const std::vector<BivarPoly> table = build_cyclotomics(Var::q, kMaxCyclotomic);
  if (k < 1 || k > kMaxCyclotomic) throw MathError({ErrorKind::domain, "cyclotomic index out of range"});
  return table[k];
}

const BivarPoly& cyclotomic_neg_r(int k) {
  static const std::vector<BivarPoly> table = build_cyclotomics(Var::r, kMaxCyclotomic);
  if (k < 1 || k > kMaxCyclotomic) throw MathError({ErrorKind::domain, "cyclotomic index out of range"});
  return table[k];
}

}  // namespace hecke
