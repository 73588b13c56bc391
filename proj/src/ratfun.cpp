#include "hecke/ratfun.hpp"

#include <algorithm>

namespace hecke {

namespace {

constexpr int kCatalogCyclotomics = 32;

// Catalog layout: [0] = q, [1] = r, then Phi_k(q), then Phi_k(-r).
struct Catalog {
  std::vector<BivarPoly> atoms;
  std::vector<Var> var;
  std::vector<int> degree;

  Catalog() {
    atoms.push_back(BivarPoly::q());
    var.push_back(Var::q);
    degree.push_back(1);
    atoms.push_back(BivarPoly::r());
    var.push_back(Var::r);
    degree.push_back(1);
    for (int k = 1; k <= kCatalogCyclotomics; ++k) {
      atoms.push_back(cyclotomic_q(k));
      var.push_back(Var::q);
      degree.push_back(cyclotomic_q(k).degree(Var::q));
    }
    for (int k = 1; k <= kCatalogCyclotomics; ++k) {
      atoms.push_back(cyclotomic_neg_r(k));
      var.push_back(Var::r);
      degree.push_back(cyclotomic_neg_r(k).degree(Var::r));
    }
  }
};

const Catalog& catalog() {
  static const Catalog c;
  return c;
}

// Divides p by the atom as often as possible (at most `limit` times).
int strip_atom(BivarPoly& p, int index, int limit) {
  const auto& cat = catalog();
  int count = 0;
  while (count < limit && !p.is_zero()) {
    if (cat.degree[index] > p.degree(cat.var[index])) break;
    auto quotient = p.divide_exact(cat.atoms[index]);
    if (!quotient) break;
    p = std::move(*quotient);
    ++count;
  }
  return count;
}

BivarPoly atom_power_product(const std::vector<std::pair<int, int>>& atoms) {
  BivarPoly out(1);
  for (const auto& [index, mult] : atoms) out = out * pow(atom(index), mult);
  return out;
}

// Moves all rational content into the numerator: the denominator becomes a
// primitive integer polynomial whose lowest canonical term is positive.
void fix_content(BivarPoly& num, BivarPoly& den) {
  if (den.is_constant()) {
    num *= Rational(1) / den.constant_value();
    den = BivarPoly(1);
    return;
  }
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : den.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
  }
  Rational scale(mpq_class(den_lcm, num_gcd));
  if (den.canonical_terms().front().coeff.sign() < 0) scale = -scale;
  if (!scale.is_one()) {
    den *= scale;
    num *= scale;
  }
}

// num / (unit * prod atoms), cancelling atoms against num.
RatFun reduce_with_factors(BivarPoly num, const std::vector<std::pair<int, int>>& den_atoms,
                           const BivarPoly& den_cofactor) {
  if (num.is_zero()) return RatFun();
  std::vector<std::pair<int, int>> kept;
  for (const auto& [index, mult] : den_atoms) {
    int removed = strip_atom(num, index, mult);
    if (mult > removed) kept.emplace_back(index, mult - removed);
  }
  BivarPoly den = atom_power_product(kept) * den_cofactor;
  fix_content(num, den);
  return RatFun(std::move(num), std::move(den));
}

RatFun normalize_parts(BivarPoly num, BivarPoly den) {
  if (num.is_zero()) return RatFun();
  int sq = std::min(num.min_degree(Var::q), den.min_degree(Var::q));
  int sr = std::min(num.min_degree(Var::r), den.min_degree(Var::r));
  if (sq > 0 || sr > 0) {
    num = num.shifted(-sq, -sr);
    den = den.shifted(-sq, -sr);
  }
  if (den.is_constant()) {
    fix_content(num, den);
    return RatFun(std::move(num), std::move(den));
  }
  auto f = factor_over_atoms(den);
  return reduce_with_factors(std::move(num), f.atoms, f.cofactor);
}

BivarPoly homogenized_substitute(const BivarPoly& p, const std::vector<BivarPoly>& q_num_pow,
                                 const std::vector<BivarPoly>& q_den_pow,
                                 const std::vector<BivarPoly>& r_num_pow,
                                 const std::vector<BivarPoly>& r_den_pow, int dq, int dr) {
  BivarPoly out;
  for (const auto& [m, c] : p.terms()) {
    BivarPoly t = q_num_pow[m.q_deg] * q_den_pow[dq - m.q_deg];
    t = t * r_num_pow[m.r_deg];
    t = t * r_den_pow[dr - m.r_deg];
    out += t * c;
  }
  return out;
}

std::vector<BivarPoly> powers(const BivarPoly& base, int up_to) {
  std::vector<BivarPoly> out{BivarPoly(1)};
  for (int k = 1; k <= up_to; ++k) out.push_back(out.back() * base);
  return out;
}

}  // namespace

const BivarPoly& atom(int index) { return catalog().atoms.at(index); }
int atom_count() { return static_cast<int>(catalog().atoms.size()); }

AtomFactorization factor_over_atoms(const BivarPoly& p) {
  AtomFactorization out;
  out.cofactor = p;
  const auto& cat = catalog();
  for (int i = 0; i < atom_count(); ++i) {
    if (out.cofactor.is_constant()) break;
    if (cat.degree[i] > out.cofactor.degree(cat.var[i])) continue;
    int m = strip_atom(out.cofactor, i, std::numeric_limits<int>::max());
    if (m > 0) out.atoms.emplace_back(i, m);
  }
  return out;
}

RatFun::RatFun(BivarPoly num, BivarPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw MathError({ErrorKind::division_by_zero, "rational function with zero denominator"});
}

Result<RatFun> RatFun::make(BivarPoly num, BivarPoly den) {
  if (den.is_zero())
    return Error{ErrorKind::division_by_zero, "rational function with zero denominator"};
  return RatFun(std::move(num), std::move(den));
}

bool RatFun::is_polynomial() const {
  if (den_.is_constant()) return true;
  return normalize(*this).den_.is_constant();
}

BivarPoly RatFun::as_polynomial() const {
  RatFun n = den_.is_constant() ? *this : normalize(*this);
  if (!n.den_.is_constant())
    throw InternalError("expected a polynomial, got " + to_string());
  return n.num_ * (Rational(1) / n.den_.constant_value());
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = normalize_parts(num_ + o.num_, den_);
    return *this;
  }
  if (o.den_.is_constant()) {
    *this = normalize_parts(num_ + o.num_ * den_ * (Rational(1) / o.den_.constant_value()), den_);
    return *this;
  }
  if (den_.is_constant()) {
    *this = normalize_parts(num_ * o.den_ * (Rational(1) / den_.constant_value()) + o.num_, o.den_);
    return *this;
  }
  const Rational coeffs[2] = {1, 1};
  const RatFun values[2] = {*this, o};
  *this = linear_combination(coeffs, values);
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  if (den_.is_constant() && o.den_.is_constant()) {
    BivarPoly n = num_ * o.num_;
    BivarPoly d = den_ * o.den_;
    fix_content(n, d);
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
  }
  *this = normalize_parts(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw MathError({ErrorKind::division_by_zero, "division by the zero rational function"});
  return *this *= RatFun(o.den_, o.num_);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

bool operator==(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFun::to_string() const {
  RatFun n = normalize(*this);
  if (n.den_ == BivarPoly(1)) return n.num_.to_string();
  auto wrap = [](const BivarPoly& p) {
    std::string s = p.to_string();
    return p.size() > 1 ? "(" + s + ")" : s;
  };
  std::string den = n.den_.to_string();
  bool bare = n.den_.size() == 1 && den.find('*') == std::string::npos;
  return wrap(n.num_) + "/" + (bare ? den : "(" + den + ")");
}

Result<RatFun> ratfun_arith(const RatFun& a, const RatFun& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div:
      if (b.is_zero()) return Error{ErrorKind::division_by_zero, "division by the zero rational function"};
      return a / b;
  }
  return Error{ErrorKind::domain, "unknown arithmetic operation"};
}

bool ratfun_eq(const RatFun& a, const RatFun& b) { return a == b; }

RatFun normalize(const RatFun& a) { return normalize_parts(a.num(), a.den()); }

RatFun pow(const RatFun& base, int exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw MathError({ErrorKind::division_by_zero, "negative power of zero"});
    return pow(RatFun(base.den(), base.num()), -exponent);
  }
  return normalize_parts(pow(base.num(), exponent), pow(base.den(), exponent));
}

RatFun linear_combination(std::span<const Rational> coeffs, std::span<const RatFun> values) {
  if (coeffs.size() != values.size())
    throw InternalError("linear_combination: size mismatch");
  // Distinct denominators, each factored once.
  std::vector<const BivarPoly*> dens;
  std::vector<AtomFactorization> facts;
  std::vector<std::size_t> which(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (coeffs[i].is_zero() || values[i].is_zero()) continue;
    const BivarPoly& d = values[i].den();
    auto it = std::find_if(dens.begin(), dens.end(), [&](const BivarPoly* p) { return *p == d; });
    if (it == dens.end()) {
      dens.push_back(&d);
      facts.push_back(factor_over_atoms(d));
      which[i] = dens.size() - 1;
    } else {
      which[i] = static_cast<std::size_t>(it - dens.begin());
    }
  }
  if (dens.empty()) return RatFun();

  bool all_atoms = std::all_of(facts.begin(), facts.end(),
                               [](const AtomFactorization& f) { return f.cofactor.is_constant(); });
  if (!all_atoms) {
    RatFun sum;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (coeffs[i].is_zero() || values[i].is_zero()) continue;
      BivarPoly n = values[i].num() * coeffs[i];
      BivarPoly d = values[i].den();
      if (sum.is_zero()) {
        sum = normalize_parts(n, d);
      } else {
        sum = normalize_parts(sum.num() * d + n * sum.den(), sum.den() * d);
      }
    }
    return sum;
  }

  std::map<int, int> lcm;
  for (const auto& f : facts)
    for (const auto& [index, mult] : f.atoms) lcm[index] = std::max(lcm[index], mult);
  std::vector<BivarPoly> cofactors;  // lcm / den_j
  for (const auto& f : facts) {
    std::map<int, int> rest = lcm;
    for (const auto& [index, mult] : f.atoms) rest[index] -= mult;
    BivarPoly c(Rational(1) / f.cofactor.constant_value());
    for (const auto& [index, mult] : rest)
      if (mult > 0) c = c * pow(atom(index), mult);
    cofactors.push_back(std::move(c));
  }
  BivarPoly num;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (coeffs[i].is_zero() || values[i].is_zero()) continue;
    num += values[i].num() * cofactors[which[i]] * coeffs[i];
  }
  std::vector<std::pair<int, int>> den_atoms(lcm.begin(), lcm.end());
  return reduce_with_factors(std::move(num), den_atoms, BivarPoly(1));
}

RatFun substitute(const RatFun& a, const RatFun& q_value, const RatFun& r_value) {
  int dq = std::max(a.num().degree(Var::q), a.den().degree(Var::q));
  int dr = std::max(a.num().degree(Var::r), a.den().degree(Var::r));
  dq = std::max(dq, 0);
  dr = std::max(dr, 0);
  auto qn = powers(q_value.num(), dq), qd = powers(q_value.den(), dq);
  auto rn = powers(r_value.num(), dr), rd = powers(r_value.den(), dr);
  BivarPoly num = homogenized_substitute(a.num(), qn, qd, rn, rd, dq, dr);
  BivarPoly den = homogenized_substitute(a.den(), qn, qd, rn, rd, dq, dr);
  if (den.is_zero())
    throw MathError({ErrorKind::pole, "substitution sends the denominator of " + a.to_string() + " to zero"});
  return normalize_parts(std::move(num), std::move(den));
}

RatFun substitute_r_pow(const RatFun& a, int N) {
  return substitute(a, RatFun::q(), RatFun(BivarPoly::monomial(-1, N, 0)));
}

RatFun swap_q_t(const RatFun& a) { return substitute(a, -RatFun::r(), -RatFun::q()); }

Result<Rational> evaluate(const RatFun& a, const Rational& q, const Rational& r) {
  RatFun n = normalize(a);
  Rational den = n.den().evaluate(q, r);
  if (den.is_zero())
    return Error{ErrorKind::pole, "pole of " + a.to_string() + " at q=" + q.to_string() + ", r=" + r.to_string()};
  return n.num().evaluate(q, r) / den;
}

Result<Rational> limit_q1(const RatFun& a) {
  if (a.depends_on(Var::r))
    return Error{ErrorKind::domain, "limit_q1 expects a function of q alone, got " + a.to_string()};
  RatFun n = normalize(a);
  BivarPoly num = n.num(), den = n.den();
  const BivarPoly one_minus_q = BivarPoly(1) - BivarPoly::q();
  while (!num.is_zero() && num.evaluate(1, 0).is_zero() && den.evaluate(1, 0).is_zero()) {
    num = *num.divide_exact(one_minus_q);
    den = *den.divide_exact(one_minus_q);
  }
  Rational d = den.evaluate(1, 0);
  if (d.is_zero()) return Error{ErrorKind::pole, "pole at q=1 in " + a.to_string()};
  return num.evaluate(1, 0) / d;
}

}  // namespace hecke
