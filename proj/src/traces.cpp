#include "hecke/traces.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>

#include "hecke/characters.hpp"
#include "hecke/graded.hpp"

namespace hecke {

namespace {

RatFun one_minus_q() { return RatFun(BivarPoly(1) - BivarPoly::q()); }
RatFun one_plus_r() { return RatFun(BivarPoly(1) + BivarPoly::r()); }

RatFun at_q_zero(const RatFun& f) { return substitute(f, RatFun(0), RatFun::r()); }
RatFun at_q_minus_r(const RatFun& f) { return substitute(f, -RatFun::r(), RatFun::r()); }

std::vector<Partition> transposition_class(int n) {
  if (n < 2) return {};
  std::vector<int> parts(n - 1, 1);
  parts[0] = 2;
  return {Partition(parts)};
}

std::string first_difference(const Matrix& a, const Matrix& b, const std::vector<Partition>& order) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] == b[i][j]))
        return "gamma=" + order[i].to_string() + " beta=" + order[j].to_string() + ": " +
               a[i][j].to_string() + " vs " + b[i][j].to_string();
  return {};
}

}  // namespace

RatFun markov_prefactor(int n) { return pow(one_minus_q() / one_plus_r(), n); }

RatFun markov_z() { return RatFun::q() * RatFun::r() / one_plus_r() - RatFun::r() / one_plus_r(); }

Matrix trace_matrix_route(int n, unsigned threads) {
  const Matrix molien = graded_matrix(n, MolienKind::sym_ext, threads).entries;
  const auto& chi = hecke_char_table(n);
  const RatFun pref = markov_prefactor(n);
  return map_entries(matrix_product(molien, chi.entries), [&](const RatFun& x) { return pref * x; });
}

Matrix trace_inner_product_route(int n, unsigned threads) {
  const auto order = enumerate(n);
  const std::size_t size = order.size();
  Matrix spec(size, std::vector<RatFun>(size));
  parallel_for(size, threads, [&](std::size_t g) {
    for (std::size_t l = 0; l < size; ++l)
      spec[g][l] = principal_super_spec(internal_product(schur(order[l]), schur(order[g])));
  });
  const auto& chi = hecke_char_table(n);
  const RatFun pref = markov_prefactor(n);
  return map_entries(matrix_product(spec, chi.entries), [&](const RatFun& x) { return pref * x; });
}

const TraceTable& markov_trace_table(int n, unsigned threads) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<TraceTable>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<TraceTable>();
  table->n = n;
  table->order = enumerate(n);
  table->entries = trace_matrix_route(n, threads);
  const Matrix other = trace_inner_product_route(n, threads);
  if (auto diff = first_difference(table->entries, other, table->order); !diff.empty())
    throw InternalError("markov trace routes disagree at " + diff);
  std::lock_guard lock(mutex);
  return *cache.try_emplace(n, std::move(table)).first->second;
}

std::vector<RatFun> dual_character(std::span<const RatFun> values, int n) {
  const auto order = enumerate(n);
  if (values.size() != order.size()) throw std::invalid_argument("dual_character: wrong number of values");
  const RatFun ratio = one_minus_q() / one_plus_r();
  std::vector<RatFun> out;
  for (std::size_t i = 0; i < order.size(); ++i)
    out.push_back(pow(ratio, coxeter_length(order[i])) * swap_q_t(values[i]));
  return out;
}

// ---------------------------------------------------------------- m-basis transform

SymFun m_transform(std::span<const RatFun> values, int n) {
  const auto order = enumerate(n);
  SymFun out(n);
  const RatFun q_minus_1 = RatFun::q() - RatFun(1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (values[i].is_zero()) continue;
    out += monomial_m(order[i]) * (pow(q_minus_1, order[i].length()) * values[i]);
  }
  return out;
}

bool TransformSides::equal() const {
  if (lhs_m.size() != rhs_m.size()) return false;
  for (const auto& [lambda, c] : lhs_m) {
    auto it = rhs_m.find(lambda);
    if (it == rhs_m.end() || !(it->second == c)) return false;
  }
  return lhs == rhs;
}

TransformSides prop3_transform(std::span<const RatFun> values, int n) {
  TransformSides sides;
  const auto dual = dual_character(values, n);
  sides.lhs = m_transform(dual, n) * pow(one_plus_r(), n);
  // T_t(zeta_t) = sum (t-1)^{l} zeta_t m_lambda, then t = -r.
  const auto order = enumerate(n);
  SymFun t_side(n);
  const RatFun t_minus_1 = -RatFun::r() - RatFun(1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    RatFun zt = swap_q_t(values[i]);
    if (zt.is_zero()) continue;
    t_side += monomial_m(order[i]) * (pow(t_minus_1, order[i].length()) * zt);
  }
  sides.rhs = t_side * pow(one_minus_q(), n);
  sides.lhs_m = to_monomial_coefficients(sides.lhs);
  sides.rhs_m = to_monomial_coefficients(sides.rhs);
  return sides;
}

// ---------------------------------------------------------------- N-fold alphabet limits

LimitSpec limit_n_spec(const Partition& gamma, int N) {
  const int n = gamma.weight();
  const auto& tau = markov_trace_table(n);
  LimitSpec out{SymFun(n), scale_alphabet(schur(gamma), N), {}, std::nullopt};
  const std::size_t row = canonical_index(gamma);
  for (std::size_t j = 0; j < tau.order.size(); ++j) {
    const Partition& beta = tau.order[j];
    Result<Rational> v = limit_q1(substitute_r_pow(tau.entries[row][j], N));
    if (!v) throw InternalError("limit_n_spec: " + v.error().message);
    out.limits.push_back(v.value());
    out.result.add(beta, RatFun(v.value() / Rational(static_cast<long>(z_mu(beta)))));
  }
  if (out.target.is_zero()) {
    if (out.result.is_zero()) out.constant = Rational(0);
    return out;
  }
  const auto& [mu, t] = *out.target.coeffs().begin();
  Rational c = out.result.coefficient(mu).as_polynomial().constant_value() /
               t.as_polynomial().constant_value();
  if (out.result == out.target * RatFun(c)) out.constant = c;
  return out;
}

// ---------------------------------------------------------------- Starkey-type identity

Matrix starkey_product(int n) {
  const auto& chi = hecke_char_table(n);
  Matrix p = matrix_product(graded_matrix(n, MolienKind::sym).entries, chi.entries);
  for (auto& row : p)
    for (std::size_t j = 0; j < row.size(); ++j)
      row[j] = row[j] * pow(one_minus_q(), chi.order[j].length());
  return p;
}

// ---------------------------------------------------------------- reports

Report verify_duality(int n) {
  Report report{"duality", n};
  const auto& tau = markov_trace_table(n);
  const auto& chi = hecke_char_table(n);
  for (std::size_t i = 0; i < tau.order.size(); ++i) {
    for (std::size_t j = 0; j < tau.order.size(); ++j) {
      const int l = coxeter_length(tau.order[j]);
      report.expect_equal(tau.order[i].to_string(), tau.order[j].to_string(),
                          pow(one_plus_r(), l) * tau.entries[i][j],
                          pow(one_minus_q(), l) * at_q_minus_r(chi.entries[i][j]));
    }
  }
  return report;
}

Report verify_starkey(int n) {
  Report report{"starkey", n};
  const auto& chi = hecke_char_table(n);
  const Matrix p = starkey_product(n);
  const std::array<Rational, 5> samples = {Rational(2), Rational(3), Rational(-2), Rational(1, 2),
                                           Rational(5, 3)};
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p[i].size(); ++j) {
      const std::string lam = chi.order[i].to_string(), beta = chi.order[j].to_string();
      const RatFun expected = at_q_zero(chi.entries[i][j]);
      report.expect_equal(lam, beta, p[i][j], expected);
      // Independence of q, checked by evaluation.
      std::optional<Rational> first;
      for (const auto& s : samples) {
        ++report.checked;
        Result<Rational> v = evaluate(p[i][j], s, Rational(0));
        if (!v || !v.value().is_integer() || (first && !(*first == v.value()))) {
          report.fail(lam, beta, "q=" + s.to_string() + ": " + (v ? v.value().to_string() : "pole"),
                      first ? first->to_string() : "integer");
          break;
        }
        if (!first) first = v.value();
      }
    }
  }
  return report;
}

Report verify_prop3(int n) {
  Report report{"prop3", n};
  const auto& chi = hecke_char_table(n);
  auto check = [&](const std::string& label, std::span<const RatFun> values) {
    TransformSides sides = prop3_transform(values, n);
    ++report.checked;
    if (!sides.equal()) {
      std::string l, r;
      for (const auto& [lambda, c] : sides.lhs_m) l += "m" + lambda.to_string() + ":" + c.to_string() + " ";
      for (const auto& [lambda, c] : sides.rhs_m) r += "m" + lambda.to_string() + ":" + c.to_string() + " ";
      report.fail(label, "-", l, r);
    }
  };
  for (std::size_t i = 0; i < chi.order.size(); ++i) check(chi.order[i].to_string(), chi.entries[i]);
  // Reconstruction: the m-coefficients of T_q(zeta) are (q-1)^{l} zeta.
  for (std::size_t i = 0; i < chi.order.size(); ++i) {
    MonomialExpansion m = to_monomial_coefficients(m_transform(chi.entries[i], n));
    for (std::size_t j = 0; j < chi.order.size(); ++j) {
      auto it = m.find(chi.order[j]);
      RatFun got = it == m.end() ? RatFun() : it->second;
      report.expect_equal(chi.order[i].to_string(), chi.order[j].to_string(), got,
                          pow(RatFun::q() - RatFun(1), chi.order[j].length()) * chi.entries[i][j]);
    }
  }
  const std::vector<RatFun> zero(chi.order.size());
  check("zero", zero);
  return report;
}

Report verify_limit(int n, int N) {
  Report report{"limit", n};
  report.note("N", std::to_string(N));
  std::optional<Rational> shared;
  bool uniform = true;
  for (const auto& gamma : enumerate(n)) {
    LimitSpec spec = limit_n_spec(gamma, N);
    ++report.checked;
    if (!spec.constant) {
      report.fail(gamma.to_string(), "-", "not proportional to s_gamma(x^(N))", "");
      continue;
    }
    if (!shared) shared = spec.constant;
    else if (!(*shared == *spec.constant)) {
      uniform = false;
      report.fail(gamma.to_string(), "-", "c=" + spec.constant->to_string(), "c=" + shared->to_string());
    }
  }
  if (shared) {
    report.note("c", shared->to_string());
    report.note("N^-n", pow(Rational(N), -n).to_string());
  }
  report.note("uniform", uniform ? "true" : "false");
  return report;
}

Report verify_super_frobenius(int n) {
  Report report{"super-frobenius", n};
  const auto& chi = hecke_char_table(n);
  const RatFun inverse_q(BivarPoly(1), BivarPoly::q());
  for (std::size_t col = 0; col < chi.order.size(); ++col) {
    const Partition& mu = chi.order[col];
    const RatFun scale = RatFun(BivarPoly::monomial(1, n, 0)) / pow(RatFun::q() - RatFun(1), mu.length());
    TwoAlphabetSymFun lhs = super_hl(mu, inverse_q) * scale;

    // Coefficients from the x side, then the full two-alphabet identity.
    SymFun x_side = lhs.restrict_x(n);
    SchurExpansion coeffs = expand_in_schur(x_side);
    TwoAlphabetSymFun rebuilt;
    SymFun x_rebuilt(n);
    for (const auto& [lambda, c] : coeffs) {
      rebuilt += super_schur(lambda) * c;
      x_rebuilt += schur(lambda) * c;
    }
    ++report.checked;
    if (!(rebuilt == lhs)) report.fail("-", mu.to_string(), "super expansion", "does not close");
    // Empty y alphabet: the ordinary quantum Frobenius formula.
    ++report.checked;
    SymFun plain = hl_q(mu, inverse_q) * scale;
    if (!(plain == x_rebuilt)) report.fail("-", mu.to_string(), "empty-y degeneration", "differs");
    for (std::size_t row = 0; row < chi.order.size(); ++row) {
      auto it = coeffs.find(chi.order[row]);
      RatFun got = it == coeffs.end() ? RatFun() : it->second;
      report.expect_equal(chi.order[row].to_string(), mu.to_string(), got, chi.entries[row][col]);
    }
  }
  // Generating function of the super Hall-Littlewood functions, degree by degree.
  for (int m = 1; m <= n; ++m) {
    ++report.checked;
    if (!(super_hl(Partition({m}), RatFun::q()) == super_hl_generating(m, RatFun::q())))
      report.fail("(" + std::to_string(m) + ")", "-", "super_map(q_m)", "generating function");
  }
  return report;
}

Report verify_example2_trace(int n) {
  Report report{"example2", n};
  const auto& tau = markov_trace_table(n);
  const auto& chi = hecke_char_table(n);
  const RatFun minus_z = -markov_z();
  const RatFun t_inverse(BivarPoly(-1), BivarPoly::r());  // t^{-1} = -1/r
  for (const auto& lambda : tau.order) {
    const Partition conj = lambda.conjugate();
    for (const auto& beta : tau.order) {
      const int l = coxeter_length(beta);
      RatFun rhs = pow(minus_z, l) * substitute(chi.at(lambda, beta), t_inverse, RatFun::r());
      report.expect_equal(conj.to_string(), beta.to_string(), tau.at(conj, beta), rhs);
    }
  }
  return report;
}

Report verify_trace_examples(int n) {
  Report report{"trace-examples", n};
  const auto& tau = markov_trace_table(n);
  const auto& sn = sn_characters(n);
  const RatFun z = markov_z();
  const Partition trivial = Partition::row(n), sign = Partition::column(n);
  for (const auto& beta : tau.order) {
    const int l = coxeter_length(beta);
    report.expect_equal(trivial.to_string(), beta.to_string(), tau.at(trivial, beta), pow(z, l));
    report.expect_equal(sign.to_string(), beta.to_string(), tau.at(sign, beta), pow(z / RatFun::r(), l));
  }
  const RatFun t = -RatFun::r();
  for (const auto& s : transposition_class(n)) {
    for (const auto& lambda : tau.order) {
      Rational dim(sn.at(lambda, Partition::column(n)));
      Rational at_s(sn.at(lambda, s));
      RatFun expected = z * RatFun((dim + at_s) / Rational(2)) -
                        z / (RatFun(2) * t) * RatFun(dim - at_s);
      report.expect_equal(lambda.to_string(), s.to_string(), tau.at(lambda, s), expected);
    }
  }
  // Identity element: the inner-product sum with f^lambda.
  const Partition identity = Partition::column(n);
  for (const auto& gamma : tau.order) {
    std::vector<Rational> dims;
    std::vector<RatFun> specs;
    for (const auto& lambda : tau.order) {
      dims.emplace_back(sn.at(lambda, identity));
      specs.push_back(principal_super_spec(internal_product(schur(lambda), schur(gamma))));
    }
    report.expect_equal(gamma.to_string(), identity.to_string(), tau.at(gamma, identity),
                        markov_prefactor(n) * linear_combination(dims, specs));
  }
  return report;
}

Report verify_routes(int n, unsigned threads) {
  Report report{"routes", n};
  const auto order = enumerate(n);
  const Matrix a = trace_matrix_route(n, threads);
  const Matrix b = trace_inner_product_route(n, threads);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j)
      report.expect_equal(order[i].to_string(), order[j].to_string(), a[i][j], b[i][j]);
  return report;
}

Report verify_bridge(int n) {
  Report report{"bridge", n};
  const auto order = enumerate(n);
  const auto row = poincare_row(n);
  for (std::size_t j = 0; j < order.size(); ++j) {
    const RatFun product = schur_spec_product(order[j]);
    report.expect_equal(order[j].to_string(), "spec", product, principal_super_spec(schur(order[j])));
    report.expect_equal(order[j].to_string(), "molien", product, row[j]);
  }
  return report;
}

Report verify_coinvariant(int n) {
  Report report{"coinvariant", n};
  const CoinvariantCharacter c = coinvariant_character(n);
  std::string degrees;
  for (int e : c.invariant_degrees) degrees += (degrees.empty() ? "" : ",") + std::to_string(e);
  report.note("invariant_degrees", degrees);

  auto integer_poly = [](const RatFun& f, bool nonnegative) {
    if (!f.is_polynomial()) return false;
    const BivarPoly poly = f.as_polynomial();
    for (const auto& [m, v] : poly.terms())
      if (!v.is_integer() || (nonnegative && v.sign() < 0) || m.r_deg != 0) return false;
    return true;
  };
  for (std::size_t k = 0; k < c.order.size(); ++k) {
    ++report.checked;
    if (!integer_poly(c.class_values[k], false))
      report.fail("-", c.order[k].to_string(), c.class_values[k].to_string(), "integer polynomial");
  }
  const std::size_t identity = c.order.size() - 1;
  const BivarPoly dim = c.class_values[identity].as_polynomial();
  ++report.checked;
  if (!integer_poly(c.class_values[identity], true))
    report.fail("-", "identity", dim.to_string(), "nonnegative coefficients");
  ++report.checked;
  if (!(dim.evaluate(1, 0) == Rational(static_cast<long>(factorial(n)))))
    report.fail("-", "identity", dim.evaluate(1, 0).to_string(), std::to_string(factorial(n)));
  ++report.checked;
  if (dim.degree(Var::q) != n * (n - 1) / 2)
    report.fail("-", "identity", "degree " + std::to_string(dim.degree(Var::q)),
                "degree " + std::to_string(n * (n - 1) / 2));

  const Matrix sym = graded_matrix(n, MolienKind::sym).entries;
  const RatFun inverse_hilbert = RatFun(1) / c.invariant_hilbert;
  for (std::size_t i = 0; i < c.order.size(); ++i) {
    for (std::size_t j = 0; j < c.order.size(); ++j) {
      ++report.checked;
      if (!integer_poly(c.multiplicities[i][j], true))
        report.fail(c.order[i].to_string(), c.order[j].to_string(), c.multiplicities[i][j].to_string(),
                    "nonnegative integer polynomial");
      report.expect_equal(c.order[i].to_string(), c.order[j].to_string(), c.multiplicities[i][j],
                          inverse_hilbert * sym[i][j]);
    }
  }
  return report;
}

Report verify_molien_family(int n) {
  Report report{"molien", n};
  const auto order = enumerate(n);
  const Matrix sym = graded_matrix(n, MolienKind::sym).entries;
  const Matrix ext = graded_matrix(n, MolienKind::ext).entries;
  const Matrix both = graded_matrix(n, MolienKind::sym_ext).entries;
  auto compare = [&](const std::string& what, const Matrix& a, const Matrix& b) {
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = 0; j < order.size(); ++j) {
        ++report.checked;
        if (!(a[i][j] == b[i][j]))
          report.fail(order[i].to_string(), order[j].to_string(), what + ": " + a[i][j].to_string(),
                      b[i][j].to_string());
      }
  };
  compare("sym*ext", matrix_product(sym, ext), both);
  compare("sym,ext", matrix_product(sym, ext), matrix_product(ext, sym));
  compare("sym,symext", matrix_product(sym, both), matrix_product(both, sym));
  compare("ext,symext", matrix_product(ext, both), matrix_product(both, ext));
  compare("r=-q", map_entries(both, [](const RatFun& x) { return substitute(x, RatFun::q(), -RatFun::q()); }),
          identity_matrix(order.size()));
  return report;
}

namespace {

constexpr std::array<std::string_view, 14> kChecks = {
    "duality", "starkey",  "prop3",  "super-frobenius", "example2", "limit",  "examples",
    "trace-examples", "routes", "bridge", "coinvariant", "molien", "two-alphabet", "n-schur"};

}  // namespace

std::span<const std::string_view> check_names() { return kChecks; }

std::optional<Report> run_check(std::string_view name, int n, int N, unsigned threads) {
  if (name == "duality") return verify_duality(n);
  if (name == "starkey") return verify_starkey(n);
  if (name == "prop3") return verify_prop3(n);
  if (name == "super-frobenius") return verify_super_frobenius(n);
  if (name == "example2") return verify_example2_trace(n);
  if (name == "limit") return verify_limit(n, N);
  if (name == "examples") return example_checks(n);
  if (name == "trace-examples") return verify_trace_examples(n);
  if (name == "routes") return verify_routes(n, threads);
  if (name == "bridge") return verify_bridge(n);
  if (name == "coinvariant") return verify_coinvariant(n);
  if (name == "molien") return verify_molien_family(n);
  if (name == "two-alphabet") {
    Report report{"two-alphabet", n};
    for (const auto& gamma : enumerate(n)) {
      ++report.checked;
      if (!two_alphabet_product_check(gamma)) report.fail(gamma.to_string(), "-", "s(xy)", "sum");
    }
    return report;
  }
  if (name == "n-schur") {
    Report report{"n-schur", n};
    report.note("N", std::to_string(N));
    for (const auto& lambda : enumerate(n)) {
      ++report.checked;
      if (!(n_schur(lambda, N) == scale_alphabet(schur(lambda), N)))
        report.fail(lambda.to_string(), "-", "n_schur", "scale_alphabet");
    }
    return report;
  }
  return std::nullopt;
}

}  // namespace hecke
