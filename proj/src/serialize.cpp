#include "hecke/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke {

json to_json(const BivarPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.canonical_terms())
    terms.push_back({{"c", c.to_fraction_string()}, {"q", m.q_deg}, {"r", m.r_deg}});
  return terms;
}

json to_json(const RatFun& f) {
  RatFun n = normalize(f);
  return {{"num", to_json(n.num())}, {"den", to_json(n.den())}};
}

json to_json(const SymFun& f) {
  json terms = json::array();
  for (const auto& [mu, c] : f.coeffs())
    terms.push_back({{"partition", mu.to_csv()}, {"coeff", to_json(c)}});
  return {{"degree", f.degree()}, {"terms", terms}};
}

json to_json(const Report& report) {
  json failures = json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"lambda", f.lambda}, {"beta", f.beta}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  json out = {{"check", report.check},
              {"n", report.n},
              {"status", report.status()},
              {"checked", report.checked},
              {"failures", failures}};
  if (!report.notes.empty()) {
    json notes = json::object();
    for (const auto& [k, v] : report.notes) notes[k] = v;
    out["notes"] = notes;
  }
  return out;
}

BivarPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  std::vector<Term> terms;
  for (const auto& t : j)
    terms.push_back({Monomial{t.at("q").get<int>(), t.at("r").get<int>()},
                     Rational::parse(t.at("c").get<std::string>())});
  return BivarPoly::from_terms(terms);
}

RatFun ratfun_from_json(const json& j) {
  return RatFun(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json to_json(const LabeledMatrix& m) {
  json order = json::array();
  for (const auto& p : m.order) order.push_back(p.to_csv());
  json rows = json::array();
  for (const auto& row : m.entries) {
    json r = json::array();
    for (const auto& e : row) {
      json cell = to_json(e);
      cell["text"] = e.to_string();
      r.push_back(std::move(cell));
    }
    rows.push_back(std::move(r));
  }
  json out = {{"table", m.table}, {"n", m.n}};
  if (!m.kind.empty()) out["kind"] = m.kind;
  out["order"] = order;
  out["entries"] = rows;
  return out;
}

LabeledMatrix labeled_matrix_from_json(const json& j) {
  LabeledMatrix m;
  m.table = j.at("table").get<std::string>();
  m.n = j.at("n").get<int>();
  if (j.contains("kind")) m.kind = j.at("kind").get<std::string>();
  for (const auto& p : j.at("order")) m.order.push_back(parse_partition(p.get<std::string>()).value());
  for (const auto& row : j.at("entries")) {
    auto& dst = m.entries.emplace_back();
    for (const auto& e : row) dst.push_back(ratfun_from_json(e));
  }
  return m;
}

std::string to_csv(const LabeledMatrix& m) {
  std::ostringstream os;
  os << "# order:";
  for (std::size_t i = 0; i < m.order.size(); ++i) os << (i ? ", " : " ") << m.order[i].to_string();
  os << '\n';
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    os << m.order[i].to_string() << ":";
    for (std::size_t j = 0; j < m.entries[i].size(); ++j)
      os << (j ? ", " : " ") << m.entries[i][j].to_string();
    os << '\n';
  }
  return os.str();
}

namespace {

std::string latex_poly(const BivarPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.canonical_terms()) {
    bool negative = c.sign() < 0;
    Rational mag = negative ? -c : c;
    os << (negative ? "-" : (first ? "" : "+"));
    bool unit = mag.is_one() && m != Monomial{};
    if (!unit) {
      if (mag.is_integer()) os << mag.to_string();
      else os << "\\frac{" << mag.numerator().get_str() << "}{" << mag.denominator().get_str() << "}";
    }
    if (m.q_deg) os << "q" << (m.q_deg > 1 ? "^{" + std::to_string(m.q_deg) + "}" : "");
    if (m.r_deg) os << "r" << (m.r_deg > 1 ? "^{" + std::to_string(m.r_deg) + "}" : "");
    first = false;
  }
  return os.str();
}

}  // namespace

std::string to_latex(const RatFun& f) {
  RatFun n = normalize(f);
  if (n.den() == BivarPoly(1)) return latex_poly(n.num());
  return "\\frac{" + latex_poly(n.num()) + "}{" + latex_poly(n.den()) + "}";
}

std::string to_latex(const LabeledMatrix& m) {
  std::ostringstream os;
  os << "% " << m.table << ", n = " << m.n << ", order:";
  for (const auto& p : m.order) os << ' ' << p.to_string();
  os << "\n\\begin{array}{c|" << std::string(m.order.size(), 'c') << "}\n";
  for (const auto& p : m.order) os << " & " << p.to_string();
  os << " \\\\\n\\hline\n";
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    os << m.order[i].to_string();
    for (const auto& e : m.entries[i]) os << " & " << to_latex(e);
    os << " \\\\\n";
  }
  os << "\\end{array}\n";
  return os.str();
}

}  // namespace hecke
