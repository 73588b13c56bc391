#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hecke/matrix.hpp"
#include "hecke/partition.hpp"
#include "hecke/report.hpp"
#include "hecke/symfun.hpp"

namespace hecke {

using json = nlohmann::ordered_json;

/// Terms as {"c": "a/b", "q": i, "r": j} in canonical (graded) order.
json to_json(const BivarPoly& p);
/// {"num": [...], "den": [...]}
json to_json(const RatFun& f);
/// {"degree": n, "terms": [{"partition": "2,1", "coeff": {...}}]}, canonical order.
json to_json(const SymFun& f);
json to_json(const Report& report);

BivarPoly poly_from_json(const json& j);
RatFun ratfun_from_json(const json& j);

/// A square table with its axis order recorded.
struct LabeledMatrix {
  std::string table;
  int n = 0;
  std::string kind;  // empty unless the table has one
  std::vector<Partition> order;
  Matrix entries;
};

json to_json(const LabeledMatrix& m);
LabeledMatrix labeled_matrix_from_json(const json& j);

/// "# order: (2), (1,1)" then one "label: e1, e2" line per row.
std::string to_csv(const LabeledMatrix& m);
std::string to_latex(const LabeledMatrix& m);
std::string to_latex(const RatFun& f);

}  // namespace hecke
