#include "hecke/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hecke/characters.hpp"
#include "hecke/graded.hpp"
#include "hecke/serialize.hpp"
#include "hecke/symfun.hpp"
#include "hecke/traces.hpp"

namespace hecke::cli {

namespace {

struct Options {
  std::string target;
  int n = 0;
  int N = 1;
  std::string format = "json";
  std::string spec_format = "text";
  std::string kind = "sym";
  std::string output;
  std::string partition;
  bool force = false;
  unsigned threads = 1;
};

LabeledMatrix compute_table(const Options& o) {
  if (o.target == "sn") {
    CharTable t = sn_char_table(o.n);
    return {"sn", o.n, "", t.order, t.entries};
  }
  if (o.target == "chi") {
    const CharTable& t = hecke_char_table(o.n);
    return {"chi", o.n, "", t.order, t.entries};
  }
  if (o.target == "tau") {
    const TraceTable& t = markov_trace_table(o.n, o.threads);
    return {"tau", o.n, "", t.order, t.entries};
  }
  MolienKind kind = o.target == "coinv" ? MolienKind::coinvariant : *parse_molien_kind(o.kind);
  GradedTensorMatrix g = graded_matrix(o.n, kind, o.threads);
  return {o.target, o.n, to_string(kind), g.order, g.entries};
}

// Character tables are persisted under $HECKE_CACHE_DIR when it is set.
LabeledMatrix load_or_compute(const Options& o) {
  const char* dir = std::getenv(kCacheEnv);
  if (!dir || !*dir || (o.target != "chi" && o.target != "sn")) return compute_table(o);
  namespace fs = std::filesystem;
  fs::path file = fs::path(dir) / (o.target + "-n" + std::to_string(o.n) + "-v" + kVersion + ".json");
  if (fs::exists(file)) {
    std::ifstream in(file);
    try {
      return labeled_matrix_from_json(json::parse(in));
    } catch (const std::exception&) {
      // Unreadable cache entries are recomputed and overwritten.
    }
  }
  LabeledMatrix m = compute_table(o);
  std::error_code ec;
  fs::create_directories(file.parent_path(), ec);
  std::ofstream(file) << to_json(m).dump(2) << '\n';
  return m;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output);
    if (!f) throw std::runtime_error("cannot write " + o.output);
    f << text;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hecke-algebra character tables and twisted Markov traces of S_n", "hecke"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Weight n of S_n")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--force", o.force, "Allow n above the default limit of 6");
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--output,-o", o.output, "Write to a file instead of stdout");
  };

  auto* table = app.add_subcommand("table", "Emit a table as JSON, CSV or LaTeX");
  table->add_option("target", o.target, "chi | sn | tau | molien | coinv")
      ->required()
      ->check(CLI::IsMember({"chi", "sn", "tau", "molien", "coinv"}));
  add_common(table);
  table->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "latex"}));
  table->add_option("--kind", o.kind, "Molien kind")
      ->check(CLI::IsMember({"sym", "ext", "symext", "sym-ext", "coinv"}));

  auto* verify = app.add_subcommand("verify", "Run an identity check and emit a JSON report");
  std::vector<std::string> names;
  for (auto name : check_names()) names.emplace_back(name);
  verify->add_option("check", o.target)->required()->check(CLI::IsMember(names));
  add_common(verify);
  verify->add_option("--N", o.N, "Alphabet multiplicity for limit / n-schur")->check(CLI::PositiveNumber);

  auto* spec = app.add_subcommand("spec", "Closed-form specializations");
  spec->add_option("target", o.target)->required()->check(CLI::IsMember({"schur"}));
  spec->add_option("--partition", o.partition, "e.g. 3,1")->required();
  spec->add_option("--format", o.spec_format)->check(CLI::IsMember({"text", "json"}));

  std::vector<const char*> argv{"hecke"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if ((table->parsed() || verify->parsed()) && o.n > kDefaultMaxN && !o.force) {
    err << "error: n = " << o.n << " exceeds the limit " << kDefaultMaxN << " (pass --force)\n";
    return 2;
  }

  try {
    if (table->parsed()) {
      LabeledMatrix m = load_or_compute(o);
      if (o.format == "csv") emit(o, to_csv(m), out);
      else if (o.format == "latex") emit(o, to_latex(m), out);
      else emit(o, to_json(m).dump(2) + "\n", out);
      return 0;
    }
    if (verify->parsed()) {
      std::optional<Report> report = run_check(o.target, o.n, o.N, o.threads);
      emit(o, to_json(*report).dump(2) + "\n", out);
      return report->passed() ? 0 : 1;
    }
    if (spec->parsed()) {
      Result<Partition> p = parse_partition(o.partition);
      if (!p) {
        err << "error: " << p.error().message << '\n';
        return 2;
      }
      SpecProduct product = schur_spec_factors(p.value());
      if (o.spec_format == "json") {
        json j = {{"partition", p.value().to_csv()}, {"value", to_json(product.value())},
                  {"text", product.to_string()}};
        out << j.dump(2) << '\n';
      } else {
        out << product.to_string() << '\n';
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace hecke::cli
