#include <iostream>

#include <CLI11.hpp>

#include "apolar/report.hpp"

namespace {

// exit codes: 0 ok, 2 input error, 3 internal consistency failure,
// 4 theorem inconsistency, 5 reproduce mismatch
constexpr int kOk = 0, kInputError = 2, kInternal = 3, kInconsistent = 4,
              kMismatch = 5;

apolar::FormDocument load(const std::string& path, const std::string& field) {
  apolar::FormDocument doc = apolar::load_form_file(path);
  if (!field.empty()) {
    apolar::Field f = apolar::Field::rationals();
    if (field != "q" && field != "Q") {
      if (field.rfind("p=", 0) != 0)
        throw apolar::ParseError("bad-header", "--field takes q or p=<prime>");
      f = apolar::Field::prime(std::stoull(field.substr(2)));
    }
    doc.field = f;
    doc.form = apolar::parse_form(doc.form_text, doc.vars, f);
  }
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Macaulay inverse system analyzer"};
  app.require_subcommand(1);

  std::string path, field_text, shape_text, check_id;
  bool as_json = false, auto_normalize = false;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::size_t count = 100;

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze one form file");
  analyze_cmd->add_option("file", path)->required();
  analyze_cmd->add_flag("--json", as_json);
  analyze_cmd->add_option("--field", field_text, "q or p=<prime>");
  analyze_cmd->add_flag("--auto-normalize", auto_normalize,
                        "absorb (linear form) * Z^[j-1] terms into W");

  auto* check_cmd = app.add_subcommand("check", "run one theorem checker");
  check_cmd
      ->add_option("theorem", check_id,
                   "restrict|lem0|th0|thm1|tm2|tm2-converse|hilb|unimodal")
      ->required();
  check_cmd->add_option("file", path)->required();
  check_cmd->add_option("--field", field_text);

  auto* repro_cmd =
      app.add_subcommand("reproduce", "recompute the built-in example table");
  repro_cmd->add_flag("--json", as_json);
  repro_cmd->add_option("--jobs", jobs);

  auto* search_cmd =
      app.add_subcommand("search", "randomized checker consistency sweep");
  search_cmd->add_option("--shape", shape_text)->required();
  search_cmd->add_option("--seed", seed);
  search_cmd->add_option("--count", count);
  search_cmd->add_option("--jobs", jobs);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) {
      apolar::AnalysisReport rep =
          apolar::run_analysis(load(path, field_text), auto_normalize);
      if (as_json)
        std::cout << apolar::report_json(rep).dump(2) << "\n";
      else
        std::cout << apolar::report_table(rep);
      return kOk;
    }
    if (check_cmd->parsed()) {
      if (!apolar::known_checker(check_id)) {
        std::cerr << "unknown theorem id '" << check_id << "'\n";
        return kInputError;
      }
      auto reports = apolar::run_check(check_id, load(path, field_text));
      std::cout << apolar::check_table(reports);
      for (const auto& r : reports)
        if (!r.consistent) return kInconsistent;
      return kOk;
    }
    if (repro_cmd->parsed()) {
      apolar::ReproduceResult r = apolar::run_reproduce(jobs);
      if (as_json)
        std::cout << apolar::reproduce_json(r).dump(2) << "\n";
      else
        std::cout << apolar::reproduce_table(r);
      return r.ok ? kOk : kMismatch;
    }
    if (search_cmd->parsed()) {
      apolar::SearchResult r = apolar::run_search(
          apolar::parse_shape(shape_text), seed, count, jobs);
      std::cout << apolar::search_table(r);
      return r.inconsistencies.empty() ? kOk : kInconsistent;
    }
  } catch (const apolar::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const apolar::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
