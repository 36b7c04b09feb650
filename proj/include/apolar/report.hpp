#ifndef APOLAR_REPORT_HPP
#define APOLAR_REPORT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "apolar/theorems.hpp"

namespace apolar {

/// One full analysis run: the input document, the structure data, and the
/// wall time (excluded from the stable JSON rendering).
struct AnalysisReport {
  FormDocument doc;
  Analysis analysis;
  double ms = 0;
};

AnalysisReport run_analysis(const FormDocument& doc,
                            bool auto_normalize = false);

/// Stable-keyed JSON for one report; identical across reruns on the same
/// input. Timing travels separately.
nlohmann::json report_json(const AnalysisReport& rep);
std::string report_table(const AnalysisReport& rep);

/// Dispatch one checker id over a document. `restrict` fans out over every
/// admissible shift variable, the others return a single report.
/// Ids: restrict, lem0, th0, thm1, tm2, tm2-converse, hilb, unimodal.
std::vector<TheoremReport> run_check(const std::string& id,
                                     const FormDocument& doc);
bool known_checker(const std::string& id);
std::string check_table(const std::vector<TheoremReport>& reports);

struct ReproduceRow {
  std::string label;
  bool informational = false;
  std::optional<long> expect_mu_i, expect_mu_j;
  std::optional<bool> expect_generic;
  std::size_t mu_i = 0, mu_j = 0;
  bool generic = false;
  bool match = true;  // informational rows never fail the run
  std::string note;
};

struct ReproduceResult {
  std::vector<ReproduceRow> rows;
  bool ok = true;
};

/// Analyze every corpus entry and compare against its recorded values.
ReproduceResult run_reproduce(unsigned jobs = 1);
std::string reproduce_table(const ReproduceResult& r);
nlohmann::json reproduce_json(const ReproduceResult& r);

struct SearchResult {
  std::size_t count = 0;
  std::size_t generic_count = 0;
  std::map<std::size_t, std::size_t> r_histogram;
  std::vector<std::string> inconsistencies;  // expected empty
};

/// Generate `count` seeded forms of one shape, run every applicable
/// checker on each, and collect statistics. Deterministic for a fixed
/// seed; jobs only changes the wall time.
SearchResult run_search(const FormShape& shape, std::uint64_t seed,
                        std::size_t count, unsigned jobs = 1);
std::string search_table(const SearchResult& r);

/// Parse "k=v" shape descriptions, e.g.
/// "n=3 j=12 p=4 m=1 a=7,9 terms=3 coeffs=2 purez=1 signed=0 topy=4".
FormShape parse_shape(const std::string& text);

/// Minimal deterministic work-sharing helper: applies fn to 0..count-1 on
/// up to `jobs` threads; results are indexed, so the output order never
/// depends on scheduling.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& fn);

}  // namespace apolar

#endif
