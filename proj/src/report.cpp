#include "apolar/report.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

namespace apolar {

using nlohmann::json;

AnalysisReport run_analysis(const FormDocument& doc, bool auto_normalize) {
  auto t0 = std::chrono::steady_clock::now();
  NormalForm nf = validate_normal_form(doc.form, auto_normalize);
  Analysis a = analyze(nf);
  auto t1 = std::chrono::steady_clock::now();
  return AnalysisReport{
      doc, std::move(a),
      std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

json report_json(const AnalysisReport& rep) {
  const Analysis& a = rep.analysis;
  json out;
  out["input"] = {{"label", rep.doc.label},
                  {"vars", rep.doc.vars.dual_names()},
                  {"field", rep.doc.field.str()},
                  {"form", render_form(a.nf.F)}};
  out["shape"] = shape_name(a.profile.shape);
  out["j"] = a.profile.j;
  out["hilbert_RI"] = a.profile.hilbert_ri;
  out["hilbert_RJ"] = a.profile.hilbert_rj;
  out["nu"] = {{"I", a.profile.nu_i}, {"J", a.profile.nu_j}};
  out["muI"] = a.profile.mu_i;
  out["muJ"] = a.profile.mu_j;
  out["beta"] = a.verdict.beta;
  out["g"] = a.verdict.g.str();
  out["r"] = a.verdict.r;
  std::vector<json> flags;
  for (std::size_t i = 0; i < a.verdict.gx_minimal.size(); ++i) {
    const VariableSet rvars = a.nf.F.vars().without_w();
    flags.push_back({{"variable", rvars.ring_name(i)},
                     {"gx_minimal_in_J", bool(a.verdict.gx_minimal[i])}});
  }
  out["flags"] = flags;
  out["generic"] = a.verdict.generic;
  out["identity_ok"] = a.verdict.identity_ok;
  out["diff_pattern_ok"] = a.diff_pattern_ok;
  out["hilbert_diff"] = a.hilbert_diff;
  out["unimodal_J"] = a.unimodal_j;
  out["i2_pattern"] = a.profile.i2_pattern;
  out["paper_shape"] = a.profile.paper_shape;
  out["findings"] = a.findings;
  return out;
}

namespace {

template <typename Seq>
std::string seq_str(const Seq& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string report_table(const AnalysisReport& rep) {
  const Analysis& a = rep.analysis;
  std::ostringstream os;
  os << "form " << (rep.doc.label.empty() ? "(unnamed)" : rep.doc.label)
     << " over " << rep.doc.field.str() << ", " << a.nf.F.vars().count()
     << " variables, socle degree " << a.profile.j << ", shape "
     << shape_name(a.profile.shape) << "\n";
  os << "  H_{R/I}  = " << seq_str(a.profile.hilbert_ri) << "\n";
  os << "  H_{R'/J} = " << seq_str(a.profile.hilbert_rj) << "\n";
  os << "  nu_I     = " << seq_str(a.profile.nu_i) << "   mu(I) = "
     << a.profile.mu_i << "\n";
  os << "  nu_J     = " << seq_str(a.profile.nu_j) << "   mu(J) = "
     << a.profile.mu_j << "\n";
  os << "  beta = " << a.verdict.beta << ", g = " << a.verdict.g.str()
     << "\n";
  os << "  r = " << a.verdict.r << ", generic = "
     << (a.verdict.generic ? "yes" : "no")
     << ", count identity " << (a.verdict.identity_ok ? "holds" : "FAILS")
     << "\n";
  os << "  Hilbert difference " << seq_str(a.hilbert_diff) << " pattern "
     << (a.diff_pattern_ok ? "ok" : "off") << ", H_{R'/J} "
     << (a.unimodal_j ? "unimodal" : "NOT unimodal") << "\n";
  for (const auto& f : a.findings) os << "  note: " << f << "\n";
  os << "  (" << std::fixed << std::setprecision(1) << rep.ms << " ms)\n";
  return os.str();
}

bool known_checker(const std::string& id) {
  return id == "restrict" || id == "lem0" || id == "th0" || id == "thm1" ||
         id == "tm2" || id == "tm2-converse" || id == "hilb" ||
         id == "unimodal";
}

std::vector<TheoremReport> run_check(const std::string& id,
                                     const FormDocument& doc) {
  if (!known_checker(id)) throw Error("unknown-checker", "no checker '" + id + "'");
  NormalForm nf = validate_normal_form(doc.form);
  std::vector<TheoremReport> out;
  if (id == "restrict") {
    const VariableSet& vars = doc.vars;
    for (std::size_t t = 1; t + 1 < vars.count(); ++t)
      out.push_back(check_restrict(nf, t));
    if (out.empty()) {
      TheoremReport r;
      r.theorem = "restrict";
      r.failed_hypotheses.push_back("a variable x_1..x_{n-1} exists");
      out.push_back(r);
    }
  } else if (id == "lem0") {
    const VariableSet& vars = doc.vars;
    if (vars.count() == 4) {
      out.push_back(check_lem0(decompose(nf).g0));
    } else if (vars.count() == 3) {
      VariableSet yz = vars.subset({1, 2});
      out.push_back(check_lem0(restrict_to(nf.G, yz, {1, 2})));
    } else {
      TheoremReport r;
      r.theorem = "lem0";
      r.failed_hypotheses.push_back("G_0 lives in the two variables Y, Z");
      out.push_back(r);
    }
  } else if (id == "th0") {
    out.push_back(check_th0(nf));
  } else if (id == "thm1") {
    out.push_back(check_thm1(nf));
  } else if (id == "tm2") {
    out.push_back(check_tm2(nf));
  } else if (id == "tm2-converse") {
    out.push_back(check_tm2_converse(nf));
  } else if (id == "hilb") {
    out.push_back(check_hilb(nf));
  } else {
    out.push_back(check_unimodal(nf));
  }
  return out;
}

std::string check_table(const std::vector<TheoremReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << r.theorem << ": "
       << (r.applicable ? "applicable" : "not applicable") << "\n";
    for (const auto& h : r.failed_hypotheses)
      os << "  failed hypothesis: " << h << "\n";
    os << "  prediction: " << prediction_name(r.prediction);
    if (r.observed) os << ", observed: " << observation_name(*r.observed);
    os << ", " << (r.consistent ? "consistent" : "INCONSISTENT") << "\n";
    for (const auto& n : r.notes) os << "  " << n << "\n";
  }
  return os.str();
}

void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  unsigned workers = std::min<std::size_t>(jobs, count);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

ReproduceResult run_reproduce(unsigned jobs) {
  const auto& entries = corpus();
  ReproduceResult result;
  result.rows.resize(entries.size());
  parallel_for(entries.size(), jobs, [&](std::size_t i) {
    const FormDocument& doc = entries[i];
    AnalysisReport rep = run_analysis(doc, /*auto_normalize=*/true);
    ReproduceRow row;
    row.label = doc.label;
    row.informational = doc.informational;
    row.expect_mu_i = doc.expect_mu_i;
    row.expect_mu_j = doc.expect_mu_j;
    row.expect_generic = doc.expect_generic;
    row.mu_i = rep.analysis.profile.mu_i;
    row.mu_j = rep.analysis.profile.mu_j;
    row.generic = rep.analysis.verdict.generic;
    row.note = doc.note;
    row.match = true;
    if (doc.expect_mu_i && *doc.expect_mu_i != static_cast<long>(row.mu_i))
      row.match = false;
    if (doc.expect_mu_j && *doc.expect_mu_j != static_cast<long>(row.mu_j))
      row.match = false;
    if (doc.expect_generic && *doc.expect_generic != row.generic)
      row.match = false;
    result.rows[i] = std::move(row);
  });
  // discrepancy-flagged entries report, they never fail the run
  for (const auto& row : result.rows)
    if (!row.match && !row.informational) result.ok = false;
  return result;
}

std::string reproduce_table(const ReproduceResult& r) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "entry" << std::setw(16)
     << "expected" << std::setw(16) << "computed" << std::setw(9)
     << "verdict" << "status\n";
  for (const auto& row : r.rows) {
    std::ostringstream expect, got;
    if (row.expect_mu_i)
      expect << "mu " << *row.expect_mu_i << "/" << *row.expect_mu_j;
    else if (row.expect_generic)
      expect << (*row.expect_generic ? "generic" : "not generic");
    else
      expect << "-";
    got << "mu " << row.mu_i << "/" << row.mu_j;
    os << std::left << std::setw(18) << row.label << std::setw(16)
       << expect.str() << std::setw(16) << got.str() << std::setw(9)
       << (row.generic ? "generic" : "no")
       << (row.informational
               ? (row.match ? "info" : "info (recorded values differ)")
               : (row.match ? "ok" : "MISMATCH"))
       << "\n";
    if (!row.note.empty()) os << "    " << row.note << "\n";
  }
  os << (r.ok ? "all clean entries match" : "MISMATCH on a clean entry")
     << "\n";
  return os.str();
}

json reproduce_json(const ReproduceResult& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json o;
    o["label"] = row.label;
    o["informational"] = row.informational;
    if (row.expect_mu_i) o["expect_muI"] = *row.expect_mu_i;
    if (row.expect_mu_j) o["expect_muJ"] = *row.expect_mu_j;
    if (row.expect_generic) o["expect_generic"] = *row.expect_generic;
    o["muI"] = row.mu_i;
    o["muJ"] = row.mu_j;
    o["generic"] = row.generic;
    o["match"] = row.match;
    if (!row.note.empty()) o["note"] = row.note;
    rows.push_back(std::move(o));
  }
  return json{{"rows", rows}, {"ok", r.ok}};
}

SearchResult run_search(const FormShape& shape, std::uint64_t seed,
                        std::size_t count, unsigned jobs) {
  SearchResult result;
  result.count = count;
  std::vector<std::size_t> r_values(count, 0);
  std::vector<bool> generic(count, false);
  std::vector<std::vector<std::string>> issues(count);

  parallel_for(count, jobs, [&](std::size_t i) {
    DualForm f = random_form(shape, seed + i);
    NormalForm nf = validate_normal_form(f);
    Analysis a = analyze(nf);
    generic[i] = a.verdict.generic;
    r_values[i] = a.verdict.r;

    std::vector<TheoremReport> reports;
    for (std::size_t t = 1; t + 1 < f.vars().count(); ++t)
      reports.push_back(check_restrict(nf, t));
    if (f.vars().count() == 4) {
      reports.push_back(check_th0(nf));
      reports.push_back(check_thm1(nf));
      reports.push_back(check_tm2(nf));
      reports.push_back(check_tm2_converse(nf));
      reports.push_back(check_lem0(decompose(nf).g0));
    }
    reports.push_back(check_hilb(nf));
    reports.push_back(check_unimodal(nf));
    for (const auto& rep : reports)
      if (!rep.consistent)
        issues[i].push_back("seed " + std::to_string(seed + i) + ": " +
                            rep.theorem + " predicted " +
                            prediction_name(rep.prediction) + ", observed " +
                            observation_name(*rep.observed));
  });

  for (std::size_t i = 0; i < count; ++i) {
    if (generic[i]) ++result.generic_count;
    ++result.r_histogram[r_values[i]];
    for (auto& s : issues[i]) result.inconsistencies.push_back(std::move(s));
  }
  return result;
}

std::string search_table(const SearchResult& r) {
  std::ostringstream os;
  os << "forms: " << r.count << ", generic: " << r.generic_count << " ("
     << (r.count ? 100.0 * r.generic_count / r.count : 0.0) << "%)\n";
  os << "r distribution:";
  for (const auto& [value, times] : r.r_histogram)
    os << "  r=" << value << ": " << times;
  os << "\n";
  if (r.inconsistencies.empty()) {
    os << "no checker inconsistencies\n";
  } else {
    for (const auto& s : r.inconsistencies)
      os << "INCONSISTENT: " << s << "\n";
  }
  return os.str();
}

FormShape parse_shape(const std::string& text) {
  FormShape shape;
  std::istringstream is(text);
  std::string item;
  while (is >> item) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw ValidationError("infeasible-shape",
                            "shape items look like key=value");
    std::string key = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    if (key == "n")
      shape.n = std::stoul(value);
    else if (key == "j")
      shape.j = std::stoi(value);
    else if (key == "p")
      shape.p = std::stoi(value);
    else if (key == "q")
      shape.q = std::stoi(value);
    else if (key == "m")
      shape.m = std::stoi(value);
    else if (key == "a") {
      std::istringstream as(value);
      std::string one;
      while (std::getline(as, one, ','))
        shape.block_exps.push_back(std::stoi(one));
    } else if (key == "terms")
      shape.max_block_terms = std::stoi(value);
    else if (key == "coeffs")
      shape.coeff_range = std::stol(value);
    else if (key == "purez")
      shape.force_pure_z = value == "1" || value == "true";
    else if (key == "signed")
      shape.signed_coeffs = value == "1" || value == "true";
    else if (key == "topy")
      shape.top_block_ydeg = std::stoi(value);
    else
      throw ValidationError("infeasible-shape",
                            "unknown shape key '" + key + "'");
  }
  return shape;
}

}  // namespace apolar
