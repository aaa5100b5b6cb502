#include "qsw/report/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace qsw {

bool ReportDoc::all_passed() const {
  for (const auto& chk : checks)
    if (chk.status == "fail") return false;
  return true;
}

std::vector<DualityCheck> to_rows(const std::vector<CheckResult>& results) {
  std::vector<DualityCheck> rows;
  rows.reserve(results.size());
  for (const auto& res : results) {
    DualityCheck chk;
    chk.name = res.name;
    chk.status = res.pass ? "pass" : "fail";
    chk.expected = "pass";
    chk.actual = res.detail.empty() ? chk.status : res.detail;
    rows.push_back(std::move(chk));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const DualityCheck& a, const DualityCheck& b) {
                     return a.name < b.name;
                   });
  return rows;
}

ReportDoc from_duality(const DualityReport& rep) {
  ReportDoc doc;
  doc.suite = "duality";
  doc.seed = rep.seed;
  doc.m = rep.m;
  doc.n = rep.n;
  doc.mode = rep.mode;
  doc.point = rep.point;
  doc.degeneracy_exhausted = rep.degeneracy_exhausted;
  doc.checks = rep.checks;
  doc.runtime_ms = rep.runtime_ms;
  return doc;
}

ReportDoc from_truncation(const TruncationReport& rep) {
  ReportDoc doc;
  doc.suite = "truncate";
  doc.seed = rep.seed;
  doc.m = rep.m;
  doc.m0 = rep.m0;
  doc.n = rep.n;
  doc.m0_ge_n = rep.m0_ge_n;
  doc.mode = rep.mode;
  doc.point = rep.point;
  doc.checks = rep.checks;
  doc.runtime_ms = rep.runtime_ms;
  return doc;
}

std::string to_json(const ReportDoc& doc) {
  nlohmann::ordered_json j;
  j["suite"] = doc.suite;
  j["version"] = kReportVersion;
  j["seed"] = doc.seed;
  if (doc.m) j["m"] = *doc.m;
  if (doc.n) j["n"] = *doc.n;
  if (doc.m0) j["m0"] = *doc.m0;
  if (doc.n_max) j["n_max"] = *doc.n_max;
  if (doc.m0_ge_n) j["m0_ge_n"] = *doc.m0_ge_n;
  j["mode"] = mode_name(doc.mode);
  if (doc.point) {
    nlohmann::ordered_json pt;
    pt["p"] = doc.point->p;
    pt["c"] = doc.point->c;
    j["point"] = pt;
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& chk : doc.checks) {
    nlohmann::ordered_json row;
    row["name"] = chk.name;
    row["status"] = chk.status;
    row["expected"] = chk.expected;
    row["actual"] = chk.actual;
    rows.push_back(std::move(row));
  }
  j["checks"] = std::move(rows);
  if (doc.degeneracy_exhausted) j["degeneracy_exhausted"] = *doc.degeneracy_exhausted;
  j["runtime_ms"] = doc.runtime_ms;
  return j.dump(2) + "\n";
}

std::string to_text(const ReportDoc& doc) {
  std::ostringstream os;
  os << "suite " << doc.suite << " (version " << kReportVersion << ", seed "
     << doc.seed << ")\n";
  os << "  parameters:";
  if (doc.m) os << " m=" << *doc.m;
  if (doc.m0) os << " m0=" << *doc.m0;
  if (doc.n) os << " n=" << *doc.n;
  if (doc.n_max) os << " n_max=" << *doc.n_max;
  os << " mode=" << mode_name(doc.mode);
  if (doc.point) os << " p=" << doc.point->p << " q->" << doc.point->c;
  if (doc.m0_ge_n) os << " m0_ge_n=" << (*doc.m0_ge_n ? "true" : "false");
  os << "\n";
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  for (const auto& chk : doc.checks) {
    os << "  [" << chk.status << "] " << chk.name;
    if (!chk.actual.empty() && chk.actual != chk.status)
      os << ": " << chk.actual;
    os << "\n";
    if (chk.status == "pass")
      ++passed;
    else if (chk.status == "skipped")
      ++skipped;
    else
      ++failed;
  }
  os << "  " << passed << " passed, " << failed << " failed, " << skipped
     << " skipped";
  if (doc.degeneracy_exhausted && *doc.degeneracy_exhausted)
    os << " (evaluation degeneracy exhausted)";
  os << " in " << doc.runtime_ms << " ms\n";
  return os.str();
}

}  // namespace qsw
