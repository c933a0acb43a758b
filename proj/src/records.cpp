#include "rootstack/records.hpp"

#include "json.hpp"

namespace rootstack {

namespace {

using Json = nlohmann::ordered_json;

Json record_json(const ResultRecord& r) {
  Json j;
  j["delta"] = r.delta;
  j["d"] = r.d;
  j["n"] = r.n;
  j["value"] = to_string(r.value);
  j["admissible"] = r.admissible;
  return j;
}

}  // namespace

ResultRecord compute_record(MemoStore& store, const GeometryConfig& cfg,
                            const InvariantKey& key) {
  Engine engine(cfg, store);
  ResultRecord r;
  r.delta = cfg.delta;
  r.d = key.d;
  r.n = {key.n2, key.n3, key.n4};
  r.admissible = engine.dimension_admissible(key);
  r.value = engine.invariant(key);
  return r;
}

ResultRecord general_record(MemoStore& store, const GeometryConfig& cfg,
                            const GeneralKey& key) {
  Engine engine(cfg, store);
  ResultRecord r;
  r.delta = cfg.delta;
  r.d = key.d;
  r.n = {key.n0, key.n1, key.n2, key.n3, key.n4};
  r.value = engine.general_invariant(key);
  // A general key is reported admissible when its reduction can carry a
  // non-zero value: for positive degree without unit insertions that is
  // the dimension check of the reduced key, otherwise non-vanishing.
  if (key.d >= 1 && key.n0 == 0)
    r.admissible = engine.dimension_admissible(
        InvariantKey(key.d, key.n2, key.n3, key.n4));
  else
    r.admissible = r.value != 0;
  return r;
}

std::vector<ResultRecord> admissible_table(MemoStore& store,
                                           const GeometryConfig& cfg, int d,
                                           int n3_max) {
  if (d < 1) throw UsageError("table degree must be >= 1");
  if (n3_max < 0) throw UsageError("--max-n3 must be non-negative");
  std::vector<ResultRecord> rows;
  for (int n3 = 0; n3 <= n3_max; ++n3) {
    // n2 >= 0 bounds n4; parity of d*delta + n4 - n3 must be even.
    for (int n4 = 0;; ++n4) {
      const long s = static_cast<long>(d) * cfg.delta + n4 - n3;
      if (s % 2 != 0) continue;
      const long n2 = 3L * d - 1 - s / 2;
      if (n2 < 0) break;
      rows.push_back(compute_record(
          store, cfg, InvariantKey(d, static_cast<int>(n2), n3, n4)));
    }
  }
  return rows;
}

std::string to_json(const ResultRecord& record) {
  return record_json(record).dump() + "\n";
}

std::string table_to_csv(const std::vector<ResultRecord>& rows) {
  std::string out = "delta,d,n2,n3,n4,value\n";
  for (const auto& r : rows) {
    out += std::to_string(r.delta) + "," + std::to_string(r.d);
    for (int v : r.n) out += "," + std::to_string(v);
    out += "," + to_string(r.value) + "\n";
  }
  return out;
}

std::string table_to_json(const std::vector<ResultRecord>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(record_json(r));
  return arr.dump() + "\n";
}

std::string report_to_text(const SuiteReport& report) {
  std::string out = "suite: " + report.suite + "\n";
  for (const auto& c : report.cases) {
    if (c.pass) continue;
    out += "[fail] " + c.description + ": expected " + to_string(c.expected) +
           ", got " + to_string(c.actual) + "\n";
  }
  out += report.passed()
             ? "result: PASS (" + std::to_string(report.cases.size()) +
                   " checks)\n"
             : "result: FAIL (" + std::to_string(report.failures()) + " of " +
                   std::to_string(report.cases.size()) + " checks)\n";
  return out;
}

std::string report_to_json(const SuiteReport& report) {
  Json j;
  j["suite"] = report.suite;
  j["passed"] = report.passed();
  j["checks"] = report.cases.size();
  j["failures"] = report.failures();
  Json cases = Json::array();
  for (const auto& c : report.cases) {
    Json cj;
    cj["description"] = c.description;
    cj["expected"] = to_string(c.expected);
    cj["actual"] = to_string(c.actual);
    cj["pass"] = c.pass;
    cases.push_back(cj);
  }
  j["cases"] = cases;
  return j.dump() + "\n";
}

}  // namespace rootstack
