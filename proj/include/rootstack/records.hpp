#pragma once

#include <string>
#include <vector>

#include "rootstack/engine.hpp"
#include "rootstack/verify.hpp"

namespace rootstack {

// One computed value as the CLI reports it.  n has three entries for a
// point-insertion key and five (n0..n4) for a general one.  value is "0"
// whenever admissible is false.
struct ResultRecord {
  int delta = 0;
  int d = 0;
  std::vector<int> n;
  Rational value;
  bool admissible = false;
};

ResultRecord compute_record(MemoStore& store, const GeometryConfig& cfg,
                            const InvariantKey& key);
ResultRecord general_record(MemoStore& store, const GeometryConfig& cfg,
                            const GeneralKey& key);

// Every dimension-admissible key of the given degree with n3 <= n3_max
// (n2 is determined by d, delta, n3, n4), sorted by (n3, n4).
std::vector<ResultRecord> admissible_table(MemoStore& store,
                                           const GeometryConfig& cfg, int d,
                                           int n3_max);

// Deterministic renderings (single trailing newline each).
std::string to_json(const ResultRecord& record);
std::string table_to_csv(const std::vector<ResultRecord>& rows);
std::string table_to_json(const std::vector<ResultRecord>& rows);
std::string report_to_text(const SuiteReport& report);
std::string report_to_json(const SuiteReport& report);

}  // namespace rootstack
