#include "rootstack/cache_io.hpp"

#include <charconv>
#include <set>
#include <string>
#include <vector>

#include "rootstack/errors.hpp"

namespace rootstack {

void export_cache(const MemoStore& store, std::ostream& out) {
  out << kCacheHeader << "\n";
  for (const auto& [key, value] : store.snapshot())
    out << key.delta << "\t" << key.d << "\t" << key.n2 << "\t" << key.n3
        << "\t" << key.n4 << "\t" << to_string(value) << "\n";
}

namespace {

// Canonical decimal integer only: no sign, no leading zeros, no blanks.
bool parse_count(const std::string& field, int min_value, int* out) {
  int value = 0;
  const char* first = field.data();
  const char* last = first + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return false;
  if (std::to_string(value) != field) return false;
  *out = value;
  return value >= min_value;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

void import_cache(MemoStore& store, std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCacheHeader)
    throw UsageError(std::string("cache file must start with \"") +
                     kCacheHeader + "\"");
  std::set<StoreKey> seen;
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = "cache line " + std::to_string(line_no) + ": ";
    if (line.empty()) throw UsageError(where + "empty line");
    const auto fields = split_tabs(line);
    if (fields.size() != 6)
      throw UsageError(where + "expected 6 tab-separated fields, found " +
                       std::to_string(fields.size()));
    int delta, d, n2, n3, n4;
    if (!parse_count(fields[0], 1, &delta))
      throw UsageError(where + "bad delta field \"" + fields[0] + "\"");
    if (!parse_count(fields[1], 1, &d))
      throw UsageError(where + "bad degree field \"" + fields[1] + "\"");
    if (!parse_count(fields[2], 0, &n2) || !parse_count(fields[3], 0, &n3) ||
        !parse_count(fields[4], 0, &n4))
      throw UsageError(where + "bad insertion count");
    const auto value = parse_canonical(fields[5]);
    if (!value)
      throw UsageError(where + "value \"" + fields[5] +
                       "\" is not a canonical fraction");
    const StoreKey key(delta, d, n2, n3, n4);
    if (!seen.insert(key).second)
      throw UsageError(where + "duplicate key");
    store.insert(key, *value);  // disagreement raises ConflictError
  }
}

}  // namespace rootstack
