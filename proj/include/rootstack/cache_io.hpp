#pragma once

#include <istream>
#include <ostream>

#include "rootstack/memo_store.hpp"

namespace rootstack {

// Cache file format, version 1: a header line, then one line per entry
//   delta <TAB> d <TAB> n2 <TAB> n3 <TAB> n4 <TAB> value
// sorted lexicographically by (delta, d, n2, n3, n4), every integer and
// fraction in canonical text, exactly one newline after every line.
inline constexpr const char kCacheHeader[] = "#rootstack-gw-cache v1";

void export_cache(const MemoStore& store, std::ostream& out);

// Strict: a wrong header, malformed or non-canonical fields, or a
// duplicate key raises UsageError; a value that contradicts an entry
// already in the store raises ConflictError (the store is never
// silently overwritten).
void import_cache(MemoStore& store, std::istream& in);

}  // namespace rootstack
