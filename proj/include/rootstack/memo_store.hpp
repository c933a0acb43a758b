#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "rootstack/keys.hpp"
#include "rootstack/rational.hpp"

namespace rootstack {

// Memo entries are keyed by the full (delta, d, n2, n3, n4) tuple so that
// one store can serve engines for several geometries at once (the
// verification suites sweep delta).
struct StoreKey {
  int delta, d, n2, n3, n4;

  StoreKey(int delta_, const InvariantKey& k)
      : delta(delta_), d(k.d), n2(k.n2), n3(k.n3), n4(k.n4) {}
  StoreKey(int delta_, int d_, int n2_, int n3_, int n4_)
      : delta(delta_), d(d_), n2(n2_), n3(n3_), n4(n4_) {}

  auto operator<=>(const StoreKey&) const = default;
};

// Thread-safe memo table with idempotent writes.  Every code path that
// writes a key computes the same mathematical quantity, so a write that
// disagrees with an existing entry is a hard error (it can only mean a
// bug or a corrupted seed file).
class MemoStore {
 public:
  std::optional<Rational> lookup(const StoreKey& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  // Idempotent: re-inserting an equal value is a no-op; a different value
  // throws ConflictError.
  void insert(const StoreKey& key, const Rational& value);

  // Sorted copy of all entries (the cache file order).
  std::vector<std::pair<StoreKey, Rational>> snapshot() const {
    std::lock_guard<std::mutex> lock(mu_);
    return {entries_.begin(), entries_.end()};
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.size();
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    entries_.clear();
  }

 private:
  mutable std::mutex mu_;
  std::map<StoreKey, Rational> entries_;
};

}  // namespace rootstack
