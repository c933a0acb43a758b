#include "rootstack/memo_store.hpp"

#include <string>

#include "rootstack/errors.hpp"

namespace rootstack {

namespace {

std::string describe(const StoreKey& key) {
  return "(delta=" + std::to_string(key.delta) + ", d=" + std::to_string(key.d) +
         ", n=(" + std::to_string(key.n2) + "," + std::to_string(key.n3) + "," +
         std::to_string(key.n4) + "))";
}

}  // namespace

void MemoStore::insert(const StoreKey& key, const Rational& value) {
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = entries_.emplace(key, value);
  if (!inserted && it->second != value)
    throw ConflictError("conflicting values for " + describe(key) + ": " +
                        to_string(it->second) + " vs " + to_string(value));
}

}  // namespace rootstack
