#include "doctest.h"
#include "rootstack/keys.hpp"
#include "rootstack/memo_store.hpp"

using namespace rootstack;

TEST_CASE("geometry and key validation") {
  CHECK(GeometryConfig(1).delta == 1);
  CHECK(GeometryConfig(7).delta == 7);
  CHECK_THROWS_AS(GeometryConfig(0), UsageError);
  CHECK_THROWS_AS(GeometryConfig(-2), UsageError);

  CHECK_THROWS_AS(InvariantKey(0, 0, 0, 0), UsageError);
  CHECK_THROWS_AS(InvariantKey(1, -1, 0, 0), UsageError);
  CHECK_THROWS_AS(InvariantKey(1, 0, -1, 0), UsageError);
  CHECK_THROWS_AS(InvariantKey(1, 0, 0, -1), UsageError);
  CHECK(InvariantKey(4, 7, 0, 4).d == 4);

  CHECK_THROWS_AS(GeneralKey(-1, 0, 0, 0, 0, 3), UsageError);
  CHECK_THROWS_AS(GeneralKey(0, 1, 1, 0, 0, 0), UsageError);  // two insertions
  CHECK(GeneralKey(0, 2, 0, 1, 0, 0).n0 == 2);
  CHECK(GeneralKey(2, 0, 0, 0, 0, 0).d == 2);  // positive degree, no marks
}

TEST_CASE("keys order lexicographically") {
  CHECK(InvariantKey(1, 0, 0, 3) < InvariantKey(1, 0, 1, 0));
  CHECK(InvariantKey(1, 5, 5, 5) < InvariantKey(2, 0, 0, 0));
  CHECK(StoreKey(1, 2, 0, 0, 0) < StoreKey(2, 1, 0, 0, 0));
  CHECK(StoreKey(1, InvariantKey(4, 7, 0, 4)) ==
        StoreKey(1, 4, 7, 0, 4));
}

TEST_CASE("memo store is idempotent and conflict-checked") {
  MemoStore store;
  const StoreKey key(1, 4, 7, 0, 4);
  CHECK_FALSE(store.lookup(key).has_value());
  store.insert(key, Rational(416));
  CHECK(store.size() == 1);
  CHECK(*store.lookup(key) == Rational(416));

  store.insert(key, Rational(416));  // same value: fine
  CHECK(store.size() == 1);
  CHECK_THROWS_AS(store.insert(key, Rational(417)), ConflictError);

  store.insert(StoreKey(1, 1, 2, 1, 0), Rational(1));
  const auto rows = store.snapshot();
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].first == StoreKey(1, 1, 2, 1, 0));  // sorted
  CHECK(rows[1].first == key);

  store.clear();
  CHECK(store.size() == 0);
}
