#include "doctest.h"
#include "rootstack/verify.hpp"

using namespace rootstack;

TEST_CASE("closed-form family values") {
  CHECK(lambda_k(0) == Rational(1, 2));
  CHECK(lambda_k(1) == Rational(-1, 4));
  CHECK(lambda_k(3) == Rational(-3, 8));
  CHECK(lambda_k(6) == Rational(45, 8));
  CHECK_THROWS_AS(lambda_k(-1), UsageError);
}

TEST_CASE("line and conic closed-form suites pass") {
  MemoStore store;
  const SuiteReport line = check_line_closed_form(store, 5);
  CHECK(line.passed());
  CHECK(line.cases.size() == 6);
  const SuiteReport conic = check_conic_closed_form(store, 2);
  CHECK(conic.passed());
  CHECK(conic.cases.size() == 3);
}

TEST_CASE("degree-1 bases: seeded and unseeded factorials") {
  MemoStore store;
  const SuiteReport report = check_degree1_bases(store, 5);
  CHECK(report.passed());
  // delta = 1 contributes two cases, delta >= 2 three cases each.
  CHECK(report.cases.size() == 2 + 4 * 3);
}

TEST_CASE("pinned values suite passes") {
  MemoStore store;
  const SuiteReport report = check_pinned_values(store);
  CHECK(report.passed());
  CHECK(report.failures() == 0);
}

TEST_CASE("every applicable recursion agrees on admissible keys") {
  MemoStore store;
  const GeometryConfig line(1);
  CHECK(cross_check(store, line, InvariantKey(1, 0, 0, 3)).passed());
  CHECK(cross_check(store, GeometryConfig(3), InvariantKey(1, 2, 3, 0))
            .passed());
  CHECK_THROWS_AS(cross_check(store, line, InvariantKey(1, 0, 0, 2)),
                  UsageError);  // inadmissible key

  const SuiteReport sweep = cross_check_sweep(store, {1}, 2, 4, 6);
  CHECK(sweep.passed());
  CHECK(sweep.cases.size() > 0);
}

TEST_CASE("small associativity and relation sweeps pass") {
  MemoStore store;
  CHECK(wdvv_sweep(store, {1}, TruncationOrder(1, 3)).passed());
  CHECK(relations_sweep(store, {1, 2}, 2, 4).passed());
}

TEST_CASE("suite dispatch by name") {
  MemoStore store;
  CHECK(run_suite(store, "pinned").passed());
  CHECK(run_suite(store, "closed-forms", {}, -1, -1, 2, -1).passed());
  CHECK(run_suite(store, "bases", {3}).passed());
  CHECK(run_suite(store, "relations", {1}, -1, 3, -1, 1).passed());
  CHECK(run_suite(store, "wdvv", {1}, 1, 2, -1, -1).passed());
  CHECK(run_suite(store, "cross", {1}, -1, -1, -1, 1).passed());
  CHECK_THROWS_AS(run_suite(store, "bogus"), UsageError);
}
