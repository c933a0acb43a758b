#pragma once

#include "rootstack/keys.hpp"
#include "rootstack/memo_store.hpp"
#include "rootstack/rational.hpp"

namespace rootstack {

// Computes every genus-0 invariant of the rooted plane exactly, from two
// seeded degree-1 values and four recursions obtained from associativity
// of the quantum product (WDVV).  Writing a key as (d; n2, n3, n4):
//
//   seeds:  (1; 2, delta, 0) = delta!      (1; 1, delta-1, 1) = (delta-1)!
//
//   R1  T0-component of WDVV for (T1, T1, T2), solved for I_d; usable
//       when n2 >= 3.  Lowers n2 and splits the degree; no same-degree
//       dependencies.
//   R2  T4-component of WDVV for (T1, T3, T4); usable when n4 >= 2 and
//       the leading coefficient d*delta + n3 - n4 + 2 is non-zero.  Its
//       same-degree dependency moves (n3, n4) by (+1, -1).
//   R3  T1-component of WDVV for (T3, T4, T4); usable when n4 >= 3.
//       Same-degree moves: (0, -2) and (-1, -1).
//   R4  T0-component of WDVV for (T1, T3, T3); usable when
//       d*delta != n3 + n4.  Same-degree moves: (+1, +1) and (+2, 0).
//
// Evaluation order: dimension check, seeds, then R1/R2/R3/R4 gated as
// above (R3 is reached exactly on the ray n4 - n3 = d*delta + 2, where
// R2 degenerates).  n4 - n3 never increases along same-degree chains and
// every chain provably terminates; recursion_depth_bound gives an a
// priori bound on chain length that eval() enforces as a hard guard.
class Engine {
 public:
  // The store is shared and may outlive the engine; one engine serves one
  // geometry.  Engines are cheap to construct.  The store is safe to
  // share across threads; a single Engine instance is not (its counters
  // are unsynchronised), so give each thread its own.
  Engine(const GeometryConfig& cfg, MemoStore& store)
      : cfg_(cfg), store_(&store) {}

  const GeometryConfig& config() const { return cfg_; }

  // Virtual dimension of the moduli problem; insertions of half-integral
  // age make this a rational number.
  Rational expected_dimension(const InvariantKey& key) const;

  // True when the expected dimension matches the number of point
  // conditions, i.e. the invariant can be non-zero.
  bool dimension_admissible(const InvariantKey& key) const;

  // Upper bound for the length of any chain of same-degree dependencies
  // rooted at a key with this degree and curve-point counts.  Exceeding
  // it means evaluation walked off the terminating region: a hard error.
  long recursion_depth_bound(int d, int n3, int n4) const;

  // The invariant itself.  Inadmissible keys are 0 (and are not
  // memoised); admissible results are always memoised in the store.
  Rational invariant(const InvariantKey& key) const;

  // Invariant in the full basis: unit insertions kill positive-degree
  // (and long degree-0) invariants, hyperplane insertions contribute a
  // factor d each, degree 0 reduces to the three-point table plus the
  // single four-point orbifold value.
  Rational general_invariant(const GeneralKey& key) const;

  // One recursion solved for I_d(key), every other invariant on the
  // right-hand side obtained through invariant().  Only the arithmetic
  // gate is enforced (dimension admissibility is not required):
  //   which=1: n2 >= 3
  //   which=2: n4 >= 2 and d*delta + n3 - n4 + 2 != 0
  //   which=3: n4 >= 3
  //   which=4: d*delta != n3 + n4
  // A violated gate is a UsageError.  Independent re-derivations of
  // invariant(), used by the cross-check suite.
  Rational recursion_value(int which, const InvariantKey& key) const;

  // The arithmetic gate above, as a predicate.
  bool recursion_applicable(int which, const InvariantKey& key) const;

  struct Stats {
    long evaluations = 0;  // dispatches past memo and dimension checks
    long memo_hits = 0;
    long max_chain = 0;  // longest same-degree chain actually observed
  };
  const Stats& stats() const { return stats_; }

 private:
  struct Ctx;

  Rational eval(const InvariantKey& key, Ctx& ctx, const InvariantKey& root,
                long chain_len) const;
  Rational dispatch(const InvariantKey& key, Ctx& ctx,
                    const InvariantKey& root, long chain_len) const;

  template <typename FetchSame, typename FetchSplit>
  Rational recursion_rhs(int which, const InvariantKey& key, FetchSame&& same,
                         FetchSplit&& split) const;

  template <typename FetchSplit, typename Weight>
  Rational split_sum(int d, int t2, int t3, int t4, FetchSplit&& split,
                     Weight&& weight) const;

  GeometryConfig cfg_;
  MemoStore* store_;
  mutable Stats stats_;
};

}  // namespace rootstack
