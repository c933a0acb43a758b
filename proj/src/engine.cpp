#include "rootstack/engine.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rootstack/errors.hpp"

namespace rootstack {

namespace {

std::string describe(int delta, const InvariantKey& key) {
  return "(delta=" + std::to_string(delta) + ", d=" + std::to_string(key.d) +
         ", n=(" + std::to_string(key.n2) + "," + std::to_string(key.n3) +
         "," + std::to_string(key.n4) + "))";
}

}  // namespace

// Evaluation context for a single top-level invariant() call: the keys on
// the current dependency path (for cycle detection) plus counters.  Each
// query gets a fresh context, so concurrent queries never interact except
// through the idempotent store.
struct Engine::Ctx {
  std::set<InvariantKey> in_progress;
};

Rational Engine::expected_dimension(const InvariantKey& key) const {
  // 3d - 1 from deforming a rational plane curve, - d*delta/2 from the
  // root construction along the curve, + n2 + (n3+n4)/2 from insertions.
  long num = 6L * key.d - static_cast<long>(key.d) * cfg_.delta + key.n3 +
             key.n4 + 2L * key.n2 - 2L;
  Rational dim(num, 2);
  dim.canonicalize();
  return dim;
}

bool Engine::dimension_admissible(const InvariantKey& key) const {
  long s = static_cast<long>(key.d) * cfg_.delta + key.n4 - key.n3;
  // Point conditions must exactly exhaust the expected dimension:
  // 3d - 1 = s/2 + n2 with s even.
  return s % 2 == 0 && 2L * (3L * key.d - 1) == s + 2L * key.n2;
}

long Engine::recursion_depth_bound(int d, int n3, int n4) const {
  // Same-degree moves never increase n4 - n3; the bound combines the
  // budget of (+1,-1)/(0,-2) descents with the worst-case excursions of
  // the (+1,+1)/(+2,0) moves before they leave the admissible region.
  long shrink = (6L - cfg_.delta) * d;
  long b2 = static_cast<long>(n4) - n3 + 8 - shrink;
  long tail = std::max(0L, 10 - shrink);
  long num = b2 + 2L * (n4 + tail);  // = 2 * (b2/2 + n4 + tail)
  long half = num >= 0 ? (num + 1) / 2 : num / 2;  // ceil(num / 2)
  return std::max(0L, half);
}

Rational Engine::invariant(const InvariantKey& key) const {
  Ctx ctx;
  return eval(key, ctx, key, 0);
}

Rational Engine::eval(const InvariantKey& key, Ctx& ctx,
                      const InvariantKey& root, long chain_len) const {
  if (!dimension_admissible(key)) return Rational(0);

  const StoreKey skey(cfg_.delta, key);
  if (auto hit = store_->lookup(skey)) {
    ++stats_.memo_hits;
    return *hit;
  }

  if (ctx.in_progress.count(key))
    throw CycleError("dependency cycle at " + describe(cfg_.delta, key));
  const long bound = recursion_depth_bound(root.d, root.n3, root.n4);
  if (chain_len > bound)
    throw DepthError("same-degree chain of length " +
                     std::to_string(chain_len) + " from " +
                     describe(cfg_.delta, root) + " exceeds its bound " +
                     std::to_string(bound));

  ++stats_.evaluations;
  stats_.max_chain = std::max(stats_.max_chain, chain_len);

  ctx.in_progress.insert(key);
  Rational value = dispatch(key, ctx, root, chain_len);
  ctx.in_progress.erase(key);

  store_->insert(skey, value);
  return value;
}

Rational Engine::dispatch(const InvariantKey& key, Ctx& ctx,
                          const InvariantKey& root, long chain_len) const {
  const int delta = cfg_.delta;

  // Seeded degree-1 values.
  if (key.d == 1 && key.n2 == 2 && key.n3 == delta && key.n4 == 0)
    return Rational(factorial(delta));
  if (key.d == 1 && key.n2 == 1 && key.n3 == delta - 1 && key.n4 == 1)
    return Rational(factorial(delta - 1));

  // Same-degree dependencies stay on this chain; the factors of a degree
  // split start fresh chains rooted at themselves.
  auto same = [&](const InvariantKey& k) {
    return eval(k, ctx, root, chain_len + 1);
  };
  auto split = [&](const InvariantKey& k) { return eval(k, ctx, k, 0); };

  if (key.n2 >= 3) return recursion_rhs(1, key, same, split);
  if (key.n4 >= 2 && key.n4 - key.n3 != key.d * delta + 2)
    return recursion_rhs(2, key, same, split);
  if (key.n4 - key.n3 == key.d * delta + 2)
    return recursion_rhs(3, key, same, split);
  return recursion_rhs(4, key, same, split);
}

template <typename FetchSplit, typename Weight>
Rational Engine::split_sum(int d, int t2, int t3, int t4, FetchSplit&& split,
                           Weight&& weight) const {
  Rational acc(0);
  if (t2 < 0 || t3 < 0 || t4 < 0) return acc;
  for (int d1 = 1; d1 < d; ++d1) {
    const int d2 = d - d1;
    for (int p2 = 0; p2 <= t2; ++p2)
      for (int p3 = 0; p3 <= t3; ++p3)
        for (int p4 = 0; p4 <= t4; ++p4) {
          const Integer w = weight(static_cast<long>(d1),
                                   static_cast<long>(d2), p2, p3, p4);
          if (w == 0) continue;
          const InvariantKey pk(d1, p2, p3, p4);
          const InvariantKey qk(d2, t2 - p2, t3 - p3, t4 - p4);
          // An inadmissible factor contributes nothing; skip before
          // recursing.
          if (!dimension_admissible(pk) || !dimension_admissible(qk))
            continue;
          const Rational a = split(pk);
          if (a == 0) continue;
          const Rational b = split(qk);
          if (b == 0) continue;
          acc += Rational(w) * a * b;
        }
  }
  return acc;
}

template <typename FetchSame, typename FetchSplit>
Rational Engine::recursion_rhs(int which, const InvariantKey& key,
                               FetchSame&& same, FetchSplit&& split) const {
  const long delta = cfg_.delta;
  const int d = key.d;
  const long n2 = key.n2, n3 = key.n3, n4 = key.n4;

  switch (which) {
    case 1: {
      // T0-component of WDVV for (T1, T1, T2), solved for I_d.  Purely a
      // sum over degree splits; empty (hence 0) in degree 1.
      Rational s = split_sum(
          d, key.n2 - 1, key.n3, key.n4, split,
          [&](long d1, long d2, long p2, long p3, long p4) {
            Integer core = d1 * d1 * d2 * d2 * binomial(n2 - 3, p2 - 1) -
                           d1 * d1 * d1 * d2 * binomial(n2 - 3, p2);
            if (core == 0) return core;
            return Integer(binomial(n3, p3) * binomial(n4, p4) * core);
          });
      s += split_sum(
          d, key.n2 - 1, key.n3 + 1, key.n4 + 1, split,
          [&](long d1, long d2, long p2, long p3, long p4) {
            Integer core = 2 * d1 * d2 * binomial(n2 - 3, p2 - 1) -
                           d1 * d1 * binomial(n2 - 3, p2) -
                           d2 * d2 * binomial(n2 - 3, p2 - 2);
            if (core == 0) return core;
            return Integer(2 * binomial(n3, p3 - 1) * binomial(n4, p4) * core);
          });
      return s;
    }

    case 2: {
      // T4-component of WDVV for (T1, T3, T4); trades two twisted points
      // for an untwisted one at the same degree.
      const long lead = d * delta + n3 - n4 + 2;
      if (lead == 0)
        throw InternalError("degenerate leading coefficient in R2 at " +
                            describe(cfg_.delta, key));
      Rational rhs = 2 * same(InvariantKey(d, key.n2 + 1, key.n3 + 1,
                                           key.n4 - 1));
      rhs += split_sum(
          d, key.n2, key.n3 + 2, key.n4, split,
          [&](long d1, long d2, long p2, long p3, long p4) {
            Integer core = binomial(n3, p3 - 1) * binomial(n4 - 2, p4 - 1) -
                           binomial(n3, p3 - 2) * binomial(n4 - 2, p4);
            if (core == 0) return core;
            return Integer(2 * d1 * d2 * binomial(n2, p2) * core);
          });
      rhs += split_sum(
          d, key.n2, key.n3 + 3, key.n4 + 1, split,
          [&](long, long, long p2, long p3, long p4) {
            Integer core = binomial(n3, p3 - 2) * binomial(n4 - 2, p4 - 1) -
                           binomial(n3, p3 - 3) * binomial(n4 - 2, p4);
            if (core == 0) return core;
            return Integer(4 * binomial(n2, p2) * core);
          });
      return rhs / lead;
    }

    case 3: {
      // T1-component of WDVV for (T3, T4, T4); burns twisted points two
      // at a time.
      Rational rhs = d * same(InvariantKey(d, key.n2 + 1, key.n3,
                                           key.n4 - 2));
      if (n3 > 0)
        rhs -= n3 * d *
               same(InvariantKey(d, key.n2, key.n3 - 1, key.n4 - 1));
      rhs += split_sum(
          d, key.n2, key.n3 + 1, key.n4 - 1, split,
          [&](long d1, long d2, long p2, long p3, long p4) {
            Integer core = d1 * d2 * d2 * binomial(n4 - 3, p4 - 1) -
                           d1 * d1 * d2 * binomial(n4 - 3, p4);
            if (core == 0) return core;
            return Integer(2 * binomial(n2, p2) * binomial(n3, p3 - 1) * core);
          });
      rhs += split_sum(
          d, key.n2, key.n3 + 2, key.n4, split,
          [&](long d1, long d2, long p2, long p3, long p4) {
            Integer core = d2 * binomial(n4 - 3, p4 - 1) -
                           d1 * binomial(n4 - 3, p4);
            if (core == 0) return core;
            return Integer(4 * binomial(n2, p2) * binomial(n3, p3 - 2) * core);
          });
      return rhs / (2 * delta);
    }

    case 4: {
      // T0-component of WDVV for (T1, T3, T3); the fallback when no
      // twisted points are available to burn.
      const long excess = d * delta - n3 - n4;
      if (excess == 0)
        throw InternalError("degenerate leading coefficient in R4 at " +
                            describe(cfg_.delta, key));
      Rational lead(static_cast<long>(d) * d * excess, 2);
      lead.canonicalize();
      Rational rhs = 2 * d * delta *
                     same(InvariantKey(d, key.n2, key.n3 + 1, key.n4 + 1));
      rhs -= same(InvariantKey(d, key.n2 + 1, key.n3 + 2, key.n4));
      rhs += split_sum(
          d, key.n2, key.n3 + 2, key.n4, split,
          [&](long d1, long d2, long p2, long p3, long p4) {
            Integer core = d1 * d1 * d2 * d2 * binomial(n3, p3 - 1) -
                           d1 * d1 * d1 * d2 * binomial(n3, p3);
            if (core == 0) return core;
            return Integer(binomial(n2, p2) * binomial(n4, p4) * core);
          });
      rhs += split_sum(
          d, key.n2, key.n3 + 3, key.n4 + 1, split,
          [&](long d1, long d2, long p2, long p3, long p4) {
            Integer core = 2 * d1 * d2 * binomial(n3, p3 - 2) -
                           d1 * d1 * binomial(n3, p3 - 1) -
                           d2 * d2 * binomial(n3, p3 - 3);
            if (core == 0) return core;
            return Integer(2 * binomial(n2, p2) * binomial(n4, p4) * core);
          });
      return rhs / lead;
    }

    default:
      throw UsageError("recursion index must be 1..4");
  }
}

bool Engine::recursion_applicable(int which, const InvariantKey& key) const {
  switch (which) {
    case 1:
      return key.n2 >= 3;
    case 2:
      return key.n4 >= 2 &&
             static_cast<long>(key.d) * cfg_.delta + key.n3 - key.n4 + 2 != 0;
    case 3:
      return key.n4 >= 3;
    case 4:
      return static_cast<long>(key.d) * cfg_.delta != key.n3 + key.n4;
    default:
      throw UsageError("recursion index must be 1..4");
  }
}

Rational Engine::recursion_value(int which, const InvariantKey& key) const {
  if (!recursion_applicable(which, key))
    throw UsageError("recursion " + std::to_string(which) +
                     " does not apply to " + describe(cfg_.delta, key));
  auto fetch = [this](const InvariantKey& k) { return invariant(k); };
  return recursion_rhs(which, key, fetch, fetch);
}

Rational Engine::general_invariant(const GeneralKey& key) const {
  const long total = static_cast<long>(key.n0) + key.n1 + key.n2 + key.n3 +
                     key.n4;

  // A unit insertion kills everything except three-point values.
  if (key.n0 > 0 && (key.d > 0 || total > 3)) return Rational(0);

  // Each hyperplane insertion contributes a factor d (so degree 0 dies).
  if (key.n1 > 0 && (key.d > 0 || total > 3)) {
    if (key.d == 0) return Rational(0);
    Rational rest = general_invariant(
        GeneralKey(key.d, 0, 0, key.n2, key.n3, key.n4));
    return Rational(int_pow(key.d, key.n1)) * rest;
  }

  if (key.d == 0) {
    if (total == 3) {
      // The degree-0 three-point table.
      if (key.n0 == 2 && key.n2 == 1) return Rational(1);
      if (key.n0 == 1 && key.n1 == 2) return Rational(1);
      if (key.n1 == 1 && key.n3 == 2) {
        Rational v(cfg_.delta, 2);
        v.canonicalize();
        return v;
      }
      if (key.n0 == 1 && key.n3 == 1 && key.n4 == 1) return Rational(1, 2);
      return Rational(0);
    }
    if (key.n2 > 0) return Rational(0);
    // The lone orbifold four-point value: four twisted-sector insertions
    // with a single point among them.
    return (key.n3 == 3 && key.n4 == 1) ? Rational(-1, 4) : Rational(0);
  }

  return invariant(InvariantKey(key.d, key.n2, key.n3, key.n4));
}

}  // namespace rootstack
