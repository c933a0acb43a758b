#pragma once

#include <compare>
#include <map>

#include "rootstack/errors.hpp"
#include "rootstack/rational.hpp"

namespace rootstack {

// Truncation box for power series in Q, y2, y3, y4: exponents with
// q <= q_max and m2 + m3 + m4 <= y_max are kept, everything else is
// dropped.  Because all exponents are non-negative, a product truncated
// to the box is exact inside the box: no discarded term of either factor
// can contribute to a kept monomial.
struct TruncationOrder {
  int q_max;
  int y_max;

  TruncationOrder(int q_max_, int y_max_) : q_max(q_max_), y_max(y_max_) {
    if (q_max < 0 || y_max < 0)
      throw UsageError("truncation orders must be non-negative");
  }

  bool operator==(const TruncationOrder&) const = default;
};

struct Monomial {
  int q = 0, m2 = 0, m3 = 0, m4 = 0;

  auto operator<=>(const Monomial&) const = default;
};

// Sparse exact power series, truncated to a box.  Coefficients are plain
// monomial coefficients -- when a generating function is written with
// divided powers y^n/n!, the 1/n! is folded into the stored value.  The
// divisor variable y1 never appears: its exponential is folded into Q, so
// a y1-derivative shows up as a factor d on the Q^d coefficient.
// Zero coefficients are never stored.
class Series {
 public:
  explicit Series(const TruncationOrder& trunc) : trunc_(trunc) {}

  static Series constant(const TruncationOrder& trunc, const Rational& c) {
    Series s(trunc);
    s.add_term(Monomial{}, c);
    return s;
  }

  const TruncationOrder& truncation() const { return trunc_; }

  bool in_box(const Monomial& m) const {
    return m.q <= trunc_.q_max && m.m2 + m.m3 + m.m4 <= trunc_.y_max;
  }

  // Accumulates c onto the monomial; silently drops terms outside the
  // box.  Negative exponents are a usage error.
  void add_term(const Monomial& m, const Rational& c);

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Rational& scalar);

  friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
  friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
  friend Series operator*(Series lhs, const Rational& scalar) {
    return lhs *= scalar;
  }
  friend Series operator*(const Rational& scalar, Series rhs) {
    return rhs *= scalar;
  }

  // Exact truncated product; both factors must share a truncation order.
  friend Series operator*(const Series& lhs, const Series& rhs);

  // Multiplication by a single monomial (used for terms like y3 * G).
  Series shifted(const Monomial& by) const;

  // Equal truncation and equal coefficient maps.  Comparing series from
  // different boxes is a usage error, like every other mixed operation.
  bool operator==(const Series& rhs) const;

 private:
  void require_same_box(const Series& rhs) const {
    if (!(trunc_ == rhs.trunc_))
      throw UsageError("series truncation orders do not match");
  }

  TruncationOrder trunc_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace rootstack
