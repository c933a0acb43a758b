#include "rootstack/series.hpp"

namespace rootstack {

void Series::add_term(const Monomial& m, const Rational& c) {
  if (m.q < 0 || m.m2 < 0 || m.m3 < 0 || m.m4 < 0)
    throw UsageError("series monomials need non-negative exponents");
  if (c == 0 || !in_box(m)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Series& Series::operator+=(const Series& rhs) {
  require_same_box(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  require_same_box(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Series& Series::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Series operator*(const Series& lhs, const Series& rhs) {
  lhs.require_same_box(rhs);
  Series out(lhs.trunc_);
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      const Monomial m{ma.q + mb.q, ma.m2 + mb.m2, ma.m3 + mb.m3,
                       ma.m4 + mb.m4};
      if (!out.in_box(m)) continue;
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Series Series::shifted(const Monomial& by) const {
  if (by.q < 0 || by.m2 < 0 || by.m3 < 0 || by.m4 < 0)
    throw UsageError("series monomials need non-negative exponents");
  Series out(trunc_);
  for (const auto& [m, c] : terms_)
    out.add_term(Monomial{m.q + by.q, m.m2 + by.m2, m.m3 + by.m3,
                          m.m4 + by.m4},
                 c);
  return out;
}

bool Series::operator==(const Series& rhs) const {
  require_same_box(rhs);
  return terms_ == rhs.terms_;
}

}  // namespace rootstack
