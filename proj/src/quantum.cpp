#include "rootstack/quantum.hpp"

#include <algorithm>

namespace rootstack {

namespace {

void check_basis_index(int i) {
  if (i < 0 || i > 4) throw UsageError("basis index must be 0..4");
}

}  // namespace

QuantumElement QuantumElement::basis(const TruncationOrder& trunc, int i) {
  check_basis_index(i);
  QuantumElement e(trunc);
  e.comp(i).add_term(Monomial{}, Rational(1));
  return e;
}

Series& QuantumElement::comp(int i) {
  check_basis_index(i);
  return comps_[static_cast<std::size_t>(i)];
}

const Series& QuantumElement::comp(int i) const {
  check_basis_index(i);
  return comps_[static_cast<std::size_t>(i)];
}

QuantumElement& QuantumElement::operator+=(const QuantumElement& rhs) {
  for (int i = 0; i < 5; ++i) comp(i) += rhs.comp(i);
  return *this;
}

QuantumElement& QuantumElement::operator-=(const QuantumElement& rhs) {
  for (int i = 0; i < 5; ++i) comp(i) -= rhs.comp(i);
  return *this;
}

bool QuantumElement::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(),
                     [](const Series& s) { return s.is_zero(); });
}

bool QuantumElement::operator==(const QuantumElement& rhs) const {
  for (int i = 0; i < 5; ++i)
    if (!(comp(i) == rhs.comp(i))) return false;
  return true;
}

Rational QuantumAlgebra::three_point(int i, int j, int k) const {
  check_basis_index(i);
  check_basis_index(j);
  check_basis_index(k);
  int counts[5] = {0, 0, 0, 0, 0};
  ++counts[i];
  ++counts[j];
  ++counts[k];
  return engine_->general_invariant(GeneralKey(
      0, counts[0], counts[1], counts[2], counts[3], counts[4]));
}

Series QuantumAlgebra::classical_third_derivative(int i, int j, int k) const {
  Series out(trunc_);
  out.add_term(Monomial{}, three_point(i, j, k));
  // The quartic correction lambda * y3^3 y4 / 6 survives third
  // differentiation only for index multisets {3,3,3} and {3,3,4}.
  int c3 = (i == 3) + (j == 3) + (k == 3);
  int c4 = (i == 4) + (j == 4) + (k == 4);
  if (c3 == 3 && c4 == 0) out.add_term(Monomial{0, 0, 0, 1}, lambda());
  if (c3 == 2 && c4 == 1) out.add_term(Monomial{0, 0, 1, 0}, lambda());
  return out;
}

Series QuantumAlgebra::gamma_third_derivative(int i, int j, int k) const {
  check_basis_index(i);
  check_basis_index(j);
  check_basis_index(k);
  std::array<int, 3> sorted{i, j, k};
  std::sort(sorted.begin(), sorted.end());
  if (auto it = gamma_cache_.find(sorted); it != gamma_cache_.end())
    return it->second;

  Series out(trunc_);
  if (sorted[0] > 0) {  // any unit index differentiates Gamma to zero
    int a[5] = {0, 0, 0, 0, 0};
    ++a[i];
    ++a[j];
    ++a[k];
    for (int d = 1; d <= trunc_.q_max; ++d) {
      const Rational dpow(int_pow(d, a[1]));
      for (int m2 = 0; m2 <= trunc_.y_max; ++m2)
        for (int m3 = 0; m2 + m3 <= trunc_.y_max; ++m3)
          for (int m4 = 0; m2 + m3 + m4 <= trunc_.y_max; ++m4) {
            const Rational value = engine_->invariant(
                InvariantKey(d, m2 + a[2], m3 + a[3], m4 + a[4]));
            if (value == 0) continue;
            Rational coeff =
                dpow * value /
                Rational(factorial(m2) * factorial(m3) * factorial(m4));
            out.add_term(Monomial{d, m2, m3, m4}, coeff);
          }
    }
  }
  gamma_cache_.emplace(sorted, out);
  return out;
}

QuantumElement QuantumAlgebra::stringy_product(int i, int j) const {
  QuantumElement out(trunc_);
  // Contract the three-point values with the inverse pairing: the unit
  // and point classes pair to 1, the hyperplane to itself to 1, and the
  // two twisted classes to each other with weight 2.
  out.comp(0).add_term(Monomial{}, three_point(i, j, 2));
  out.comp(1).add_term(Monomial{}, three_point(i, j, 1));
  out.comp(2).add_term(Monomial{}, three_point(i, j, 0));
  out.comp(3).add_term(Monomial{}, 2 * three_point(i, j, 4));
  out.comp(4).add_term(Monomial{}, 2 * three_point(i, j, 3));
  return out;
}

QuantumElement QuantumAlgebra::quantum_product(int i, int j) const {
  check_basis_index(i);
  check_basis_index(j);
  std::array<int, 2> sorted{std::min(i, j), std::max(i, j)};
  if (auto it = product_cache_.find(sorted); it != product_cache_.end())
    return it->second;

  QuantumElement out = stringy_product(i, j);
  out.comp(1) += gamma_third_derivative(i, j, 1);
  out.comp(0) += gamma_third_derivative(i, j, 2);
  out.comp(4) += Rational(2) * gamma_third_derivative(i, j, 3);
  out.comp(3) += Rational(2) * gamma_third_derivative(i, j, 4);
  // Contributions of the quartic correction through the pairing:
  // lambda * d2(y3^2 y4)/dyi dyj on T4 and (lambda/3) * d2(y3^3)/dyi dyj
  // on T3.
  const int c3 = (i == 3) + (j == 3);
  const int c4 = (i == 4) + (j == 4);
  if (c3 == 2) {
    out.comp(4).add_term(Monomial{0, 0, 0, 1}, 2 * lambda());
    out.comp(3).add_term(Monomial{0, 0, 1, 0}, 2 * lambda());
  } else if (c3 == 1 && c4 == 1) {
    out.comp(4).add_term(Monomial{0, 0, 1, 0}, 2 * lambda());
  }
  product_cache_.emplace(sorted, out);
  return out;
}

QuantumElement QuantumAlgebra::product(const QuantumElement& a,
                                       const QuantumElement& b) const {
  if (!(a.truncation() == trunc_) || !(b.truncation() == trunc_))
    throw UsageError("element truncation does not match the algebra");
  QuantumElement out(trunc_);
  for (int i = 0; i < 5; ++i) {
    if (a.comp(i).is_zero()) continue;
    for (int j = 0; j < 5; ++j) {
      if (b.comp(j).is_zero()) continue;
      const Series factor = a.comp(i) * b.comp(j);
      if (factor.is_zero()) continue;
      const QuantumElement pij = quantum_product(i, j);
      for (int c = 0; c < 5; ++c) {
        if (pij.comp(c).is_zero()) continue;
        out.comp(c) += factor * pij.comp(c);
      }
    }
  }
  return out;
}

QuantumElement QuantumAlgebra::associativity_residual(int i, int j,
                                                      int k) const {
  const QuantumElement left =
      product(quantum_product(i, j), basis_element(k));
  const QuantumElement right =
      product(basis_element(i), quantum_product(j, k));
  return left - right;
}

Series QuantumAlgebra::relation_residual_series(int which) const {
  const Rational lam = lambda();
  const Rational dl(engine_->config().delta);
  auto G = [&](int i, int j, int k) { return gamma_third_derivative(i, j, k); };
  const Monomial e3{0, 0, 1, 0};
  const Monomial e4{0, 0, 0, 1};

  switch (which) {
    case 1: {
      Series lhs = G(2, 2, 2);
      Series rhs = G(1, 1, 2) * G(1, 1, 2) - G(1, 1, 1) * G(1, 2, 2) +
                   Rational(4) * (G(1, 2, 3) * G(1, 2, 4)) -
                   Rational(2) * (G(1, 1, 3) * G(2, 2, 4)) -
                   Rational(2) * (G(1, 1, 4) * G(2, 2, 3));
      return lhs - rhs;
    }
    case 2: {
      Series lhs = dl * G(1, 4, 4) +
                   (4 * lam) * (G(4, 4, 4).shifted(e4) -
                                G(3, 4, 4).shifted(e3)) -
                   Rational(2) * G(2, 3, 4);
      Series rhs = Rational(2) * (G(1, 3, 4) * G(1, 3, 4) -
                                  G(1, 3, 3) * G(1, 4, 4)) +
                   Rational(4) * (G(3, 3, 4) * G(3, 4, 4) -
                                  G(3, 3, 3) * G(4, 4, 4));
      return lhs - rhs;
    }
    case 3: {
      Series lhs = (2 * dl) * G(4, 4, 4) - G(1, 2, 4) -
                   (4 * lam) * G(1, 4, 4).shifted(e3);
      Series rhs = Rational(2) * (G(1, 1, 4) * G(1, 3, 4) -
                                  G(1, 1, 3) * G(1, 4, 4)) +
                   Rational(4) * (G(1, 4, 4) * G(3, 3, 4) -
                                  G(1, 3, 3) * G(4, 4, 4));
      return lhs - rhs;
    }
    case 4: {
      Series lhs = G(2, 3, 3) + (dl / 2) * G(1, 1, 1) -
                   (2 * dl) * G(1, 3, 4) +
                   (2 * lam) * (G(1, 1, 3).shifted(e3) +
                                G(1, 1, 4).shifted(e4));
      Series rhs = G(1, 1, 3) * G(1, 1, 3) - G(1, 1, 1) * G(1, 3, 3) +
                   Rational(4) * (G(1, 3, 3) * G(1, 3, 4)) -
                   Rational(2) * (G(1, 1, 3) * G(3, 3, 4)) -
                   Rational(2) * (G(1, 1, 4) * G(3, 3, 3));
      return lhs - rhs;
    }
    default:
      throw UsageError("relation index must be 1..4");
  }
}

Rational QuantumAlgebra::relation_residual(int which, const Monomial& m) const {
  Series probe(trunc_);
  if (!probe.in_box(m))
    throw UsageError("coefficient lies outside the truncation box");
  return relation_residual_series(which).coefficient(m);
}

Rational derive_lambda(const Engine& engine) {
  const long delta = engine.config().delta;
  const Rational base = engine.invariant(InvariantKey(1, 2, delta, 0));
  if (base == 0)
    throw VerificationError(
        "coupling derivation degenerate: I_1(2,delta,0) vanished");
  const Rational rhs =
      2 * delta * engine.invariant(InvariantKey(1, 2, delta + 1, 1)) -
      engine.invariant(InvariantKey(1, 3, delta + 2, 0));
  // delta (1/2 + 2 lambda) base = rhs  ==>  lambda = rhs/(2 delta base) - 1/4
  return rhs / (2 * delta * base) - Rational(1, 4);
}

}  // namespace rootstack
