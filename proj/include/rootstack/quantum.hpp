#pragma once

#include <array>
#include <map>

#include "rootstack/engine.hpp"
#include "rootstack/series.hpp"

namespace rootstack {

// An element of the truncated big quantum cohomology ring: a tuple of
// series coefficients over the basis T0..T4.
class QuantumElement {
 public:
  explicit QuantumElement(const TruncationOrder& trunc)
      : trunc_(trunc),
        comps_{Series(trunc), Series(trunc), Series(trunc), Series(trunc),
               Series(trunc)} {}

  static QuantumElement basis(const TruncationOrder& trunc, int i);

  const TruncationOrder& truncation() const { return trunc_; }
  Series& comp(int i);
  const Series& comp(int i) const;

  QuantumElement& operator+=(const QuantumElement& rhs);
  QuantumElement& operator-=(const QuantumElement& rhs);
  friend QuantumElement operator+(QuantumElement lhs,
                                  const QuantumElement& rhs) {
    return lhs += rhs;
  }
  friend QuantumElement operator-(QuantumElement lhs,
                                  const QuantumElement& rhs) {
    return lhs -= rhs;
  }

  bool is_zero() const;
  bool operator==(const QuantumElement& rhs) const;

 private:
  TruncationOrder trunc_;
  std::array<Series, 5> comps_;
};

// The quantum product and the potential identities behind the recursions.
//
// The potential splits as  Psi + Psi' + Gamma:  Psi is the classical
// cubic term (three-point values),  Psi' = lambda * y3^3 y4 / 6  is the
// one orbifold four-point correction with coupling lambda = -1/4, and
// Gamma collects all positive-degree contributions
//   Gamma = sum_d Q^d sum_n I_d(n) y2^n2/n2! y3^n3/n3! y4^n4/n4!.
// Third partials of the potential contracted with the Poincare pairing
// give the product:
//   T_i * T_j = T_i ._s T_j + G_ij1 T1 + G_ij2 T0 + 2 G_ij3 T4
//               + 2 G_ij4 T3 + lambda d2(y3^2 y4)/dyi dyj * T4
//               + (lambda/3) d2(y3^3)/dyi dyj * T3
// where ._s is the constant (stringy) product and G_ijk is the Gamma
// third partial.  Products of general elements extend bilinearly.
class QuantumAlgebra {
 public:
  QuantumAlgebra(const Engine& engine, const TruncationOrder& trunc)
      : engine_(&engine), trunc_(trunc) {}

  const TruncationOrder& truncation() const { return trunc_; }

  // The orbifold four-point coupling.
  static Rational lambda() { return Rational(-1, 4); }

  // Third partial of Psi + Psi': a constant plus, for indices {3,3,3}
  // and {3,3,4}, a linear term lambda*y4 resp. lambda*y3.
  Series classical_third_derivative(int i, int j, int k) const;

  // Third partial of Gamma as a truncated series; the plain coefficient
  // of Q^d y2^m2 y3^m3 y4^m4 is d^a1 * I_d(m2+a2, m3+a3, m4+a4)
  // / (m2! m3! m4!) with a_l the multiplicity of l in {i,j,k}.  Any
  // index 0 gives the zero series.
  Series gamma_third_derivative(int i, int j, int k) const;

  QuantumElement basis_element(int i) const {
    return QuantumElement::basis(trunc_, i);
  }

  // Constant part of the product (degree-0 three-point values only).
  QuantumElement stringy_product(int i, int j) const;

  // Full product of two basis classes.
  QuantumElement quantum_product(int i, int j) const;

  // Bilinear extension.
  QuantumElement product(const QuantumElement& a,
                         const QuantumElement& b) const;

  // (T_i * T_j) * T_k - T_i * (T_j * T_k); identically zero if and only
  // if the computed invariants satisfy WDVV at this truncation.
  QuantumElement associativity_residual(int i, int j, int k) const;

  // Left minus right side of one of the four potential identities the
  // recursions are read off from (which = 1..4, matching the engine's
  // recursion numbering).  Zero series = identity holds on the box.
  Series relation_residual_series(int which) const;

  // A single coefficient of that residual.  The monomial must lie in
  // this algebra's truncation box.
  Rational relation_residual(int which, const Monomial& m) const;

 private:
  Rational three_point(int i, int j, int k) const;

  const Engine* engine_;
  TruncationOrder trunc_;
  mutable std::map<std::array<int, 3>, Series> gamma_cache_;
  mutable std::map<std::array<int, 2>, QuantumElement> product_cache_;
};

// Re-derives the coupling constant from the lowest-order coefficient
// identity of the third potential relation in degree 1:
//   delta (1/2 + 2 lambda) I_1(2,delta,0)
//     = 2 delta I_1(2,delta+1,1) - I_1(3,delta+2,0).
// Always -1/4 for every geometry; a vanishing I_1(2,delta,0) would make
// the equation degenerate and raises VerificationError.
Rational derive_lambda(const Engine& engine);

}  // namespace rootstack
