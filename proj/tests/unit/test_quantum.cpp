#include "doctest.h"
#include "rootstack/quantum.hpp"

using namespace rootstack;

namespace {

struct Fixture {
  MemoStore store;
  GeometryConfig cfg;
  Engine engine;
  TruncationOrder trunc;
  QuantumAlgebra algebra;

  Fixture(int delta, int q_max, int y_max)
      : cfg(delta),
        engine(cfg, store),
        trunc(q_max, y_max),
        algebra(engine, trunc) {}
};

}  // namespace

TEST_CASE("classical third derivatives: table constants plus coupling terms") {
  Fixture f(2, 1, 2);
  const Series d133 = f.algebra.classical_third_derivative(1, 3, 3);
  CHECK(d133 == Series::constant(f.trunc, Rational(1)));  // delta/2 = 1

  const Series d333 = f.algebra.classical_third_derivative(3, 3, 3);
  CHECK(d333.coefficient(Monomial{0, 0, 0, 1}) == Rational(-1, 4));
  CHECK(d333.terms().size() == 1);

  const Series d334 = f.algebra.classical_third_derivative(3, 3, 4);
  CHECK(d334.coefficient(Monomial{0, 0, 1, 0}) == Rational(-1, 4));
  CHECK(d334.terms().size() == 1);  // I_0(T3 T3 T4) itself is 0

  const Series d034 = f.algebra.classical_third_derivative(0, 3, 4);
  CHECK(d034 == Series::constant(f.trunc, Rational(1, 2)));

  CHECK(f.algebra.classical_third_derivative(0, 2, 2).is_zero());
  // Symmetry in the indices.
  CHECK(f.algebra.classical_third_derivative(4, 3, 3) == d334);
}

TEST_CASE("positive-degree third derivatives of the potential") {
  Fixture f(3, 1, 3);
  const Series g221 = f.algebra.gamma_third_derivative(2, 2, 1);
  // Q^1 y3^3 carries 1 * I_1(2,3,0) / 3! = 6/6.
  CHECK(g221.coefficient(Monomial{1, 0, 3, 0}) == Rational(1));

  // Any index 0 differentiates the potential by the unit direction: zero.
  CHECK(f.algebra.gamma_third_derivative(0, 2, 2).is_zero());
  CHECK(f.algebra.gamma_third_derivative(2, 0, 2).is_zero());

  // Symmetric under permutations of the indices.
  CHECK(f.algebra.gamma_third_derivative(1, 2, 2) == g221);
  CHECK(f.algebra.gamma_third_derivative(2, 1, 2) == g221);
}

TEST_CASE("constant part of the product matches the three-point table") {
  Fixture f(4, 1, 2);
  const QuantumElement t33 = f.algebra.stringy_product(3, 3);
  CHECK(t33.comp(1).coefficient(Monomial{}) == Rational(2));  // delta/2
  for (int c : {0, 2, 3, 4}) CHECK(t33.comp(c).is_zero());

  CHECK(f.algebra.stringy_product(3, 2).is_zero());
  CHECK(f.algebra.stringy_product(0, 4) == f.algebra.basis_element(4));

  const QuantumElement t34 = f.algebra.stringy_product(3, 4);
  CHECK(t34.comp(2).coefficient(Monomial{}) == Rational(1, 2));
}

TEST_CASE("unit axiom holds exactly for the full product") {
  Fixture f(1, 1, 3);
  for (int i = 0; i < 5; ++i) {
    CHECK(f.algebra.quantum_product(0, i) == f.algebra.basis_element(i));
    CHECK(f.algebra.quantum_product(i, 0) == f.algebra.basis_element(i));
  }
  // Bilinear extension keeps the axiom for composite elements.
  QuantumElement x = f.algebra.basis_element(2);
  x += f.algebra.basis_element(4);
  x.comp(1).add_term(Monomial{1, 1, 0, 0}, Rational(3, 2));
  CHECK(f.algebra.product(f.algebra.basis_element(0), x) == x);
}

TEST_CASE("the product is commutative") {
  Fixture f(3, 1, 3);
  for (int i = 0; i < 5; ++i)
    for (int j = i; j < 5; ++j)
      CHECK(f.algebra.quantum_product(i, j) == f.algebra.quantum_product(j, i));
}

TEST_CASE("constant terms of the product on the twisted sector") {
  Fixture f(2, 1, 2);
  CHECK(f.algebra.quantum_product(3, 3).comp(1).coefficient(Monomial{}) ==
        Rational(1));  // delta/2 with delta = 2
  CHECK(f.algebra.quantum_product(3, 4).comp(2).coefficient(Monomial{}) ==
        Rational(1, 2));
}

TEST_CASE("associativity residuals vanish") {
  Fixture f(1, 2, 4);
  CHECK(f.algebra.associativity_residual(0, 3, 4).is_zero());
  CHECK(f.algebra.associativity_residual(3, 3, 4).is_zero());
  CHECK(f.algebra.associativity_residual(1, 1, 2).is_zero());
  CHECK(f.algebra.associativity_residual(2, 4, 4).is_zero());
}

TEST_CASE("potential relations hold coefficientwise") {
  Fixture conic(2, 1, 6);
  CHECK(conic.algebra.relation_residual(4, Monomial{1, 2, 2, 0}) ==
        Rational(0));
  CHECK(conic.algebra.relation_residual_series(4).is_zero());

  Fixture line(1, 1, 4);
  CHECK(line.algebra.relation_residual(2, Monomial{1, 0, 0, 3}) ==
        Rational(0));
  for (int which = 1; which <= 4; ++which)
    CHECK(line.algebra.relation_residual_series(which).is_zero());

  CHECK_THROWS_AS(line.algebra.relation_residual(2, Monomial{5, 0, 0, 0}),
                  UsageError);  // outside the box
  CHECK_THROWS_AS(line.algebra.relation_residual(0, Monomial{1, 0, 0, 0}),
                  UsageError);  // no such relation
}

TEST_CASE("the coupling constant re-derives to -1/4 for every geometry") {
  for (int delta = 1; delta <= 3; ++delta) {
    MemoStore store;
    Engine engine(GeometryConfig(delta), store);
    CHECK(derive_lambda(engine) == Rational(-1, 4));
  }
  CHECK(QuantumAlgebra::lambda() == Rational(-1, 4));
}
