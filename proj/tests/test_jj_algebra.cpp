#include <doctest.h>

#include "jjrb/error.hpp"
#include "jjrb/jj_algebra.hpp"
#include "jjrb/rb_operator.hpp"
#include "test_helpers.hpp"

using namespace jjrb;
using namespace jjrb::test;

TEST_CASE("multiply: bilinear extension of the structure constants") {
  const JJAlgebra& a = dim2_algebra();
  CHECK(multiply(a, vec({1, 0}), vec({1, 0})) == vec({0, 1}));  // e1*e1 = e2
  CHECK(multiply(a, vec({1, 0}), vec({0, 0})) == vec({0, 0}));
  CHECK(multiply(a, vec({0, 1}), vec({0, 1})) == vec({0, 0}));

  const JJAlgebra& b = dim3_algebra();
  CHECK(multiply(b, vec({1, 1, 0}), vec({1, 1, 0})) == vec({0, 0, 2}));  // (e1+e2)^2 = 2 e3

  CHECK_THROWS_AS(multiply(a, vec({1, 0, 0}), vec({1, 0})), Error);
}

TEST_CASE("multiply is symmetric and bilinear on random vectors") {
  DetRng rng(21);
  for (const char* id : {"dim2", "dim3", "dim4-G", "dim4-H"}) {
    const JJAlgebra& a = catalog_get(id).algebra;
    for (int trial = 0; trial < 20; ++trial) {
      Vec x = random_vec(rng, a.dim()), y = random_vec(rng, a.dim()),
          z = random_vec(rng, a.dim());
      Rational s = rng.sample_scalar();
      CHECK(multiply(a, x, y) == multiply(a, y, x));
      CHECK(multiply(a, add_vec(x, scale_vec(s, z)), y) ==
            add_vec(multiply(a, x, y), scale_vec(s, multiply(a, z, y))));
    }
  }
}

TEST_CASE("axiom checker on named algebras") {
  CHECK(check_jj_axioms(dim4G_algebra()).ok());
  CHECK(check_jj_axioms(dim4H_algebra()).ok());
  CHECK(check_jj_axioms(zero_algebra(3)).ok());

  // e2*e2 = e2 violates the Jacobi identity: the cyclic sum at (e2,e2,e2) is 3 e2.
  JJAlgebra bad(2);
  Vec e2 = vec({0, 1});
  bad.set_product(1, 1, e2);
  AxiomReport rep = check_jj_axioms(bad);
  CHECK(rep.commutative);
  CHECK_FALSE(rep.jacobi);
  REQUIRE(rep.jacobi_witness.has_value());
  CHECK(*rep.jacobi_witness == std::array<std::size_t, 3>{{1, 1, 1}});

  // asymmetric constants break commutativity
  JJAlgebra asym(2);
  asym.set_constant(0, 1, 0, Rational(1));
  AxiomReport rep2 = check_jj_axioms(asym);
  CHECK_FALSE(rep2.commutative);
  REQUIRE(rep2.commutative_witness.has_value());
  CHECK(*rep2.commutative_witness == std::array<std::size_t, 2>{{0, 1}});
}

TEST_CASE("axiom checker implies vanishing cyclic sums on random triples") {
  DetRng rng(22);
  for (const char* id : {"dim2", "dim3", "dim4-G", "dim4-H"}) {
    const JJAlgebra& a = catalog_get(id).algebra;
    REQUIRE(check_jj_axioms(a).ok());
    for (int trial = 0; trial < 100; ++trial) {
      Vec x = random_vec(rng, a.dim()), y = random_vec(rng, a.dim()),
          z = random_vec(rng, a.dim());
      Vec s = multiply(a, multiply(a, x, y), z);
      s = add_vec(s, multiply(a, multiply(a, y, z), x));
      s = add_vec(s, multiply(a, multiply(a, z, x), y));
      CHECK(is_zero_vec(s));
    }
  }
}

TEST_CASE("morphism checker") {
  const JJAlgebra& a = dim2_algebra();
  CHECK(check_morphism({a, a, Matrix::identity(2)}));
  CHECK(check_morphism({a, a, Matrix(2, 2)}));

  // I is multiplicative from the derived algebra to the base algebra
  RBOperator op{a, Rational(0), mat({{0, 0}, {1, 2}})};
  JJAlgebra derived = derived_algebra(op);
  CHECK(check_morphism({derived, a, op.op}));

  // psi(e1) = e1 + t e2 is an automorphism; psi(e1)*psi(e1) = e2 = psi(e2)
  CHECK(check_morphism({a, a, mat({{1, 0}, {7, 1}})}));
  // but scaling e1 alone is not
  CHECK_FALSE(check_morphism({a, a, mat({{2, 0}, {0, 1}})}));

  CHECK_THROWS_AS(check_morphism({a, a, Matrix(3, 2)}), Error);
}

TEST_CASE("is_subalgebra") {
  const JJAlgebra& a = dim2_algebra();
  CHECK(is_subalgebra(a, SubspaceBasis::span_of(2, {vec({1, 0}), vec({0, 1})})));
  CHECK(is_subalgebra(a, SubspaceBasis(2)));
  CHECK(is_subalgebra(a, SubspaceBasis::span_of(2, {vec({0, 1})})));   // span(e2) is closed
  CHECK_FALSE(is_subalgebra(a, SubspaceBasis::span_of(2, {vec({1, 0})})));  // e1*e1 = e2 escapes
}

TEST_CASE("left multiplication matrices") {
  const JJAlgebra& a = dim2_algebra();
  CHECK(left_multiplication(a, vec({0, 0})) == Matrix(2, 2));
  CHECK(left_multiplication(a, vec({1, 0})) == mat({{0, 0}, {1, 0}}));

  const JJAlgebra& b = dim3_algebra();
  // L_x = [[0,0,0],[0,0,0],[x2,x1,0]] for x = x1 e1 + x2 e2 + x3 e3
  Vec x = {q(5), q(7), q(11)};
  CHECK(left_multiplication(b, x) == mat({{0, 0, 0}, {0, 0, 0}, {7, 5, 0}}));

  DetRng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Vec u = random_vec(rng, 3), v = random_vec(rng, 3);
    CHECK(left_multiplication(b, u).apply(v) == multiply(b, u, v));
  }
}
