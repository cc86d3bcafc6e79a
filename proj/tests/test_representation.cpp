#include <doctest.h>

#include "jjrb/error.hpp"
#include "jjrb/representation.hpp"
#include "test_helpers.hpp"

using namespace jjrb;
using namespace jjrb::test;

namespace {

RBRepresentation dim2_canonical_rr() {
  return adjoint_rb_rep(canonical_instance(catalog_get("dim2")));
}

/// 3-dim module of the 2-dim algebra with rho(e1) = shift, rho(e2) = -2 shift^2;
/// faithful on the product e1*e1, unlike the adjoint action.
RBRepresentation dim2_faithful_rr() {
  Matrix shift(3, 3);
  shift.at(1, 0) = Rational(1);
  shift.at(2, 1) = Rational(1);
  Representation rep{dim2_algebra(), 3, {shift, (shift * shift).scaled(Rational(-2))}};
  return RBRepresentation{std::move(rep), canonical_instance(catalog_get("dim2")), Matrix(3, 3)};
}

}  // namespace

TEST_CASE("check_representation") {
  for (const char* id : {"dim2", "dim3", "dim4-G", "dim4-H"}) {
    const JJAlgebra& a = catalog_get(id).algebra;
    CHECK(check_representation(adjoint_rep(a)).ok);
    CHECK(check_representation({a, 3, std::vector<Matrix>(a.dim(), Matrix(3, 3))}).ok);
  }

  Representation bad{dim2_algebra(), 2, {Matrix::identity(2), Matrix(2, 2)}};
  CheckRepResult res = check_representation(bad);
  CHECK_FALSE(res.ok);
  REQUIRE(res.witness.has_value());
  CHECK(*res.witness == std::array<std::size_t, 2>{{0, 0}});

  CHECK(check_representation(dim2_faithful_rr().rep).ok);
}

TEST_CASE("check_rb_representation") {
  CHECK(check_rb_representation(dim2_canonical_rr()).ok);
  CHECK(check_rb_representation(dim2_faithful_rr()).ok);

  // (V, id) over (A, id) at weight -1
  const JJAlgebra& a = dim2_algebra();
  RBRepresentation identity_pair{adjoint_rep(a), {a, q(-1), Matrix::identity(2)},
                                 Matrix::identity(2)};
  CHECK(check_rb_representation(identity_pair).ok);

  // T = id is not compatible with I = [[0,0],[1,2]] at weight 0
  RBRepresentation bad{adjoint_rep(a), {a, q(0), mat({{0, 0}, {1, 2}})}, Matrix::identity(2)};
  CheckRepResult res = check_rb_representation(bad);
  CHECK_FALSE(res.ok);
  REQUIRE(res.witness.has_value());
  CHECK(*res.witness == std::array<std::size_t, 2>{{0, 0}});

  // prerequisite failures raise instead of silently reporting
  RBRepresentation broken_op{adjoint_rep(a), {a, q(0), mat({{1, 0}, {0, 0}})},
                             Matrix(2, 2)};
  CHECK_THROWS_AS(check_rb_representation(broken_op), Error);
}

TEST_CASE("adjoint representations") {
  Representation adj = adjoint_rep(dim2_algebra());
  CHECK(adj.action[0] == mat({{0, 0}, {1, 0}}));
  CHECK(adj.action[1] == Matrix(2, 2));

  Representation adj3 = adjoint_rep(dim3_algebra());
  CHECK(adj3.action[0].apply(vec({0, 1, 0})) == vec({0, 0, 1}));  // rho(e1) e2 = e3

  JJAlgebra bad(2);
  bad.set_product(1, 1, vec({0, 1}));
  CHECK_THROWS_AS(adjoint_rep(bad), Error);
}

TEST_CASE("direct sums") {
  RBRepresentation rr = dim2_canonical_rr();

  RBRepresentation one = direct_sum({rr});
  CHECK(one.rep.dim_v == rr.rep.dim_v);
  CHECK(one.rep.action[0] == rr.rep.action[0]);
  CHECK(one.t_op == rr.t_op);

  RBRepresentation two = direct_sum({rr, rr});
  CHECK(two.rep.dim_v == 4);
  CHECK(check_representation(two.rep).ok);
  CHECK(check_rb_representation(two).ok);

  RBRepresentation zero_part{{rr.rb.algebra, 2, {Matrix(2, 2), Matrix(2, 2)}}, rr.rb, Matrix(2, 2)};
  RBRepresentation mixed = direct_sum({rr, zero_part});
  CHECK(check_rb_representation(mixed).ok);

  RBRepresentation other{rr.rep, {rr.rb.algebra, q(1), Matrix::identity(2).scaled(q(-1))},
                         Matrix::identity(2).scaled(q(-1))};
  CHECK_THROWS_AS(direct_sum({rr, other}), Error);  // weights differ
}

TEST_CASE("gl(V) representation: corrected sign works, displayed sign fails on a faithful module") {
  RBRepresentation rr = dim2_canonical_rr();

  // On the adjoint module the action kills all products, so both signs pass.
  CHECK(check_representation(hat_gl_rep(rr, +1).rep).ok);
  CHECK(check_representation(hat_gl_rep(rr, -1).rep).ok);
  CHECK(check_rb_representation(hat_gl_rep(rr, +1)).ok);

  // The faithful module separates the signs.
  RBRepresentation faithful = dim2_faithful_rr();
  RBRepresentation hat_plus = hat_gl_rep(faithful, +1);
  CHECK(check_representation(hat_plus.rep).ok);
  CHECK(check_rb_representation(hat_plus).ok);

  RBRepresentation hat_minus = hat_gl_rep(faithful, -1);
  CheckRepResult res = check_representation(hat_minus.rep);
  CHECK_FALSE(res.ok);
  REQUIRE(res.witness.has_value());
  CHECK(*res.witness == std::array<std::size_t, 2>{{0, 0}});
  // the compatibility identity alone holds for either sign
  CHECK(rb_compat_identity(hat_minus.rep, faithful.rb.weight,
                           faithful.rb.op, hat_minus.t_op).ok);
}

TEST_CASE("gl(V) representation on a 1-dim module reduces to scalars") {
  const JJAlgebra& a = dim2_algebra();
  // rho = 0 on a 1-dim space; T = [3]; I the canonical operator, weight 0
  Representation rep{a, 1, {Matrix(1, 1), Matrix(1, 1)}};
  Matrix t(1, 1);
  t.at(0, 0) = q(3);
  RBRepresentation rr{rep, canonical_instance(catalog_get("dim2")), t};
  REQUIRE(check_rb_representation(rr).ok);
  RBRepresentation hat = hat_gl_rep(rr, +1);
  CHECK(hat.rep.dim_v == 1);
  CHECK(hat.rep.action[0] == Matrix(1, 1));
  CHECK(hat.t_op.at(0, 0) == -q(3));  // -lambda - T at lambda = 0
}

TEST_CASE("dual representation at weight zero") {
  RBRepresentation rr = dim2_canonical_rr();
  RBRepresentation dual = dual_rep(rr);
  CHECK(dual.rep.action[0] == rr.rep.action[0].transpose());
  CHECK(dual.t_op == -rr.t_op.transpose());
  CHECK(check_representation(dual.rep).ok);
  CHECK(check_rb_representation(dual).ok);

  // a module with symmetric action matrices is fixed by dualization (up to
  // the sign of T)
  const JJAlgebra& a2 = dim2_algebra();
  RBRepresentation sym{{a2, 2, {Matrix(2, 2), Matrix(2, 2)}},
                       canonical_instance(catalog_get("dim2")),
                       Matrix::identity(2)};
  REQUIRE(check_rb_representation(sym).ok);
  RBRepresentation sym_dual = dual_rep(sym);
  CHECK(sym_dual.rep.action == sym.rep.action);
  CHECK(sym_dual.t_op == -sym.t_op);

  const JJAlgebra& a = dim2_algebra();
  RBRepresentation weighted{adjoint_rep(a), {a, q(-1), Matrix::identity(2)},
                            Matrix::identity(2)};
  CHECK_THROWS_AS(dual_rep(weighted), Error);
}

TEST_CASE("bar representation") {
  // I = 0, T = 0 at weight 0: everything collapses
  const JJAlgebra& a = dim2_algebra();
  RBRepresentation trivial{adjoint_rep(a), {a, q(0), Matrix(2, 2)}, Matrix(2, 2)};
  RBRepresentation bar0 = bar_rep(trivial);
  CHECK(bar0.rep.action[0].is_zero());
  CHECK(bar0.rep.action[1].is_zero());

  // for the adjoint input, bar is the adjoint representation of (A_I, I)
  for (const CatalogEntry& entry : catalog_entries()) {
    RBRepresentation rr = adjoint_rb_rep(canonical_instance(entry));
    RBRepresentation bar = bar_rep(rr);
    Representation derived_adj = adjoint_rep(bar.rb.algebra);
    for (std::size_t i = 0; i < entry.algebra.dim(); ++i)
      CHECK(bar.rep.action[i] == derived_adj.action[i]);
    CHECK(check_representation(bar.rep).ok);
    CHECK(check_rb_representation(bar).ok);
    // T-intertwining: T bar_rho(x) = rho(Ix) T
    for (std::size_t i = 0; i < entry.algebra.dim(); ++i) {
      CHECK(rr.t_op * bar.rep.action[i] ==
            action_of(rr.rep, rr.rb.op.column(i)) * rr.t_op);
    }
  }
}

TEST_CASE("tilde representation") {
  const JJAlgebra& a = dim2_algebra();
  RBRepresentation trivial{adjoint_rep(a), {a, q(0), Matrix(2, 2)}, Matrix(2, 2)};
  CHECK(tilde_rep(trivial).rep.action[0].is_zero());

  // lambda = -1, I = id, T = id: tilde rho = rho - rho = 0
  RBRepresentation identity_pair{adjoint_rep(a), {a, q(-1), Matrix::identity(2)},
                                 Matrix::identity(2)};
  RBRepresentation cancel = tilde_rep(identity_pair);
  CHECK(cancel.rep.action[0].is_zero());
  CHECK(cancel.rep.action[1].is_zero());

  for (const CatalogEntry& entry : catalog_entries()) {
    RBRepresentation rr = adjoint_rb_rep(canonical_instance(entry));
    RBRepresentation tilde = tilde_rep(rr);
    for (std::size_t i = 0; i < entry.algebra.dim(); ++i) {
      CHECK(tilde.rep.action[i] ==
            action_of(rr.rep, rr.rb.op.column(i)) - rr.t_op * rr.rep.action[i]);
    }
    CHECK(check_representation(tilde.rep).ok);
    CHECK(check_rb_representation(tilde).ok);
  }
}

TEST_CASE("reflected representation") {
  for (const CatalogEntry& entry : catalog_entries()) {
    RBRepresentation rr = adjoint_rb_rep(canonical_instance(entry));
    RBRepresentation refl = reflect_rep(rr);
    CHECK(check_rb(refl.rb).ok);
    CHECK(check_rb_representation(refl).ok);
    RBRepresentation twice = reflect_rep(refl);
    CHECK(twice.rb.op == rr.rb.op);
    CHECK(twice.t_op == rr.t_op);
  }
}

TEST_CASE("semidirect product") {
  RBRepresentation rr = dim2_canonical_rr();
  RBOperator sd = semidirect_product(rr);
  CHECK(sd.algebra.dim() == 4);
  CHECK(check_jj_axioms(sd.algebra).ok());
  CHECK(check_rb(sd).ok);

  // V = 0 gives back the algebra itself
  Representation empty{dim2_algebra(), 0, {Matrix(0, 0), Matrix(0, 0)}};
  CHECK(semidirect_algebra(empty) == dim2_algebra());

  // corrupting T breaks the semidirect operator exactly when compatibility breaks
  RBRepresentation corrupted = rr;
  corrupted.t_op.at(0, 0) += q(1);
  bool compat = rb_compat_identity(corrupted.rep, corrupted.rb.weight, corrupted.rb.op,
                                   corrupted.t_op).ok;
  CHECK_FALSE(compat);
  CHECK_FALSE(check_rb(semidirect_product(corrupted)).ok);
}

TEST_CASE("semidirect converse on random candidates") {
  DetRng rng(41);
  for (const CatalogEntry& entry : catalog_entries()) {
    Representation adj = adjoint_rep(entry.algebra);
    std::size_t n = entry.algebra.dim();
    for (int trial = 0; trial < 50; ++trial) {
      RBOperator base = canonical_instance(entry);
      Matrix t = base.op;
      if (rng.below(2)) base.op.at(rng.below(n), rng.below(n)) += rng.sample_scalar();
      if (rng.below(2)) t.at(rng.below(n), rng.below(n)) += rng.sample_scalar();
      bool direct = check_rb(base).ok &&
                    rb_compat_identity(adj, base.weight, base.op, t).ok;
      RBOperator sd = semidirect_product({adj, base, t});
      bool via_sd = check_jj_axioms(sd.algebra).ok() && check_rb(sd).ok;
      CHECK(direct == via_sd);
    }
  }
}

TEST_CASE("doubling and the doubled representation") {
  const JJAlgebra& a = dim2_algebra();

  JJAlgebra dbl0 = doubling(a, q(0));
  // (x,0)*(y,0) = (x*y, 0)
  CHECK(dbl0.product_of_basis(0, 0) == vec({0, 1, 0, 0}));
  CHECK(check_jj_axioms(dbl0).ok());

  JJAlgebra dbl1 = doubling(a, q(1));
  CHECK(check_jj_axioms(dbl1).ok());
  // second components: (x,0)*(0,y) = (0, x*y), (0,x)*(0,y) = (0, lambda x*y)
  CHECK(dbl1.product_of_basis(0, 2) == vec({0, 0, 0, 1}));
  CHECK(dbl1.product_of_basis(2, 2) == vec({0, 0, 0, 1}));

  Representation dr = doubled_rep(adjoint_rep(a), q(1));
  CHECK(dr.dim_v == 4);
  CHECK(check_representation(dr).ok);

  // the displayed doubling with the repeated term is not even commutative
  AxiomReport literal = check_jj_axioms(doubling_literal_display(a, q(1)));
  CHECK_FALSE(literal.commutative);
}

TEST_CASE("quadruple semidirect algebra") {
  const JJAlgebra& a = dim2_algebra();
  Representation adj = adjoint_rep(a);

  JJAlgebra quad = quadruple_semidirect(adj, q(1));
  CHECK(quad.dim() == 8);
  CHECK(check_jj_axioms(quad).ok());

  // V = 0 reduces to the doubling
  Representation empty{a, 0, {Matrix(0, 0), Matrix(0, 0)}};
  CHECK(quadruple_semidirect(empty, q(1)) == doubling(a, q(1)));

  // zero algebra and zero module give the zero algebra
  JJAlgebra flat = zero_algebra(1);
  Representation zrep{flat, 1, {Matrix(1, 1)}};
  CHECK(quadruple_semidirect(zrep, q(0)) == zero_algebra(4));

  for (const CatalogEntry& entry : catalog_entries()) {
    Representation ad = adjoint_rep(entry.algebra);
    CHECK(check_jj_axioms(quadruple_semidirect(ad, canonical_instance(entry).weight)).ok());
  }
}

TEST_CASE("paired operators") {
  const JJAlgebra& a = dim2_algebra();
  Representation adj = adjoint_rep(a);

  PairedReport id_pair = check_paired(adj, q(-1), Matrix::identity(2), Matrix::identity(2));
  CHECK(id_pair.paired);
  CHECK(id_pair.graph_subalgebra);

  PairedReport zero_pair = check_paired(adj, q(2), Matrix(2, 2), Matrix(2, 2));
  CHECK(zero_pair.paired);
  CHECK(zero_pair.graph_subalgebra);

  Matrix good = mat({{0, 0}, {1, 1}});
  PairedReport corrupted = check_paired(adj, q(0), good, Matrix::identity(2));
  CHECK_FALSE(corrupted.paired);
  CHECK_FALSE(corrupted.graph_subalgebra);

  Representation bad{a, 2, {Matrix::identity(2), Matrix(2, 2)}};
  CHECK_THROWS_AS(check_paired(bad, q(0), good, good), Error);
}

TEST_CASE("paired equivalence and graph characterization on random candidates") {
  DetRng rng(42);
  for (const CatalogEntry& entry : catalog_entries()) {
    Representation adj = adjoint_rep(entry.algebra);
    std::size_t n = entry.algebra.dim();
    for (int trial = 0; trial < 50; ++trial) {
      RBOperator base = canonical_instance(entry);
      Matrix t = base.op;
      if (rng.below(2)) base.op.at(rng.below(n), rng.below(n)) += rng.sample_scalar();
      if (rng.below(2)) t.at(rng.below(n), rng.below(n)) += rng.sample_scalar();
      bool direct = check_rb(base).ok &&
                    rb_compat_identity(adj, base.weight, base.op, t).ok;
      PairedReport rep = check_paired(adj, base.weight, base.op, t);
      CHECK(rep.paired == direct);
      CHECK(rep.graph_subalgebra == rep.paired);
    }
  }
}
