#ifndef JJRB_RB_OPERATOR_HPP
#define JJRB_RB_OPERATOR_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jjrb/jj_algebra.hpp"
#include "jjrb/matrix.hpp"
#include "jjrb/poly.hpp"

namespace jjrb {

/// A candidate weighted Rota-Baxter operator: linear self-map I (columns =
/// images of basis vectors) on a Jacobi-Jordan algebra, with weight lambda.
/// Validity means I(x)*I(y) = I(I(x)*y + x*I(y) + lambda x*y) for all x, y.
struct RBOperator {
  JJAlgebra algebra;
  Rational weight;
  Matrix op;
};

struct CheckRBResult {
  bool ok = true;
  std::optional<std::array<std::size_t, 2>> witness;  // first failing basis pair, 0-based
  explicit operator bool() const { return ok; }
};

/// Verifies the weighted Rota-Baxter identity on basis pairs i <= j
/// (commutativity of the product makes that sufficient).
CheckRBResult check_rb(const RBOperator& r);

/// Structure constants of x *_I y := I(x)*y + x*I(y) + lambda(x*y) on the
/// same space. Requires check_rb (NotRotaBaxter otherwise); the result is
/// again Jacobi-Jordan and (A_I, I) is a Rota-Baxter algebra of the same
/// weight.
JJAlgebra derived_algebra(const RBOperator& r);

/// Raw derived product, no validity requirement on I (used by checkers).
JJAlgebra derived_algebra_raw(const JJAlgebra& a, const Rational& weight, const Matrix& op);

/// (A, mu*I) with weight mu*lambda.
RBOperator scale_rb(const RBOperator& r, const Rational& mu);

/// (A, psi^-1 o I o psi) for an automorphism psi (NotAutomorphism otherwise).
RBOperator conjugate_rb(const RBOperator& r, const AlgebraMorphism& psi);

/// (A, -lambda id - I), same weight; an involution on valid operators.
RBOperator reflect_rb(const RBOperator& r);

/// Quadratic constraint system in the n^2 unknown entries of a candidate
/// operator: solutions are exactly the weight-lambda Rota-Baxter operators.
struct PolySystem {
  std::size_t dim = 0;       // algebra dimension n
  std::size_t num_vars = 0;  // n^2; variable r*n + c is entry (row r, col c)
  std::vector<Poly> polys;
  std::vector<std::array<std::size_t, 3>> sources;  // (i, j, k) per retained poly

  std::string var_name(std::size_t v) const;
  /// One polynomial per line in canonical term order.
  std::string to_text() const;
};

/// Emits, for each basis pair i <= j and coordinate k, the k-th coordinate of
/// I(e_i)*I(e_j) - I(I(e_i)*e_j + e_i*I(e_j) + lambda e_i*e_j) as a polynomial
/// in the unknown entries. Identically zero polynomials are dropped; the
/// remaining ones are listed pair-lexicographically, then by coordinate.
/// Requires a to pass check_jj_axioms (AxiomViolation otherwise).
PolySystem rb_constraint_system(const JJAlgebra& a, const Rational& lambda);

/// Residuals of the system at the given entry assignment (length num_vars,
/// ordered row-major). All zero iff the assembled matrix passes check_rb.
std::vector<Rational> eval_constraints(const PolySystem& s, const std::vector<Rational>& assignment);

/// True iff I*I = -I as matrices.
bool is_quasi_idempotent(const RBOperator& r);

/// Under the hypothesis I^2 = -I (HypothesisNotMet otherwise), reports whether
/// I(x)*I(y) = -lambda I(x*y) holds for x, y ranging over a basis of Im(I).
bool check_quasi_idempotent_identity(const RBOperator& r);

}  // namespace jjrb

#endif
