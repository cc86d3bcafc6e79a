#ifndef JJRB_REPRESENTATION_HPP
#define JJRB_REPRESENTATION_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "jjrb/jj_algebra.hpp"
#include "jjrb/matrix.hpp"
#include "jjrb/rb_operator.hpp"

namespace jjrb {

/// Linear action rho of a Jacobi-Jordan algebra on Q^dim_v. Validity means
/// rho(x*y) = -rho(x)rho(y) - rho(y)rho(x); check_representation verifies it.
struct Representation {
  JJAlgebra algebra;
  std::size_t dim_v = 0;
  std::vector<Matrix> action;  // action[i] = rho(e_i), each dim_v x dim_v
};

/// A representation of a weighted Rota-Baxter algebra (A, I): the base action
/// plus T on V with rho(Ix) T = T(rho(Ix) + rho(x) T + lambda rho(x)).
struct RBRepresentation {
  Representation rep;
  RBOperator rb;   // shares rep.algebra and carries the weight
  Matrix t_op;     // dim_v x dim_v
};

/// rho(x) for a coordinate vector x, by linearity.
Matrix action_of(const Representation& r, const Vec& x);

struct CheckRepResult {
  bool ok = true;
  std::optional<std::array<std::size_t, 2>> witness;  // 0-based basis indices
  explicit operator bool() const { return ok; }
};

/// Anticommutator identity on all basis pairs.
CheckRepResult check_representation(const Representation& r);

/// Compatibility of T with I on basis x and basis u. Requires the base
/// representation and operator to be valid (PrerequisiteFailed otherwise).
CheckRepResult check_rb_representation(const RBRepresentation& rr);

/// The same compatibility identity with no validity prerequisites; used for
/// the paired-operator characterization.
CheckRepResult rb_compat_identity(const Representation& rep, const Rational& lambda,
                                  const Matrix& op, const Matrix& t_op);

/// Adjoint action rho(e_i) = L_{e_i}. Requires the Jacobi-Jordan axioms.
Representation adjoint_rep(const JJAlgebra& a);
RBRepresentation adjoint_rb_rep(const RBOperator& r);

/// Block-diagonal sum over a shared Rota-Baxter algebra (MixedBase otherwise).
RBRepresentation direct_sum(const std::vector<RBRepresentation>& parts);

/// Representation on gl(V) (dimension m^2, basis matrices E_ab flattened
/// row-major): hat_rho(x) f = sign * (f o rho(x)) and hat_T(f) = -lambda f -
/// f o T. Sign +1 satisfies the representation axiom whenever the base does;
/// sign -1 in general does not (it fails whenever rho is nonzero on products).
RBRepresentation hat_gl_rep(const RBRepresentation& rr, int sign = +1);

/// Dual representation rho*(x) = rho(x)^T, T* = -T^T; defined for weight 0
/// only (NonzeroWeight otherwise).
RBRepresentation dual_rep(const RBRepresentation& rr);

/// Representation bar_rho(x) = rho(Ix) + rho(x)T + lambda rho(x) of the
/// derived algebra (A_I, I), with the same T. For the adjoint input this is
/// the adjoint representation of (A_I, I).
RBRepresentation bar_rep(const RBRepresentation& rr);

/// Representation tilde_rho(x) = rho(Ix) - T rho(x) of (A_I, I); the
/// coefficient representation of the operator's own cochain complex.
RBRepresentation tilde_rep(const RBRepresentation& rr);

/// (V, -lambda id - T) over (A, -lambda id - I).
RBRepresentation reflect_rep(const RBRepresentation& rr);

/// Semidirect-product algebra on A + V: (x,u)*(y,v) = (x*y, rho(x)v + rho(y)u).
/// Raw construction; validity of the result is equivalent to validity of rho.
JJAlgebra semidirect_algebra(const Representation& rep);

/// The operator I + T (block diagonal) on the semidirect product algebra.
/// check_rb on the result holds iff rr is a valid RB representation.
RBOperator semidirect_product(const RBRepresentation& rr);

/// Doubled algebra on A + A: (x,x')*(y,y') = (x*y, x*y' + x'*y + lambda x'*y').
JJAlgebra doubling(const JJAlgebra& a, const Rational& lambda);

/// The doubling product as displayed in the source material, with its
/// repeated term (x*y' twice and no x'*y); not commutative. Kept for the
/// discrepancy report.
JJAlgebra doubling_literal_display(const JJAlgebra& a, const Rational& lambda);

/// Representation of the doubling on V + V:
/// rho_l(x,y)(u,v) = (rho(x)u, rho(x)v + rho(y)u + lambda rho(y)v).
Representation doubled_rep(const Representation& r, const Rational& lambda);

/// Jacobi-Jordan algebra on A + A + V + V combining the doubling with the
/// doubled representation action. Requires a valid representation.
JJAlgebra quadruple_semidirect(const Representation& r, const Rational& lambda);

struct PairedReport {
  bool paired = false;            // both defining identities hold
  bool graph_subalgebra = false;  // graph of (I, T) closed in the quadruple algebra
};

/// Paired-operator check for arbitrary candidate maps I on A and T on V,
/// computed twice: directly from the identities, and via closure of
/// {(I x, x, T u, u)} inside quadruple_semidirect. The two routes agree.
PairedReport check_paired(const Representation& rep, const Rational& lambda,
                          const Matrix& op, const Matrix& t_op);

}  // namespace jjrb

#endif
