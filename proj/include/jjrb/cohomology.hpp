#ifndef JJRB_COHOMOLOGY_HPP
#define JJRB_COHOMOLOGY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "jjrb/matrix.hpp"
#include "jjrb/representation.hpp"

namespace jjrb {

/// Degree-n multilinear map A^(x n) -> V as the dense tensor of its values on
/// basis tuples: coeffs[flat(i_1..i_n, a)] with
///   flat(i_1..i_n, a) = ((i_1 * n_A + i_2) * n_A + ...) * m + a.
/// Degree 0 is a single vector in V.
struct Cochain {
  std::size_t degree = 0;
  std::size_t algebra_dim = 0;  // n_A
  std::size_t value_dim = 0;    // m
  std::vector<Rational> coeffs;

  static Cochain zero(std::size_t degree, std::size_t algebra_dim, std::size_t value_dim);
  static Cochain from_vector(const Vec& v, std::size_t algebra_dim);
  /// Degree-1 cochain from the m x n matrix with column i = f(e_i).
  static Cochain from_matrix(const Matrix& f);

  std::size_t flat(const std::vector<std::size_t>& idx, std::size_t a) const;
  Vec value(const std::vector<std::size_t>& idx) const;
  void set_value(const std::vector<std::size_t>& idx, const Vec& v);

  /// Degree-1 cochain as the m x n matrix with column i = f(e_i).
  Matrix as_matrix() const;

  bool is_zero() const;
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree == b.degree && a.algebra_dim == b.algebra_dim &&
           a.value_dim == b.value_dim && a.coeffs == b.coeffs;
  }
};

/// Zigzag differential
///   d^n f(x_1..x_{n+1}) = sum_i rho(x_i) f(.., x_i omitted, ..)
///                       + sum_{i<j} f(x_i*x_j, .., x_i and x_j omitted, ..),
/// the inserted product taking the first slot. delta^n flips the sign of the
/// product-insertion sum. Implemented for every degree.
Cochain d_n(const Representation& r, const Cochain& f);
Cochain delta_n(const Representation& r, const Cochain& f);

/// The same differentials over the derived algebra A_I with the tilde action
/// tilde_rho(x) = rho(Ix) - T rho(x).
Cochain d_tilde_n(const RBRepresentation& rr, const Cochain& f);
Cochain delta_tilde_n(const RBRepresentation& rr, const Cochain& f);

/// Matrix of d^degree (resp. delta^degree) from C^degree to C^(degree+1) in
/// the tensor coordinates of Cochain; for the tilde variants pass
/// tilde_rep(rr).rep.
Matrix assemble_d(const Representation& r, std::size_t degree);
Matrix assemble_delta(const Representation& r, std::size_t degree);

/// Comparison maps between the two complexes, defined in degrees 0 and 1
/// (UnsupportedDegree beyond): degree 0 is the identity; degree 1 sends f to
/// f o I - T o f (phi1) or f o I + T o f (phi2). They satisfy
/// d_tilde^0 o phi2^0 = phi1^1 o delta^0.
Cochain phi1(const RBRepresentation& rr, const Cochain& f);
Cochain phi2(const RBRepresentation& rr, const Cochain& f);

/// Degree-1 cochain of the Rota-Baxter complex: a pair of a degree-1 cochain
/// on (A, V) and a degree-0 cochain (vector) on (A_I, tilde V).
struct RBCochain1 {
  Cochain f;  // degree 1
  Vec g;
};

/// Degree-2 image of the Rota-Baxter differential: pair in C^2(A,V) + C^1(A_I, tilde V).
struct RBCochain2 {
  Cochain f;  // degree 2
  Cochain g;  // degree 1 over the derived algebra
};

/// d_RB^0(v) = (d^0 v, -v) and delta_RB^0(v) = (delta^0 v, -v) on C^0_RB = V.
RBCochain1 d_rb0(const RBRepresentation& rr, const Vec& v);
RBCochain1 delta_rb0(const RBRepresentation& rr, const Vec& v);

/// d_RB^1(f, g) = (d^1 f, -d_tilde^0 g - phi1^1(f)); kills exactly the
/// antiderivation pairs, and d_RB^1 o delta_RB^0 = 0.
RBCochain2 d_rb1(const RBRepresentation& rr, const RBCochain1& c);

/// Flattening order of RB cochain coordinates: f-block first (its tensor
/// order), then g-block. Fixed so kernel/image bases are reproducible.
Vec flatten(const RBCochain1& c);
Vec flatten(const RBCochain2& c);

/// Assembled matrices of the low-degree RB differentials acting on the
/// flattened coordinates.
Matrix assemble_d_rb0(const RBRepresentation& rr);      // (nm + m) x m
Matrix assemble_delta_rb0(const RBRepresentation& rr);  // (nm + m) x m
Matrix assemble_d_rb1(const RBRepresentation& rr);      // (n^2 m + nm) x (nm + m)

/// Antiderivation pair (eta, v): eta an m x n matrix (column i = eta(e_i))
/// with eta(x*y) = -rho(x)eta(y) - rho(y)eta(x) and
/// eta(Ix) - T eta(x) = T(rho(x)v) - rho(Ix)v. Equivalent to d_rb1 vanishing
/// on the pair.
bool is_antiderivation(const RBRepresentation& rr, const Matrix& eta, const Vec& v);

/// The inner antiderivation (D_v, -v), D_v(x) = rho(x)v.
std::pair<Matrix, Vec> inner_antiderivation(const RBRepresentation& rr, const Vec& v);

struct CohomologyReport {
  std::size_t degree = 0;
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::size_t dim_cohomology = 0;
  SubspaceBasis cocycle_basis;
  SubspaceBasis coboundary_basis;
  SubspaceBasis representative_basis;
};

/// Exact Rota-Baxter cohomology in degree 0 or 1 (UnsupportedDegree beyond;
/// the complex is defined only in low degrees). Degree 0 is always zero;
/// degree 1 is antiderivations modulo inner antiderivations. Requires a fully
/// valid RB representation (PrerequisiteFailed otherwise).
CohomologyReport cohomology_rb(const RBRepresentation& rr, std::size_t degree);

/// Cocycle/coboundary bases of degree 1, i.e. the antiderivation space and
/// the inner antiderivation space over the flattened (eta, v) coordinates.
SubspaceBasis ader_basis(const RBRepresentation& rr);
SubspaceBasis innader_basis(const RBRepresentation& rr);

}  // namespace jjrb

#endif
