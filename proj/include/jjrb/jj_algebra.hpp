#ifndef JJRB_JJ_ALGEBRA_HPP
#define JJRB_JJ_ALGEBRA_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "jjrb/matrix.hpp"
#include "jjrb/rational.hpp"

namespace jjrb {

/// Commutative algebra given by structure constants c[i][j][k], meaning
/// e_i * e_j = sum_k c[i][j][k] e_k. The container itself does not enforce
/// the Jacobi-Jordan axioms; check_jj_axioms does.
class JJAlgebra {
 public:
  explicit JJAlgebra(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// Sets e_i * e_j = value and mirrors it to (j, i).
  void set_product(std::size_t i, std::size_t j, const Vec& value);
  /// Sets the single constant c[i][j][k] without mirroring.
  void set_constant(std::size_t i, std::size_t j, std::size_t k, Rational value) {
    c_[(i * dim_ + j) * dim_ + k] = std::move(value);
  }

  Vec basis_vector(std::size_t i) const;
  Vec product_of_basis(std::size_t i, std::size_t j) const;

  friend bool operator==(const JJAlgebra& a, const JJAlgebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

 private:
  std::size_t dim_;
  std::vector<Rational> c_;
};

/// Bilinear extension of the structure constants: (x*y)_k = sum x_i y_j c[i][j][k].
Vec multiply(const JJAlgebra& a, const Vec& x, const Vec& y);

/// Matrix of L_x: y -> x*y; column j is multiply(a, x, e_j).
Matrix left_multiplication(const JJAlgebra& a, const Vec& x);

struct AxiomReport {
  bool commutative = true;
  bool jacobi = true;
  // First failing basis tuple, when any: (i, j) for commutativity, (i, j, l)
  // for the Jacobi identity. 0-based.
  std::optional<std::array<std::size_t, 2>> commutative_witness;
  std::optional<std::array<std::size_t, 3>> jacobi_witness;
  bool ok() const { return commutative && jacobi; }
};

/// Checks x*y = y*x and (x*y)*z + (y*z)*x + (z*x)*y = 0 on basis tuples;
/// multilinearity makes that sufficient.
AxiomReport check_jj_axioms(const JJAlgebra& a);

struct AlgebraMorphism {
  JJAlgebra source;
  JJAlgebra target;
  Matrix map;  // columns = images of source basis vectors
};

/// True iff map(e_i * e_j) = map(e_i) *' map(e_j) for all basis pairs.
bool check_morphism(const AlgebraMorphism& phi);

/// True iff the span is closed under the product of a.
bool is_subalgebra(const JJAlgebra& a, const SubspaceBasis& span);

}  // namespace jjrb

#endif
