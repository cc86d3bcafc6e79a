#include "jjrb/jj_algebra.hpp"

#include "jjrb/error.hpp"

namespace jjrb {

void JJAlgebra::set_product(std::size_t i, std::size_t j, const Vec& value) {
  if (i >= dim_ || j >= dim_ || value.size() != dim_)
    fail(ErrorKind::DimensionMismatch, "set_product out of range");
  for (std::size_t k = 0; k < dim_; ++k) {
    set_constant(i, j, k, value[k]);
    set_constant(j, i, k, value[k]);
  }
}

Vec JJAlgebra::basis_vector(std::size_t i) const {
  Vec v = zero_vec(dim_);
  v[i] = Rational(1);
  return v;
}

Vec JJAlgebra::product_of_basis(std::size_t i, std::size_t j) const {
  Vec v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
  return v;
}

Vec multiply(const JJAlgebra& a, const Vec& x, const Vec& y) {
  std::size_t n = a.dim();
  if (x.size() != n || y.size() != n)
    fail(ErrorKind::DimensionMismatch, "multiply operand size mismatch");
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += xy * a.c(i, j, k);
    }
  }
  return out;
}

Matrix left_multiplication(const JJAlgebra& a, const Vec& x) {
  std::size_t n = a.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, multiply(a, x, a.basis_vector(j)));
  return m;
}

AxiomReport check_jj_axioms(const JJAlgebra& a) {
  AxiomReport report;
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n && report.commutative; ++i) {
    for (std::size_t j = i + 1; j < n && report.commutative; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (a.c(i, j, k) != a.c(j, i, k)) {
          report.commutative = false;
          report.commutative_witness = {{i, j}};
          break;
        }
      }
    }
  }
  // The cyclic sum is symmetric under permutations of (i, j, l) only when the
  // product commutes, so restrict to i <= j <= l just in the commutative case.
  for (std::size_t i = 0; i < n && report.jacobi; ++i) {
    std::size_t jlo = report.commutative ? i : 0;
    for (std::size_t j = jlo; j < n && report.jacobi; ++j) {
      std::size_t llo = report.commutative ? j : 0;
      for (std::size_t l = llo; l < n; ++l) {
        Vec s = multiply(a, a.product_of_basis(i, j), a.basis_vector(l));
        s = add_vec(s, multiply(a, a.product_of_basis(j, l), a.basis_vector(i)));
        s = add_vec(s, multiply(a, a.product_of_basis(l, i), a.basis_vector(j)));
        if (!is_zero_vec(s)) {
          report.jacobi = false;
          report.jacobi_witness = {{i, j, l}};
          break;
        }
      }
    }
  }
  return report;
}

bool check_morphism(const AlgebraMorphism& phi) {
  std::size_t n = phi.source.dim();
  if (phi.map.cols() != n || phi.map.rows() != phi.target.dim())
    fail(ErrorKind::DimensionMismatch, "morphism matrix shape mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Vec lhs = phi.map.apply(phi.source.product_of_basis(i, j));
      Vec rhs = multiply(phi.target, phi.map.column(i), phi.map.column(j));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool is_subalgebra(const JJAlgebra& a, const SubspaceBasis& span) {
  if (span.ambient_dim() != a.dim())
    fail(ErrorKind::DimensionMismatch, "subspace ambient dimension mismatch");
  const auto& vs = span.vectors();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i; j < vs.size(); ++j) {
      if (!span.contains(multiply(a, vs[i], vs[j]))) return false;
    }
  }
  return true;
}

}  // namespace jjrb
