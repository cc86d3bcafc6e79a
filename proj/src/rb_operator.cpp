#include "jjrb/rb_operator.hpp"

#include "jjrb/error.hpp"

namespace jjrb {

namespace {

void require_shapes(const RBOperator& r) {
  if (!r.op.is_square() || r.op.rows() != r.algebra.dim())
    fail(ErrorKind::DimensionMismatch, "operator matrix must be n x n for an n-dim algebra");
}

void require_valid(const RBOperator& r, const char* what) {
  require_shapes(r);
  if (!check_rb(r).ok)
    fail(ErrorKind::NotRotaBaxter, std::string(what) + " requires a valid Rota-Baxter operator");
}

}  // namespace

CheckRBResult check_rb(const RBOperator& r) {
  require_shapes(r);
  const JJAlgebra& a = r.algebra;
  std::size_t n = a.dim();
  CheckRBResult result;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Vec Ii = r.op.column(i);
      Vec Ij = r.op.column(j);
      Vec lhs = multiply(a, Ii, Ij);
      Vec inner = add_vec(multiply(a, Ii, a.basis_vector(j)), multiply(a, a.basis_vector(i), Ij));
      inner = add_vec(inner, scale_vec(r.weight, a.product_of_basis(i, j)));
      Vec rhs = r.op.apply(inner);
      if (lhs != rhs) {
        result.ok = false;
        result.witness = {{i, j}};
        return result;
      }
    }
  }
  return result;
}

JJAlgebra derived_algebra_raw(const JJAlgebra& a, const Rational& weight, const Matrix& op) {
  std::size_t n = a.dim();
  JJAlgebra out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Vec v = add_vec(multiply(a, op.column(i), a.basis_vector(j)),
                      multiply(a, a.basis_vector(i), op.column(j)));
      v = add_vec(v, scale_vec(weight, a.product_of_basis(i, j)));
      out.set_product(i, j, v);
    }
  }
  return out;
}

JJAlgebra derived_algebra(const RBOperator& r) {
  require_valid(r, "derived_algebra");
  return derived_algebra_raw(r.algebra, r.weight, r.op);
}

RBOperator scale_rb(const RBOperator& r, const Rational& mu) {
  require_valid(r, "scale_rb");
  return RBOperator{r.algebra, mu * r.weight, r.op.scaled(mu)};
}

RBOperator conjugate_rb(const RBOperator& r, const AlgebraMorphism& psi) {
  require_shapes(r);
  if (!(psi.source == r.algebra) || !(psi.target == r.algebra))
    fail(ErrorKind::NotAutomorphism, "psi must be a self-map of the operator's algebra");
  auto inv = psi.map.inverse();
  if (!inv) fail(ErrorKind::NotAutomorphism, "psi is singular");
  if (!check_morphism(psi)) fail(ErrorKind::NotAutomorphism, "psi is not multiplicative");
  return RBOperator{r.algebra, r.weight, (*inv) * r.op * psi.map};
}

RBOperator reflect_rb(const RBOperator& r) {
  require_valid(r, "reflect_rb");
  Matrix m = Matrix::identity(r.algebra.dim()).scaled(-r.weight) - r.op;
  return RBOperator{r.algebra, r.weight, std::move(m)};
}

std::string PolySystem::var_name(std::size_t v) const {
  return "x_{" + std::to_string(v / dim) + "," + std::to_string(v % dim) + "}";
}

std::string PolySystem::to_text() const {
  std::string out;
  for (const Poly& p : polys) {
    out += p.to_string([this](std::size_t v) { return var_name(v); });
    out += "\n";
  }
  return out;
}

PolySystem rb_constraint_system(const JJAlgebra& a, const Rational& lambda) {
  if (!check_jj_axioms(a).ok())
    fail(ErrorKind::AxiomViolation, "constraint system requires a Jacobi-Jordan algebra");
  std::size_t n = a.dim();
  PolySystem sys;
  sys.dim = n;
  sys.num_vars = n * n;
  auto entry = [n](std::size_t r, std::size_t c) { return Poly::var(r * n + c); };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      // w_t = coordinate t of I(e_i)*e_j + e_i*I(e_j) + lambda e_i*e_j,
      // linear in the unknowns.
      std::vector<Poly> w(n);
      for (std::size_t t = 0; t < n; ++t) {
        Poly acc = Poly::constant(lambda * a.c(i, j, t));
        for (std::size_t r = 0; r < n; ++r) {
          Rational coef = a.c(r, j, t);
          if (!coef.is_zero()) acc = acc + entry(r, i).scaled(coef);
          coef = a.c(i, r, t);
          if (!coef.is_zero()) acc = acc + entry(r, j).scaled(coef);
        }
        w[t] = std::move(acc);
      }
      for (std::size_t k = 0; k < n; ++k) {
        // LHS_k = sum_{r,s} x_{r,i} x_{s,j} c[r][s][k]
        Poly p;
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t s = 0; s < n; ++s) {
            const Rational& coef = a.c(r, s, k);
            if (!coef.is_zero()) p = p + (entry(r, i) * entry(s, j)).scaled(coef);
          }
        }
        // minus I(w)_k = sum_t x_{k,t} w_t
        for (std::size_t t = 0; t < n; ++t) {
          if (!w[t].is_zero()) p = p - entry(k, t) * w[t];
        }
        if (!p.is_zero()) {
          sys.polys.push_back(std::move(p));
          sys.sources.push_back({{i, j, k}});
        }
      }
    }
  }
  return sys;
}

std::vector<Rational> eval_constraints(const PolySystem& s, const std::vector<Rational>& assignment) {
  if (assignment.size() != s.num_vars)
    fail(ErrorKind::DimensionMismatch, "assignment length must equal num_vars");
  std::vector<Rational> out;
  out.reserve(s.polys.size());
  for (const Poly& p : s.polys) out.push_back(p.eval(assignment));
  return out;
}

bool is_quasi_idempotent(const RBOperator& r) {
  require_shapes(r);
  return (r.op * r.op) == (-r.op);
}

bool check_quasi_idempotent_identity(const RBOperator& r) {
  if (!is_quasi_idempotent(r))
    fail(ErrorKind::HypothesisNotMet, "operator is not quasi-idempotent (I^2 != -I)");
  SubspaceBasis image = image_basis(r.op);
  const auto& vs = image.vectors();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i; j < vs.size(); ++j) {
      Vec lhs = multiply(r.algebra, r.op.apply(vs[i]), r.op.apply(vs[j]));
      Vec rhs = scale_vec(-r.weight, r.op.apply(multiply(r.algebra, vs[i], vs[j])));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace jjrb
