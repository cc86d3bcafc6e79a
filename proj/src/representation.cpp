#include "jjrb/representation.hpp"

#include "jjrb/error.hpp"

namespace jjrb {

namespace {

void require_shapes(const Representation& r) {
  if (r.action.size() != r.algebra.dim())
    fail(ErrorKind::DimensionMismatch, "need one action matrix per basis vector");
  for (const Matrix& m : r.action) {
    if (m.rows() != r.dim_v || m.cols() != r.dim_v)
      fail(ErrorKind::DimensionMismatch, "action matrices must be dim_v x dim_v");
  }
}

void require_shapes(const RBRepresentation& rr) {
  require_shapes(rr.rep);
  if (!(rr.rep.algebra == rr.rb.algebra))
    fail(ErrorKind::MixedBase, "representation and operator live on different algebras");
  if (!rr.rb.op.is_square() || rr.rb.op.rows() != rr.rb.algebra.dim())
    fail(ErrorKind::DimensionMismatch, "operator matrix must be n x n");
  if (rr.t_op.rows() != rr.rep.dim_v || rr.t_op.cols() != rr.rep.dim_v)
    fail(ErrorKind::DimensionMismatch, "t_op must be dim_v x dim_v");
}

void require_valid(const RBRepresentation& rr, const char* what) {
  require_shapes(rr);
  if (!check_rb(rr.rb).ok)
    fail(ErrorKind::NotRotaBaxter, std::string(what) + " requires a valid Rota-Baxter operator");
  if (!check_representation(rr.rep).ok)
    fail(ErrorKind::PrerequisiteFailed, std::string(what) + " requires a valid representation");
  if (!rb_compat_identity(rr.rep, rr.rb.weight, rr.rb.op, rr.t_op).ok)
    fail(ErrorKind::PrerequisiteFailed,
         std::string(what) + " requires T to be compatible with the operator");
}

/// Builds the matrix of f -> transform(f) on gl(V), with gl(V) coordinates
/// given by the row-major flattening of m x m matrices.
template <typename Fn>
Matrix gl_matrix(std::size_t m, Fn&& transform) {
  Matrix out(m * m, m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      Matrix basis(m, m);
      basis.at(a, b) = Rational(1);
      Matrix image = transform(basis);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) out.at(r * m + c, a * m + b) = image.at(r, c);
    }
  }
  return out;
}

}  // namespace

Matrix action_of(const Representation& r, const Vec& x) {
  if (x.size() != r.algebra.dim()) fail(ErrorKind::DimensionMismatch, "coordinate length mismatch");
  Matrix out(r.dim_v, r.dim_v);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) out = out + r.action[i].scaled(x[i]);
  }
  return out;
}

CheckRepResult check_representation(const Representation& r) {
  require_shapes(r);
  std::size_t n = r.algebra.dim();
  CheckRepResult result;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Matrix lhs = action_of(r, r.algebra.product_of_basis(i, j));
      Matrix rhs = -(r.action[i] * r.action[j] + r.action[j] * r.action[i]);
      if (!(lhs == rhs)) {
        result.ok = false;
        result.witness = {{i, j}};
        return result;
      }
    }
  }
  return result;
}

CheckRepResult rb_compat_identity(const Representation& rep, const Rational& lambda,
                                  const Matrix& op, const Matrix& t_op) {
  std::size_t n = rep.algebra.dim();
  CheckRepResult result;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix rho_Ix = action_of(rep, op.column(i));
    Matrix lhs = rho_Ix * t_op;
    Matrix rhs = t_op * (rho_Ix + rep.action[i] * t_op + rep.action[i].scaled(lambda));
    if (lhs == rhs) continue;
    result.ok = false;
    // witness: (basis x index, first carrier basis vector where the sides differ)
    for (std::size_t u = 0; u < rep.dim_v; ++u) {
      if (lhs.column(u) != rhs.column(u)) {
        result.witness = {{i, u}};
        break;
      }
    }
    return result;
  }
  return result;
}

CheckRepResult check_rb_representation(const RBRepresentation& rr) {
  require_shapes(rr);
  if (!check_representation(rr.rep).ok)
    fail(ErrorKind::PrerequisiteFailed, "base representation axiom fails");
  if (!check_rb(rr.rb).ok)
    fail(ErrorKind::PrerequisiteFailed, "base operator is not Rota-Baxter");
  return rb_compat_identity(rr.rep, rr.rb.weight, rr.rb.op, rr.t_op);
}

Representation adjoint_rep(const JJAlgebra& a) {
  if (!check_jj_axioms(a).ok())
    fail(ErrorKind::AxiomViolation, "adjoint representation requires a Jacobi-Jordan algebra");
  Representation r{a, a.dim(), {}};
  r.action.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    r.action.push_back(left_multiplication(a, a.basis_vector(i)));
  return r;
}

RBRepresentation adjoint_rb_rep(const RBOperator& r) {
  if (!check_rb(r).ok) fail(ErrorKind::NotRotaBaxter, "adjoint_rb_rep requires check_rb");
  return RBRepresentation{adjoint_rep(r.algebra), r, r.op};
}

RBRepresentation direct_sum(const std::vector<RBRepresentation>& parts) {
  if (parts.empty()) fail(ErrorKind::DimensionMismatch, "direct_sum of no summands");
  for (const auto& p : parts) require_shapes(p);
  const RBOperator& base = parts.front().rb;
  for (const auto& p : parts) {
    if (!(p.rb.algebra == base.algebra) || p.rb.weight != base.weight || !(p.rb.op == base.op))
      fail(ErrorKind::MixedBase, "summands must share one Rota-Baxter algebra");
  }
  std::size_t n = base.algebra.dim();
  RBRepresentation out{Representation{base.algebra, 0, {}}, base, Matrix(0, 0)};
  out.rep.action.assign(n, Matrix(0, 0));
  for (const auto& p : parts) {
    out.rep.dim_v += p.rep.dim_v;
    for (std::size_t i = 0; i < n; ++i)
      out.rep.action[i] = Matrix::block_diag(out.rep.action[i], p.rep.action[i]);
    out.t_op = Matrix::block_diag(out.t_op, p.t_op);
  }
  return out;
}

RBRepresentation hat_gl_rep(const RBRepresentation& rr, int sign) {
  require_shapes(rr);
  std::size_t m = rr.rep.dim_v;
  Rational s(sign);
  Representation hat{rr.rb.algebra, m * m, {}};
  hat.action.reserve(rr.rep.algebra.dim());
  for (std::size_t i = 0; i < rr.rep.algebra.dim(); ++i) {
    const Matrix& rho_i = rr.rep.action[i];
    hat.action.push_back(gl_matrix(m, [&](const Matrix& f) { return (f * rho_i).scaled(s); }));
  }
  Matrix hat_t = gl_matrix(
      m, [&](const Matrix& f) { return f.scaled(-rr.rb.weight) - f * rr.t_op; });
  return RBRepresentation{std::move(hat), rr.rb, std::move(hat_t)};
}

RBRepresentation dual_rep(const RBRepresentation& rr) {
  require_shapes(rr);
  if (!rr.rb.weight.is_zero())
    fail(ErrorKind::NonzeroWeight, "dual representation is defined for weight 0 only");
  Representation dual{rr.rb.algebra, rr.rep.dim_v, {}};
  dual.action.reserve(rr.rep.action.size());
  for (const Matrix& m : rr.rep.action) dual.action.push_back(m.transpose());
  return RBRepresentation{std::move(dual), rr.rb, -rr.t_op.transpose()};
}

RBRepresentation bar_rep(const RBRepresentation& rr) {
  require_valid(rr, "bar_rep");
  JJAlgebra derived = derived_algebra(rr.rb);
  Representation bar{derived, rr.rep.dim_v, {}};
  for (std::size_t i = 0; i < rr.rep.algebra.dim(); ++i) {
    Matrix m = action_of(rr.rep, rr.rb.op.column(i)) + rr.rep.action[i] * rr.t_op +
               rr.rep.action[i].scaled(rr.rb.weight);
    bar.action.push_back(std::move(m));
  }
  RBOperator derived_rb{derived, rr.rb.weight, rr.rb.op};
  return RBRepresentation{std::move(bar), std::move(derived_rb), rr.t_op};
}

RBRepresentation tilde_rep(const RBRepresentation& rr) {
  require_valid(rr, "tilde_rep");
  JJAlgebra derived = derived_algebra(rr.rb);
  Representation tilde{derived, rr.rep.dim_v, {}};
  for (std::size_t i = 0; i < rr.rep.algebra.dim(); ++i) {
    Matrix m = action_of(rr.rep, rr.rb.op.column(i)) - rr.t_op * rr.rep.action[i];
    tilde.action.push_back(std::move(m));
  }
  RBOperator derived_rb{derived, rr.rb.weight, rr.rb.op};
  return RBRepresentation{std::move(tilde), std::move(derived_rb), rr.t_op};
}

RBRepresentation reflect_rep(const RBRepresentation& rr) {
  require_valid(rr, "reflect_rep");
  Matrix t = Matrix::identity(rr.rep.dim_v).scaled(-rr.rb.weight) - rr.t_op;
  return RBRepresentation{rr.rep, reflect_rb(rr.rb), std::move(t)};
}

JJAlgebra semidirect_algebra(const Representation& rep) {
  require_shapes(rep);
  std::size_t n = rep.algebra.dim();
  std::size_t m = rep.dim_v;
  JJAlgebra out(n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Vec v = zero_vec(n + m);
      for (std::size_t k = 0; k < n; ++k) v[k] = rep.algebra.c(i, j, k);
      out.set_product(i, j, v);
    }
    // (e_i, 0) * (0, f_b) = (0, rho(e_i) f_b)
    for (std::size_t b = 0; b < m; ++b) {
      Vec v = zero_vec(n + m);
      for (std::size_t r = 0; r < m; ++r) v[n + r] = rep.action[i].at(r, b);
      out.set_product(i, n + b, v);
    }
  }
  return out;
}

RBOperator semidirect_product(const RBRepresentation& rr) {
  require_shapes(rr);
  return RBOperator{semidirect_algebra(rr.rep), rr.rb.weight,
                    Matrix::block_diag(rr.rb.op, rr.t_op)};
}

JJAlgebra doubling(const JJAlgebra& a, const Rational& lambda) {
  if (!check_jj_axioms(a).ok())
    fail(ErrorKind::AxiomViolation, "doubling requires a Jacobi-Jordan algebra");
  std::size_t n = a.dim();
  JJAlgebra out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& coef = a.c(i, j, k);
        if (coef.is_zero()) continue;
        out.set_constant(i, j, k, coef);                       // (x,0)*(y,0) -> (x*y, 0)
        out.set_constant(i, j + n, k + n, coef);               // x * y'
        out.set_constant(i + n, j, k + n, coef);               // x' * y
        out.set_constant(i + n, j + n, k + n, lambda * coef);  // lambda x' * y'
      }
    }
  }
  return out;
}

JJAlgebra doubling_literal_display(const JJAlgebra& a, const Rational& lambda) {
  std::size_t n = a.dim();
  JJAlgebra out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& coef = a.c(i, j, k);
        if (coef.is_zero()) continue;
        out.set_constant(i, j, k, coef);
        out.set_constant(i, j + n, k + n, Rational(2) * coef);  // the displayed x*y' + x*y'
        out.set_constant(i + n, j + n, k + n, lambda * coef);
      }
    }
  }
  return out;
}

Representation doubled_rep(const Representation& r, const Rational& lambda) {
  require_shapes(r);
  if (!check_representation(r).ok)
    fail(ErrorKind::AxiomViolation, "doubled_rep requires a valid representation");
  std::size_t n = r.algebra.dim();
  std::size_t m = r.dim_v;
  Representation out{doubling(r.algebra, lambda), 2 * m, {}};
  out.action.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix mat(2 * m, 2 * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        mat.at(a, b) = r.action[i].at(a, b);
        mat.at(m + a, m + b) = r.action[i].at(a, b);
      }
    out.action.push_back(std::move(mat));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Matrix mat(2 * m, 2 * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        mat.at(m + a, b) = r.action[i].at(a, b);
        mat.at(m + a, m + b) = lambda * r.action[i].at(a, b);
      }
    out.action.push_back(std::move(mat));
  }
  return out;
}

JJAlgebra quadruple_semidirect(const Representation& r, const Rational& lambda) {
  require_shapes(r);
  if (!check_jj_axioms(r.algebra).ok())
    fail(ErrorKind::AxiomViolation, "quadruple_semidirect requires a Jacobi-Jordan algebra");
  if (!check_representation(r).ok)
    fail(ErrorKind::AxiomViolation, "quadruple_semidirect requires a valid representation");
  std::size_t n = r.algebra.dim();
  std::size_t m = r.dim_v;
  // Slot layout: [A, A', V, V'].
  std::size_t N = 2 * n + 2 * m;
  JJAlgebra out(N);
  auto add_sym = [&out](std::size_t i, std::size_t j, std::size_t k, const Rational& coef) {
    if (coef.is_zero()) return;
    out.set_constant(i, j, k, out.c(i, j, k) + coef);
    if (i != j) out.set_constant(j, i, k, out.c(j, i, k) + coef);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& coef = r.algebra.c(i, j, k);
        if (coef.is_zero()) continue;
        if (j >= i) add_sym(i, j, k, coef);                     // x*y
        add_sym(i, j + n, k + n, coef);                         // x*y' (+ mirrored x'*y)
        if (j >= i) add_sym(i + n, j + n, k + n, lambda * coef);  // lambda x'*y'
      }
    }
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t a = 0; a < m; ++a) {
        const Rational& coef = r.action[i].at(a, b);
        if (coef.is_zero()) continue;
        add_sym(i, 2 * n + b, 2 * n + a, coef);            // rho(x)v into V
        add_sym(i, 2 * n + m + b, 2 * n + m + a, coef);    // rho(x)v' into V'
        add_sym(i + n, 2 * n + b, 2 * n + m + a, coef);    // rho(x')v into V'
        add_sym(i + n, 2 * n + m + b, 2 * n + m + a, lambda * coef);  // lambda rho(x')v'
      }
    }
  }
  return out;
}

PairedReport check_paired(const Representation& rep, const Rational& lambda, const Matrix& op,
                          const Matrix& t_op) {
  require_shapes(rep);
  if (!check_representation(rep).ok)
    fail(ErrorKind::PrerequisiteFailed, "check_paired requires a valid representation");
  std::size_t n = rep.algebra.dim();
  std::size_t m = rep.dim_v;
  if (!op.is_square() || op.rows() != n || t_op.rows() != m || t_op.cols() != m)
    fail(ErrorKind::DimensionMismatch, "check_paired operand shapes");

  PairedReport report;
  RBOperator cand{rep.algebra, lambda, op};
  report.paired = check_rb(cand).ok && rb_compat_identity(rep, lambda, op, t_op).ok;

  JJAlgebra quad = quadruple_semidirect(rep, lambda);
  std::vector<Vec> graph;
  for (std::size_t i = 0; i < n; ++i) {
    Vec v = zero_vec(2 * n + 2 * m);
    for (std::size_t r = 0; r < n; ++r) v[r] = op.at(r, i);
    v[n + i] = Rational(1);
    graph.push_back(std::move(v));
  }
  for (std::size_t a = 0; a < m; ++a) {
    Vec v = zero_vec(2 * n + 2 * m);
    for (std::size_t r = 0; r < m; ++r) v[2 * n + r] = t_op.at(r, a);
    v[2 * n + m + a] = Rational(1);
    graph.push_back(std::move(v));
  }
  report.graph_subalgebra =
      is_subalgebra(quad, SubspaceBasis::span_of(2 * n + 2 * m, graph));
  return report;
}

}  // namespace jjrb
