#include "jjrb/cohomology.hpp"

#include <algorithm>

#include "jjrb/error.hpp"

namespace jjrb {

namespace {

std::size_t pow_size(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

/// Iterates all tuples in {0..n-1}^len in lexicographic order.
bool next_tuple(std::vector<std::size_t>& idx, std::size_t n) {
  for (std::size_t pos = idx.size(); pos-- > 0;) {
    if (++idx[pos] < n) return true;
    idx[pos] = 0;
  }
  return false;
}

void require_compatible(const Representation& r, const Cochain& f) {
  if (f.algebra_dim != r.algebra.dim() || f.value_dim != r.dim_v)
    fail(ErrorKind::ShapeMismatch, "cochain shape does not match the representation");
}

enum class Variant { Plus, Minus };

Cochain differential(const Representation& r, const Cochain& f, Variant variant) {
  require_compatible(r, f);
  std::size_t n = r.algebra.dim();
  Cochain out = Cochain::zero(f.degree + 1, n, f.value_dim);
  if (n == 0) return out;
  Rational insert_sign(variant == Variant::Plus ? 1 : -1);
  std::vector<std::size_t> idx(f.degree + 1, 0);
  do {
    Vec acc = zero_vec(f.value_dim);
    // sum_i rho(x_i) f(.., x_i omitted, ..)
    for (std::size_t a = 0; a <= f.degree; ++a) {
      std::vector<std::size_t> rest;
      rest.reserve(f.degree);
      for (std::size_t p = 0; p <= f.degree; ++p)
        if (p != a) rest.push_back(idx[p]);
      acc = add_vec(acc, r.action[idx[a]].apply(f.value(rest)));
    }
    // sum_{a<b} f(x_a * x_b, .., x_a and x_b omitted, ..)
    for (std::size_t a = 0; a <= f.degree; ++a) {
      for (std::size_t b = a + 1; b <= f.degree; ++b) {
        std::vector<std::size_t> rest(1, 0);
        for (std::size_t p = 0; p <= f.degree; ++p)
          if (p != a && p != b) rest.push_back(idx[p]);
        for (std::size_t k = 0; k < n; ++k) {
          const Rational& coef = r.algebra.c(idx[a], idx[b], k);
          if (coef.is_zero()) continue;
          rest[0] = k;
          acc = add_vec(acc, scale_vec(insert_sign * coef, f.value(rest)));
        }
      }
    }
    out.set_value(idx, acc);
  } while (next_tuple(idx, n));
  return out;
}

Representation tilde_coefficients(const RBRepresentation& rr) { return tilde_rep(rr).rep; }

}  // namespace

Cochain Cochain::zero(std::size_t degree, std::size_t algebra_dim, std::size_t value_dim) {
  Cochain c;
  c.degree = degree;
  c.algebra_dim = algebra_dim;
  c.value_dim = value_dim;
  c.coeffs.assign(pow_size(algebra_dim, degree) * value_dim, Rational(0));
  return c;
}

Cochain Cochain::from_vector(const Vec& v, std::size_t algebra_dim) {
  Cochain c = zero(0, algebra_dim, v.size());
  c.coeffs = v;
  return c;
}

Cochain Cochain::from_matrix(const Matrix& f) {
  Cochain c = zero(1, f.cols(), f.rows());
  // column i of f is f(e_i); flat index i*m + a
  for (std::size_t i = 0; i < f.cols(); ++i)
    for (std::size_t a = 0; a < f.rows(); ++a) c.coeffs[i * f.rows() + a] = f.at(a, i);
  return c;
}

std::size_t Cochain::flat(const std::vector<std::size_t>& idx, std::size_t a) const {
  std::size_t out = 0;
  for (std::size_t i : idx) out = out * algebra_dim + i;
  return out * value_dim + a;
}

Vec Cochain::value(const std::vector<std::size_t>& idx) const {
  Vec v(value_dim);
  std::size_t base = flat(idx, 0);
  for (std::size_t a = 0; a < value_dim; ++a) v[a] = coeffs[base + a];
  return v;
}

void Cochain::set_value(const std::vector<std::size_t>& idx, const Vec& v) {
  std::size_t base = flat(idx, 0);
  for (std::size_t a = 0; a < value_dim; ++a) coeffs[base + a] = v[a];
}

Matrix Cochain::as_matrix() const {
  if (degree != 1) fail(ErrorKind::ShapeMismatch, "as_matrix needs a degree-1 cochain");
  Matrix m(value_dim, algebra_dim);
  for (std::size_t i = 0; i < algebra_dim; ++i)
    for (std::size_t a = 0; a < value_dim; ++a) m.at(a, i) = coeffs[i * value_dim + a];
  return m;
}

bool Cochain::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& x) { return x.is_zero(); });
}

Cochain d_n(const Representation& r, const Cochain& f) { return differential(r, f, Variant::Plus); }

Cochain delta_n(const Representation& r, const Cochain& f) {
  return differential(r, f, Variant::Minus);
}

Cochain d_tilde_n(const RBRepresentation& rr, const Cochain& f) {
  return differential(tilde_coefficients(rr), f, Variant::Plus);
}

Cochain delta_tilde_n(const RBRepresentation& rr, const Cochain& f) {
  return differential(tilde_coefficients(rr), f, Variant::Minus);
}

namespace {

Matrix assemble_differential(const Representation& r, std::size_t degree, Variant variant) {
  std::size_t n = r.algebra.dim();
  std::size_t domain = pow_size(n, degree) * r.dim_v;
  std::size_t range = pow_size(n, degree + 1) * r.dim_v;
  Matrix out(range, domain);
  for (std::size_t col = 0; col < domain; ++col) {
    Cochain basis = Cochain::zero(degree, n, r.dim_v);
    basis.coeffs[col] = Rational(1);
    out.set_column(col, differential(r, basis, variant).coeffs);
  }
  return out;
}

}  // namespace

Matrix assemble_d(const Representation& r, std::size_t degree) {
  return assemble_differential(r, degree, Variant::Plus);
}

Matrix assemble_delta(const Representation& r, std::size_t degree) {
  return assemble_differential(r, degree, Variant::Minus);
}

namespace {

Cochain phi_common(const RBRepresentation& rr, const Cochain& f, const Rational& t_sign) {
  if (f.degree == 0) return f;
  if (f.degree != 1)
    fail(ErrorKind::UnsupportedDegree, "comparison maps are defined in degrees 0 and 1 only");
  if (f.algebra_dim != rr.rb.algebra.dim() || f.value_dim != rr.rep.dim_v)
    fail(ErrorKind::ShapeMismatch, "cochain shape mismatch");
  Matrix m = f.as_matrix() * rr.rb.op + (rr.t_op * f.as_matrix()).scaled(t_sign);
  return Cochain::from_matrix(m);
}

}  // namespace

Cochain phi1(const RBRepresentation& rr, const Cochain& f) {
  return phi_common(rr, f, Rational(-1));
}

Cochain phi2(const RBRepresentation& rr, const Cochain& f) {
  return phi_common(rr, f, Rational(1));
}

RBCochain1 d_rb0(const RBRepresentation& rr, const Vec& v) {
  if (v.size() != rr.rep.dim_v) fail(ErrorKind::ShapeMismatch, "vector must lie in V");
  Cochain c0 = Cochain::from_vector(v, rr.rep.algebra.dim());
  return RBCochain1{d_n(rr.rep, c0), scale_vec(Rational(-1), v)};
}

RBCochain1 delta_rb0(const RBRepresentation& rr, const Vec& v) {
  if (v.size() != rr.rep.dim_v) fail(ErrorKind::ShapeMismatch, "vector must lie in V");
  Cochain c0 = Cochain::from_vector(v, rr.rep.algebra.dim());
  return RBCochain1{delta_n(rr.rep, c0), scale_vec(Rational(-1), v)};
}

RBCochain2 d_rb1(const RBRepresentation& rr, const RBCochain1& c) {
  if (c.f.degree != 1) fail(ErrorKind::ShapeMismatch, "d_rb1 needs a degree-1 pair");
  if (c.g.size() != rr.rep.dim_v) fail(ErrorKind::ShapeMismatch, "second component must lie in V");
  Cochain g0 = Cochain::from_vector(c.g, rr.rep.algebra.dim());
  Cochain second = d_tilde_n(rr, g0);
  Cochain correction = phi1(rr, c.f);
  for (std::size_t i = 0; i < second.coeffs.size(); ++i)
    second.coeffs[i] = -second.coeffs[i] - correction.coeffs[i];
  return RBCochain2{d_n(rr.rep, c.f), std::move(second)};
}

Vec flatten(const RBCochain1& c) {
  Vec out = c.f.coeffs;
  out.insert(out.end(), c.g.begin(), c.g.end());
  return out;
}

Vec flatten(const RBCochain2& c) {
  Vec out = c.f.coeffs;
  out.insert(out.end(), c.g.coeffs.begin(), c.g.coeffs.end());
  return out;
}

namespace {

Matrix assemble_degree0(const RBRepresentation& rr, bool use_delta) {
  std::size_t n = rr.rep.algebra.dim();
  std::size_t m = rr.rep.dim_v;
  Matrix out(n * m + m, m);
  for (std::size_t a = 0; a < m; ++a) {
    Vec v = zero_vec(m);
    v[a] = Rational(1);
    RBCochain1 img = use_delta ? delta_rb0(rr, v) : d_rb0(rr, v);
    out.set_column(a, flatten(img));
  }
  return out;
}

}  // namespace

Matrix assemble_d_rb0(const RBRepresentation& rr) { return assemble_degree0(rr, false); }

Matrix assemble_delta_rb0(const RBRepresentation& rr) { return assemble_degree0(rr, true); }

Matrix assemble_d_rb1(const RBRepresentation& rr) {
  std::size_t n = rr.rep.algebra.dim();
  std::size_t m = rr.rep.dim_v;
  std::size_t domain = n * m + m;
  Matrix out(n * n * m + n * m, domain);
  for (std::size_t col = 0; col < domain; ++col) {
    RBCochain1 basis{Cochain::zero(1, n, m), zero_vec(m)};
    if (col < n * m) {
      basis.f.coeffs[col] = Rational(1);
    } else {
      basis.g[col - n * m] = Rational(1);
    }
    out.set_column(col, flatten(d_rb1(rr, basis)));
  }
  return out;
}

bool is_antiderivation(const RBRepresentation& rr, const Matrix& eta, const Vec& v) {
  std::size_t n = rr.rep.algebra.dim();
  std::size_t m = rr.rep.dim_v;
  if (eta.rows() != m || eta.cols() != n || v.size() != m)
    fail(ErrorKind::ShapeMismatch, "antiderivation pair shapes");
  const JJAlgebra& a = rr.rep.algebra;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Vec lhs = eta.apply(a.product_of_basis(i, j));
      Vec rhs = scale_vec(Rational(-1), add_vec(rr.rep.action[i].apply(eta.column(j)),
                                                rr.rep.action[j].apply(eta.column(i))));
      if (lhs != rhs) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vec lhs = sub_vec(eta.apply(rr.rb.op.column(i)), rr.t_op.apply(eta.column(i)));
    Vec rhs = sub_vec(rr.t_op.apply(rr.rep.action[i].apply(v)),
                      action_of(rr.rep, rr.rb.op.column(i)).apply(v));
    if (lhs != rhs) return false;
  }
  return true;
}

std::pair<Matrix, Vec> inner_antiderivation(const RBRepresentation& rr, const Vec& v) {
  if (v.size() != rr.rep.dim_v) fail(ErrorKind::ShapeMismatch, "vector must lie in V");
  std::size_t n = rr.rep.algebra.dim();
  Matrix d(rr.rep.dim_v, n);
  for (std::size_t j = 0; j < n; ++j) d.set_column(j, rr.rep.action[j].apply(v));
  return {std::move(d), scale_vec(Rational(-1), v)};
}

namespace {

void require_valid_rb_rep(const RBRepresentation& rr) {
  if (!check_rb(rr.rb).ok)
    fail(ErrorKind::PrerequisiteFailed, "cohomology requires a valid Rota-Baxter operator");
  if (!check_representation(rr.rep).ok)
    fail(ErrorKind::PrerequisiteFailed, "cohomology requires a valid representation");
  if (!rb_compat_identity(rr.rep, rr.rb.weight, rr.rb.op, rr.t_op).ok)
    fail(ErrorKind::PrerequisiteFailed, "cohomology requires a compatible T");
}

}  // namespace

CohomologyReport cohomology_rb(const RBRepresentation& rr, std::size_t degree) {
  require_valid_rb_rep(rr);
  std::size_t m = rr.rep.dim_v;
  if (degree == 0) {
    SubspaceBasis cocycles = kernel_basis(assemble_d_rb0(rr));
    SubspaceBasis coboundaries(m);  // nothing below degree 0
    SubspaceBasis reps = quotient_representatives(cocycles, coboundaries);
    return CohomologyReport{0,        cocycles.dim(), coboundaries.dim(), reps.dim(),
                            cocycles, coboundaries,   reps};
  }
  if (degree == 1) {
    SubspaceBasis cocycles = kernel_basis(assemble_d_rb1(rr));
    SubspaceBasis coboundaries = image_basis(assemble_delta_rb0(rr));
    SubspaceBasis reps = quotient_representatives(cocycles, coboundaries);
    return CohomologyReport{1,        cocycles.dim(), coboundaries.dim(), reps.dim(),
                            cocycles, coboundaries,   reps};
  }
  fail(ErrorKind::UnsupportedDegree,
       "the Rota-Baxter complex is defined in degrees 0 and 1 only");
}

SubspaceBasis ader_basis(const RBRepresentation& rr) {
  return kernel_basis(assemble_d_rb1(rr));
}

SubspaceBasis innader_basis(const RBRepresentation& rr) {
  return image_basis(assemble_delta_rb0(rr));
}

}  // namespace jjrb
