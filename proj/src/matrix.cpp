#include "jjrb/matrix.hpp"

#include <algorithm>

#include "jjrb/error.hpp"

namespace jjrb {

Vec zero_vec(std::size_t n) { return Vec(n); }

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vec add_vec(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vector sizes differ");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub_vec(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vector sizes differ");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scale_vec(const Rational& s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorKind::DimensionMismatch, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) fail(ErrorKind::DimensionMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

Vec Matrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

void Matrix::set_column(std::size_t c, const Vec& v) {
  if (v.size() != rows_) fail(ErrorKind::DimensionMismatch, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(ErrorKind::DimensionMismatch, "matrix shapes differ in +");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] + o.entries_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(ErrorKind::DimensionMismatch, "matrix shapes differ in -");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] - o.entries_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail(ErrorKind::DimensionMismatch, "matrix shapes differ in *");
  Matrix m(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = at(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) m.at(r, c) += x * o.at(k, c);
    }
  }
  return m;
}

Matrix Matrix::operator-() const { return scaled(Rational(-1)); }

Matrix Matrix::scaled(const Rational& s) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = s * entries_[i];
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) fail(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < cols_; ++c) acc += at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

std::optional<Matrix> Matrix::inverse() const {
  if (!is_square()) return std::nullopt;
  std::size_t n = rows_;
  Matrix work = *this;
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work.at(pivot, c), work.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    Rational scale = work.at(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      work.at(col, c) *= scale;
      inv.at(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work.at(r, col).is_zero()) continue;
      Rational factor = work.at(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work.at(r, c) -= factor * work.at(col, c);
        inv.at(r, c) -= factor * inv.at(col, c);
      }
    }
  }
  return inv;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m.at(a.rows() + r, a.cols() + c) = b.at(r, c);
  return m;
}

RrefResult rref(const Matrix& m) {
  RrefResult out;
  out.rref = m;
  Matrix& a = out.rref;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(pivot, c), a.at(row, c));
    }
    Rational scale = a.at(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a.at(row, c) *= scale;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      Rational factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= factor * a.at(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = out.pivots.size();
  return out;
}

SubspaceBasis SubspaceBasis::span_of(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  SubspaceBasis out(ambient_dim);
  if (vectors.empty()) return out;
  RrefResult r = rref(Matrix::from_rows(vectors, ambient_dim));
  for (std::size_t i = 0; i < r.rank; ++i) {
    out.vectors_.push_back(r.rref.row(i));
    out.pivots_.push_back(r.pivots[i]);
  }
  return out;
}

Vec SubspaceBasis::reduce(Vec v) const {
  if (v.size() != ambient_dim_) fail(ErrorKind::DimensionMismatch, "ambient dimension mismatch");
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const Rational& coef = v[pivots_[i]];
    if (coef.is_zero()) continue;
    Rational factor = coef;  // pivot entries are 1 in RREF rows
    for (std::size_t c = 0; c < ambient_dim_; ++c) v[c] -= factor * vectors_[i][c];
  }
  return v;
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  return std::all_of(other.vectors_.begin(), other.vectors_.end(),
                     [this](const Vec& v) { return contains(v); });
}

SubspaceBasis kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> gens;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v = zero_vec(m.cols());
    v[free_col] = Rational(1);
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.rref.at(i, free_col);
    gens.push_back(std::move(v));
  }
  return SubspaceBasis::span_of(m.cols(), gens);
}

SubspaceBasis image_basis(const Matrix& m) {
  std::vector<Vec> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return SubspaceBasis::span_of(m.rows(), cols);
}

SubspaceBasis quotient_representatives(const SubspaceBasis& z, const SubspaceBasis& b) {
  if (z.ambient_dim() != b.ambient_dim())
    fail(ErrorKind::DimensionMismatch, "quotient spaces have different ambient dimensions");
  if (!z.contains(b))
    fail(ErrorKind::ContainmentViolation, "coboundary space not contained in cocycle space");
  // Extend b by z-vectors that are independent modulo the span so far.
  std::vector<Vec> accumulated = b.vectors();
  std::vector<Vec> reps;
  SubspaceBasis span = SubspaceBasis::span_of(z.ambient_dim(), accumulated);
  for (const Vec& v : z.vectors()) {
    if (span.contains(v)) continue;
    reps.push_back(v);
    accumulated.push_back(v);
    span = SubspaceBasis::span_of(z.ambient_dim(), accumulated);
  }
  return SubspaceBasis::span_of(z.ambient_dim(), reps);
}

}  // namespace jjrb
