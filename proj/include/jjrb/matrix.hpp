#ifndef JJRB_MATRIX_HPP
#define JJRB_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "jjrb/rational.hpp"

namespace jjrb {

using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n);
bool is_zero_vec(const Vec& v);
Vec add_vec(const Vec& a, const Vec& b);
Vec sub_vec(const Vec& a, const Vec& b);
Vec scale_vec(const Rational& s, const Vec& v);

/// Dense matrix over Rational, row-major. Operator matrices throughout the
/// library follow the column convention: column j is the image of basis
/// vector e_j.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Rational& s) const;

  /// Matrix-vector product (v interpreted as a column).
  Vec apply(const Vec& v) const;

  /// Gauss-Jordan inverse; nullopt when singular.
  std::optional<Matrix> inverse() const;

  static Matrix block_diag(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  const std::vector<Rational>& entries() const { return entries_; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

struct RrefResult {
  Matrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // strictly increasing pivot column indices
};

/// Reduced row-echelon form over the rationals (exact). Idempotent.
RrefResult rref(const Matrix& m);

/// Subspace of Q^ambient_dim stored as the nonzero rows of a reduced
/// row-echelon matrix; the canonical representative of the subspace, so two
/// subspaces are equal iff their stored vectors are identical.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  /// Echelonizes the given spanning vectors (drops dependent ones).
  static SubspaceBasis span_of(std::size_t ambient_dim, const std::vector<Vec>& vectors);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return vectors_.size(); }
  const std::vector<Vec>& vectors() const { return vectors_; }

  /// Residual of v after elimination against the echelon rows; zero iff
  /// v lies in the subspace.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }
  bool contains(const SubspaceBasis& other) const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vectors_ == b.vectors_;
  }

 private:
  std::size_t ambient_dim_;
  std::vector<Vec> vectors_;           // RREF rows
  std::vector<std::size_t> pivots_;    // leading column of each row
};

/// Basis of {x : m x = 0}; dimension cols(m) - rank(m).
SubspaceBasis kernel_basis(const Matrix& m);

/// Echelonized basis of the column space of m.
SubspaceBasis image_basis(const Matrix& m);

/// Vectors extending b to a basis of z; their classes form a basis of z/b.
/// Requires b to be contained in z (ContainmentViolation otherwise).
SubspaceBasis quotient_representatives(const SubspaceBasis& z, const SubspaceBasis& b);

}  // namespace jjrb

#endif
