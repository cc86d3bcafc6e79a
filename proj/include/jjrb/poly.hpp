#ifndef JJRB_POLY_HPP
#define JJRB_POLY_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "jjrb/rational.hpp"

namespace jjrb {

/// Monomial as a multiset of variable indices, kept sorted ascending;
/// the empty list is the constant monomial. x0*x0 is stored as {0, 0}.
using Monomial = std::vector<std::size_t>;

/// Orders monomials by total degree descending, then by the sorted index
/// sequence lexicographically ascending. This is the canonical term order
/// used for printing and equality.
bool monomial_before(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over Rational. Terms are kept in canonical
/// order with nonzero coefficients, so equal polynomials compare equal.
class Poly {
 public:
  Poly() = default;

  static Poly constant(Rational c);
  static Poly var(std::size_t index);

  bool is_zero() const { return terms_.empty(); }
  std::size_t total_degree() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Rational& s) const;

  Rational eval(const std::vector<Rational>& assignment) const;

  /// Largest variable index used, or npos when constant/zero.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t max_var() const;

  /// Renders "coef*<v>*<v>..." terms joined by " + ", with var_name mapping
  /// indices to display names. Zero renders as "0".
  std::string to_string(const std::function<std::string(std::size_t)>& var_name) const;

  const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(Monomial m, Rational c);
  void normalize();
  std::vector<std::pair<Monomial, Rational>> terms_;
};

}  // namespace jjrb

#endif
