#ifndef JJRB_TEST_HELPERS_HPP
#define JJRB_TEST_HELPERS_HPP

#include <initializer_list>
#include <string_view>
#include <vector>

#include "jjrb/catalog.hpp"
#include "jjrb/jj_algebra.hpp"
#include "jjrb/matrix.hpp"
#include "jjrb/rational.hpp"
#include "jjrb/rng.hpp"

namespace jjrb::test {

inline Rational q(long n, long d = 1) { return Rational(n, d); }
inline Rational q(std::string_view s) { return Rational::parse(s); }

inline Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vec> rs;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    Vec row;
    for (long x : r) row.push_back(Rational(x));
    cols = row.size();
    rs.push_back(std::move(row));
  }
  return Matrix::from_rows(rs, cols);
}

inline Matrix matq(std::initializer_list<std::initializer_list<std::string_view>> rows) {
  std::vector<Vec> rs;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    Vec row;
    for (std::string_view x : r) row.push_back(Rational::parse(x));
    cols = row.size();
    rs.push_back(std::move(row));
  }
  return Matrix::from_rows(rs, cols);
}

inline const JJAlgebra& dim2_algebra() { return catalog_get("dim2").algebra; }
inline const JJAlgebra& dim3_algebra() { return catalog_get("dim3").algebra; }
inline const JJAlgebra& dim4G_algebra() { return catalog_get("dim4-G").algebra; }
inline const JJAlgebra& dim4H_algebra() { return catalog_get("dim4-H").algebra; }

inline JJAlgebra zero_algebra(std::size_t n) { return JJAlgebra(n); }

inline Vec random_vec(DetRng& rng, std::size_t n) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.sample_scalar_or_zero();
  return v;
}

inline Matrix random_matrix(DetRng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rng.sample_scalar_or_zero();
  return m;
}

}  // namespace jjrb::test

#endif
