#include "jjrb/rational.hpp"

#include <cctype>
#include <ostream>

#include "jjrb/error.hpp"

namespace jjrb {

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) fail(ErrorKind::ParseError, "rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) ||
      (slash != std::string_view::npos && !den.empty() && den.front() == '-')) {
    fail(ErrorKind::ParseError, "invalid rational \"" + std::string(text) + "\"");
  }
  mpq_class v(std::string(num) + "/" + std::string(den));
  if (v.get_den() == 0) {
    fail(ErrorKind::ParseError, "invalid rational \"" + std::string(text) + "\": zero denominator");
  }
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorKind::DimensionMismatch, "inverse of zero");
  mpq_class r(1);
  r /= v_;
  return Rational(std::move(r));
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::DimensionMismatch, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace jjrb
