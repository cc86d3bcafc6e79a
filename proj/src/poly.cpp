#include "jjrb/poly.hpp"

#include <algorithm>
#include <map>

namespace jjrb {

bool monomial_before(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

namespace {

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_before(a, b); }
};

}  // namespace

Poly Poly::constant(Rational c) {
  Poly p;
  p.add_term({}, std::move(c));
  p.normalize();
  return p;
}

Poly Poly::var(std::size_t index) {
  Poly p;
  p.add_term({index}, Rational(1));
  return p;
}

std::size_t Poly::total_degree() const {
  std::size_t deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.size());
  return deg;
}

void Poly::add_term(Monomial m, Rational c) {
  if (c.is_zero()) return;
  terms_.emplace_back(std::move(m), std::move(c));
}

void Poly::normalize() {
  std::map<Monomial, Rational, MonomialLess> acc;
  for (auto& [m, c] : terms_) acc[m] += c;
  terms_.clear();
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms_.emplace_back(m, c);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  out.normalize();
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const { return scaled(Rational(-1)); }

Poly Poly::scaled(const Rational& s) const {
  Poly out;
  if (s.is_zero()) return out;
  for (const auto& [m, c] : terms_) out.add_term(m, s * c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      out.add_term(std::move(m), ca * cb);
    }
  }
  out.normalize();
  return out;
}

Rational Poly::eval(const std::vector<Rational>& assignment) const {
  Rational acc;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t v : m) term *= assignment.at(v);
    acc += term;
  }
  return acc;
}

std::size_t Poly::max_var() const {
  std::size_t best = npos;
  for (const auto& [m, c] : terms_) {
    for (std::size_t v : m) {
      if (best == npos || v > best) best = v;
    }
  }
  return best;
}

std::string Poly::to_string(const std::function<std::string(std::size_t)>& var_name) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.str();
    for (std::size_t v : m) {
      out += "*";
      out += var_name(v);
    }
  }
  return out;
}

}  // namespace jjrb
