#include <doctest.h>

#include "jjrb/poly.hpp"
#include "jjrb/rb_operator.hpp"
#include "test_helpers.hpp"

using namespace jjrb;
using namespace jjrb::test;

TEST_CASE("monomial order: degree descending, then index sequence") {
  CHECK(monomial_before({0, 0}, {0, 3}));
  CHECK(monomial_before({0, 3}, {3}));
  CHECK(monomial_before({1}, {3}));
  CHECK(monomial_before({3}, {}));
  CHECK_FALSE(monomial_before({}, {3}));
}

TEST_CASE("poly arithmetic and cancellation") {
  Poly x = Poly::var(0), y = Poly::var(1);
  Poly p = x * x + y.scaled(q(2)) - x * x;
  CHECK(p == y.scaled(q(2)));
  CHECK((p - p).is_zero());
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(p.total_degree() == 1);
  CHECK((x * x * y).total_degree() == 3);
  CHECK(Poly().is_zero());
  CHECK(Poly::constant(q(0)).is_zero());
  CHECK(Poly().to_string([](std::size_t) { return std::string("v"); }) == "0");
}

TEST_CASE("poly evaluation") {
  Poly x = Poly::var(0), y = Poly::var(1);
  Poly p = x * x - (x * y).scaled(q(2)) + y;                  // x^2 - 2xy + y
  std::vector<Rational> at = {q(3), q(1, 2)};
  CHECK(p.eval(at) == q(9) - q(3) + q(1, 2));
  CHECK(p.max_var() == 1);
  CHECK(Poly::constant(q(5)).max_var() == Poly::npos);
}

TEST_CASE("constraint polynomial text form matches the documented rendering") {
  // a1^2 - (2 a1 + lambda) b2 at lambda = 1, in the entry unknowns of the
  // 2-dim algebra: exactly the documented line.
  PolySystem sys = rb_constraint_system(dim2_algebra(), q(1));
  bool found = false;
  for (std::size_t idx = 0; idx < sys.polys.size(); ++idx) {
    if (sys.sources[idx] == std::array<std::size_t, 3>{{0, 0, 1}}) {
      found = true;
      CHECK(sys.polys[idx].to_string([&](std::size_t v) { return sys.var_name(v); }) ==
            "1*x_{0,0}*x_{0,0} + -2*x_{0,0}*x_{1,1} + -1*x_{1,1}");
    }
  }
  CHECK(found);
}
