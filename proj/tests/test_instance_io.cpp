#include <doctest.h>

#include "jjrb/catalog.hpp"
#include "jjrb/error.hpp"
#include "jjrb/instance_io.hpp"
#include "test_helpers.hpp"

using namespace jjrb;
using namespace jjrb::test;

namespace {

const char* kDim2Doc = R"({
  "algebra": {"dim": 2, "products": [{"i": 1, "j": 1, "result": [{"k": 2, "c": "1"}]}]},
  "weight": "0",
  "rb_operator": [["0", "0"], ["1", "1"]]
})";

}  // namespace

TEST_CASE("parsing a minimal document") {
  InstanceFile f = parse_instance(kDim2Doc);
  CHECK(f.algebra.dim() == 2);
  CHECK(f.algebra == dim2_algebra());
  REQUIRE(f.weight.has_value());
  CHECK(*f.weight == q(0));
  REQUIRE(f.rb_operator.has_value());
  CHECK(*f.rb_operator == mat({{0, 0}, {1, 1}}));
  CHECK_FALSE(f.representation.has_value());
}

TEST_CASE("emit-parse round trips are byte identical") {
  InstanceFile f = parse_instance(kDim2Doc);
  std::string once = emit_instance(f);
  std::string twice = emit_instance(parse_instance(once));
  CHECK(once == twice);

  // with all optional sections present
  InstanceFile full;
  full.algebra = dim3_algebra();
  full.weight = q(1);
  full.rb_operator = mat({{1, 1, 0}, {2, 1, 0}, {0, 0, 1}});
  full.representation = adjoint_rep(dim3_algebra());
  full.t_operator = *full.rb_operator;
  std::string a = emit_instance(full);
  std::string b = emit_instance(parse_instance(a));
  CHECK(a == b);
}

TEST_CASE("mirror products are implied") {
  // listing only (1,2) fills (2,1) as well
  InstanceFile f = parse_instance(R"({"algebra": {"dim": 3, "products":
      [{"i": 1, "j": 2, "result": [{"k": 3, "c": "1"}]}]}})");
  CHECK(f.algebra == dim3_algebra());

  // both mirrors listed with equal values: fine, also in strict mode
  const char* both = R"({"algebra": {"dim": 3, "products": [
      {"i": 1, "j": 2, "result": [{"k": 3, "c": "1"}]},
      {"i": 2, "j": 1, "result": [{"k": 3, "c": "1"}]}]}})";
  CHECK(parse_instance(both, true).algebra == dim3_algebra());

  // duplicate listing of the same pair
  CHECK_THROWS_AS(parse_instance(R"({"algebra": {"dim": 2, "products": [
      {"i": 1, "j": 1, "result": [{"k": 2, "c": "1"}]},
      {"i": 1, "j": 1, "result": [{"k": 2, "c": "1"}]}]}})"),
                  Error);
}

TEST_CASE("asymmetric constants: symmetrized by default, rejected in strict mode") {
  const char* asym = R"({"algebra": {"dim": 3, "products": [
      {"i": 1, "j": 2, "result": [{"k": 3, "c": "1"}]},
      {"i": 2, "j": 1, "result": [{"k": 3, "c": "3"}]}]}})";
  InstanceFile f = parse_instance(asym, false);
  CHECK(f.algebra.c(0, 1, 2) == q(2));  // averaged
  CHECK(f.algebra.c(1, 0, 2) == q(2));
  CHECK_THROWS_AS(parse_instance(asym, true), Error);
}

TEST_CASE("malformed documents raise ParseError with a location") {
  auto kind_of = [](const char* text) {
    try {
      parse_instance(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::UnknownId;  // sentinel: "did not throw"
  };

  CHECK(kind_of("{") == ErrorKind::ParseError);
  CHECK(kind_of("[]") == ErrorKind::ParseError);
  CHECK(kind_of("{}") == ErrorKind::MissingSection);
  CHECK(kind_of(R"({"algebra": {"dim": 0}})") == ErrorKind::ParseError);
  CHECK(kind_of(R"({"algebra": {"dim": 1000000000}})") == ErrorKind::ParseError);
  CHECK(kind_of(R"({"algebra": {"dim": 2}, "nonsense": 1})") == ErrorKind::ParseError);
  CHECK(kind_of(R"({"algebra": {"dim": 2, "products":
      [{"i": 1, "j": 3, "result": []}]}})") == ErrorKind::ParseError);
  CHECK(kind_of(R"({"algebra": {"dim": 2}, "weight": "1/0"})") == ErrorKind::ParseError);
  CHECK(kind_of(R"({"algebra": {"dim": 2}, "weight": 1})") == ErrorKind::ParseError);
  CHECK(kind_of(R"({"algebra": {"dim": 2}, "rb_operator": [["1", "0"]]})") ==
        ErrorKind::ParseError);
  CHECK(kind_of(R"({"algebra": {"dim": 2}, "t_operator": [["1", "0"], ["0", "1"]]})") ==
        ErrorKind::MissingSection);

  // error messages carry a location hint
  try {
    parse_instance(R"({"algebra": {"dim": 2, "products": [{"i": 1}]}})");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("products[0]") != std::string::npos);
  }
}

TEST_CASE("catalog entries export to parseable documents") {
  for (const CatalogEntry& entry : catalog_entries()) {
    InstanceFile f;
    f.algebra = entry.algebra;
    RBOperator op = canonical_instance(entry);
    f.weight = op.weight;
    f.rb_operator = op.op;
    std::string text = emit_instance(f);
    InstanceFile parsed = parse_instance(text, true);  // exports are mirror-complete
    CHECK(parsed.algebra == entry.algebra);
    CHECK(*parsed.rb_operator == op.op);
    CHECK(emit_instance(parsed) == text);
  }
}
