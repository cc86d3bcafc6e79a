#include "jjrb/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jjrb/error.hpp"

namespace jjrb {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  fail(ErrorKind::ParseError, where + ": " + what);
}

long require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_fail(where, "expected an integer");
  return j.get<long>();
}

Rational require_rational(const Json& j, const std::string& where) {
  if (!j.is_string()) parse_fail(where, "expected a rational string like \"-3/2\"");
  return Rational::parse(j.get<std::string>());
}

Matrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    parse_fail(where, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      parse_fail(where + "[" + std::to_string(r) + "]",
                 "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = require_rational(row[c], where + "[" + std::to_string(r) + "][" +
                                                std::to_string(c) + "]");
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

// Instances are desk-sized; the bound keeps a typo from requesting an n^3
// structure-constant table.
constexpr long kMaxDim = 64;

JJAlgebra parse_algebra(const Json& j, bool strict) {
  if (!j.is_object()) parse_fail("algebra", "expected an object");
  if (!j.contains("dim")) parse_fail("algebra", "missing \"dim\"");
  long dim = require_int(j["dim"], "algebra.dim");
  if (dim < 1 || dim > kMaxDim)
    parse_fail("algebra.dim", "must be between 1 and " + std::to_string(kMaxDim));
  std::size_t n = static_cast<std::size_t>(dim);
  JJAlgebra a(n);

  // listed[(i,j)] remembers explicit listings so mirrors can be checked.
  std::vector<std::vector<int>> listed(n, std::vector<int>(n, 0));
  std::vector<std::vector<Vec>> given(n, std::vector<Vec>(n));

  const Json products = j.value("products", Json::array());
  if (!products.is_array()) parse_fail("algebra.products", "expected an array");
  for (std::size_t idx = 0; idx < products.size(); ++idx) {
    const std::string where = "algebra.products[" + std::to_string(idx) + "]";
    const Json& p = products[idx];
    if (!p.is_object() || !p.contains("i") || !p.contains("j") || !p.contains("result"))
      parse_fail(where, "expected {\"i\", \"j\", \"result\"}");
    long i1 = require_int(p["i"], where + ".i");
    long j1 = require_int(p["j"], where + ".j");
    if (i1 < 1 || j1 < 1 || i1 > dim || j1 > dim)
      parse_fail(where, "basis indices are 1-based and bounded by dim");
    std::size_t i = static_cast<std::size_t>(i1 - 1);
    std::size_t jj = static_cast<std::size_t>(j1 - 1);
    if (listed[i][jj]) parse_fail(where, "product listed twice");
    Vec value = zero_vec(n);
    const Json& result = p["result"];
    if (!result.is_array()) parse_fail(where + ".result", "expected an array");
    for (std::size_t t = 0; t < result.size(); ++t) {
      const std::string rw = where + ".result[" + std::to_string(t) + "]";
      const Json& term = result[t];
      if (!term.is_object() || !term.contains("k") || !term.contains("c"))
        parse_fail(rw, "expected {\"k\", \"c\"}");
      long k1 = require_int(term["k"], rw + ".k");
      if (k1 < 1 || k1 > dim) parse_fail(rw + ".k", "1-based index out of range");
      value[static_cast<std::size_t>(k1 - 1)] = require_rational(term["c"], rw + ".c");
    }
    listed[i][jj] = 1;
    given[i][jj] = std::move(value);
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t jj = i; jj < n; ++jj) {
      if (!listed[i][jj] && !listed[jj][i]) continue;
      if (listed[i][jj] && listed[jj][i] && given[i][jj] != given[jj][i]) {
        if (strict)
          parse_fail("algebra.products",
                     "asymmetric values for the (" + std::to_string(i + 1) + "," +
                         std::to_string(jj + 1) + ") product and its mirror");
        // symmetrize: replace both by the average
        Vec avg = scale_vec(Rational(1, 2), add_vec(given[i][jj], given[jj][i]));
        a.set_product(i, jj, avg);
        continue;
      }
      a.set_product(i, jj, listed[i][jj] ? given[i][jj] : given[jj][i]);
    }
  }
  return a;
}

}  // namespace

InstanceFile parse_instance(const std::string& json_text, bool strict) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::ParseError, "top level must be an object");
  if (!doc.contains("algebra")) fail(ErrorKind::MissingSection, "no \"algebra\" section");

  InstanceFile out;
  out.algebra = parse_algebra(doc["algebra"], strict);
  std::size_t n = out.algebra.dim();

  for (const auto& [key, value] : doc.items()) {
    if (key != "algebra" && key != "weight" && key != "rb_operator" &&
        key != "representation" && key != "t_operator")
      fail(ErrorKind::ParseError, "unknown top-level key \"" + key + "\"");
    (void)value;
  }

  if (doc.contains("weight")) out.weight = require_rational(doc["weight"], "weight");
  if (doc.contains("rb_operator"))
    out.rb_operator = parse_matrix(doc["rb_operator"], n, n, "rb_operator");

  if (doc.contains("representation")) {
    const Json& r = doc["representation"];
    if (!r.is_object() || !r.contains("dim") || !r.contains("action"))
      fail(ErrorKind::ParseError, "representation: expected {\"dim\", \"action\"}");
    long mv = require_int(r["dim"], "representation.dim");
    if (mv < 0 || mv > kMaxDim)
      fail(ErrorKind::ParseError,
           "representation.dim must be between 0 and " + std::to_string(kMaxDim));
    std::size_t m = static_cast<std::size_t>(mv);
    const Json& action = r["action"];
    if (!action.is_array() || action.size() != n)
      fail(ErrorKind::ParseError, "representation.action needs one matrix per basis vector");
    Representation rep{out.algebra, m, {}};
    for (std::size_t i = 0; i < n; ++i)
      rep.action.push_back(
          parse_matrix(action[i], m, m, "representation.action[" + std::to_string(i) + "]"));
    out.representation = std::move(rep);
  }

  if (doc.contains("t_operator")) {
    if (!out.representation)
      fail(ErrorKind::MissingSection, "t_operator requires a representation section");
    std::size_t m = out.representation->dim_v;
    out.t_operator = parse_matrix(doc["t_operator"], m, m, "t_operator");
  }
  return out;
}

InstanceFile load_instance(const std::string& path, bool strict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), strict);
}

std::string emit_instance(const InstanceFile& f) {
  Json doc = Json::object();
  std::size_t n = f.algebra.dim();

  Json algebra = Json::object();
  algebra["dim"] = n;
  Json products = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Json result = Json::array();
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& coef = f.algebra.c(i, j, k);
        if (coef.is_zero()) continue;
        Json term = Json::object();
        term["k"] = k + 1;
        term["c"] = coef.str();
        result.push_back(std::move(term));
      }
      if (result.empty()) continue;
      Json p = Json::object();
      p["i"] = i + 1;
      p["j"] = j + 1;
      p["result"] = std::move(result);
      products.push_back(std::move(p));
    }
  }
  algebra["products"] = std::move(products);
  doc["algebra"] = std::move(algebra);

  if (f.weight) doc["weight"] = f.weight->str();
  if (f.rb_operator) doc["rb_operator"] = matrix_to_json(*f.rb_operator);
  if (f.representation) {
    Json rep = Json::object();
    rep["dim"] = f.representation->dim_v;
    Json action = Json::array();
    for (const Matrix& m : f.representation->action) action.push_back(matrix_to_json(m));
    rep["action"] = std::move(action);
    doc["representation"] = std::move(rep);
  }
  if (f.t_operator) doc["t_operator"] = matrix_to_json(*f.t_operator);
  return doc.dump(2) + "\n";
}

}  // namespace jjrb
