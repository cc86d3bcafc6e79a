#include "jjrb/catalog.hpp"

#include <algorithm>

#include "jjrb/error.hpp"
#include "jjrb/rng.hpp"

namespace jjrb {

namespace {

/// Little helper for writing family entries: polynomials in named parameters.
class ParamCtx {
 public:
  explicit ParamCtx(std::vector<std::string> names) : names_(std::move(names)) {}

  const std::vector<std::string>& names() const { return names_; }

  Poly operator()(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return Poly::var(i);
    }
    fail(ErrorKind::UnknownId, "unknown parameter " + name);
  }

  static Poly k(long value) { return Poly::constant(Rational(value)); }

 private:
  std::vector<std::string> names_;
};

ParamExpr pe(Poly num) { return ParamExpr{std::move(num)}; }
ParamExpr pe(Poly num, Poly den) { return ParamExpr{std::move(num), std::move(den)}; }
ParamExpr pz() { return ParamExpr{Poly()}; }

JJAlgebra algebra_dim2() {
  JJAlgebra a(2);
  Vec e2 = zero_vec(2);
  e2[1] = Rational(1);
  a.set_product(0, 0, e2);
  return a;
}

JJAlgebra algebra_dim4_square() {
  JJAlgebra a(4);
  Vec e2 = zero_vec(4);
  e2[1] = Rational(1);
  a.set_product(0, 0, e2);
  return a;
}

JJAlgebra algebra_dim4_two_squares() {
  JJAlgebra a(4);
  Vec e2 = zero_vec(4);
  e2[1] = Rational(1);
  a.set_product(0, 0, e2);
  a.set_product(2, 2, e2);
  return a;
}

JJAlgebra algebra_dim3() {
  JJAlgebra a(3);
  Vec e3 = zero_vec(3);
  e3[2] = Rational(1);
  a.set_product(0, 1, e3);
  return a;
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> entries;

  {
    CatalogEntry e;
    e.id = "dim2";
    e.description = "e1*e1 = e2";
    e.algebra = algebra_dim2();

    {
      OperatorFamily f;
      f.name = "zero-weight-A";
      ParamCtx p({"a2", "b2"});
      f.params = p.names();
      f.fixed_weight = Rational(0);
      f.entries = {{pz(), pz()}, {pe(p("a2")), pe(p("b2"))}};
      f.excluded_text = "none";
      e.families.push_back(std::move(f));
    }
    {
      OperatorFamily f;
      f.name = "zero-weight-B";
      ParamCtx p({"a1", "a2"});
      f.params = p.names();
      f.fixed_weight = Rational(0);
      f.entries = {{pe(ParamCtx::k(2) * p("a1")), pz()}, {pe(p("a2")), pe(p("a1"))}};
      f.excluded = {p("a1")};
      f.excluded_text = "a1 != 0";
      e.families.push_back(std::move(f));
    }
    {
      OperatorFamily f;
      f.name = "lambda-family";
      ParamCtx p({"lambda", "a1", "a2"});
      f.params = p.names();
      Poly denom = ParamCtx::k(2) * p("a1") + p("lambda");
      f.entries = {{pe(p("a1")), pz()}, {pe(p("a2")), pe(p("a1") * p("a1"), denom)}};
      f.excluded = {denom};
      // The source text states the condition as a1 != lambda/2; the derivation
      // forces 2 a1 + lambda != 0. Flagged by the reproduction suite.
      f.excluded_text = "2*a1 + lambda != 0";
      e.families.push_back(std::move(f));
    }
    e.canonical_family = "zero-weight-A";
    e.canonical_params = {{"a2", Rational(1)}, {"b2", Rational(1)}};
    e.expected_degree1_dims = {{3, 2, 1}};
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "dim4-G";
    e.description = "e1*e1 = e2";
    e.algebra = algebra_dim4_square();

    {
      OperatorFamily f;
      f.name = "zero-weight-A";
      ParamCtx p({"a2", "a3", "a4", "b2", "b3", "b4", "c2", "c3", "c4", "d2", "d3", "d4"});
      f.params = p.names();
      f.fixed_weight = Rational(0);
      f.entries = {{pz(), pz(), pz(), pz()},
                   {pe(p("a2")), pe(p("b2")), pe(p("c2")), pe(p("d2"))},
                   {pe(p("a3")), pe(p("b3")), pe(p("c3")), pe(p("d3"))},
                   {pe(p("a4")), pe(p("b4")), pe(p("c4")), pe(p("d4"))}};
      f.excluded_text = "none";
      e.families.push_back(std::move(f));
    }
    // The source display keeps a free b3 = b4 in these two families; the
    // (e1, e1) instance of the defining identity forces (2 a1 + lambda) b3 =
    // (2 a1 + lambda) b4 = 0, so off the a1 = -lambda/2 locus both vanish.
    // Stored with zeros; the reproduction suite flags the discrepancy.
    {
      OperatorFamily f;
      f.name = "zero-weight-B";
      ParamCtx p({"a1", "a2", "a3", "a4", "c2", "c3", "c4", "d2", "d3", "d4"});
      f.params = p.names();
      f.fixed_weight = Rational(0);
      Poly denom = ParamCtx::k(2) * p("a1");
      f.entries = {{pe(p("a1")), pz(), pz(), pz()},
                   {pe(p("a2")), pe(p("a1") * p("a1"), denom), pe(p("c2")), pe(p("d2"))},
                   {pe(p("a3")), pz(), pe(p("c3")), pe(p("d3"))},
                   {pe(p("a4")), pz(), pe(p("c4")), pe(p("d4"))}};
      f.excluded = {p("a1")};
      f.excluded_text = "a1 != 0";
      e.families.push_back(std::move(f));
    }
    {
      OperatorFamily f;
      f.name = "lambda-family";
      ParamCtx p({"lambda", "a1", "a2", "a3", "a4", "c2", "c3", "c4", "d2", "d3", "d4"});
      f.params = p.names();
      Poly denom = ParamCtx::k(2) * p("a1") + p("lambda");
      f.entries = {{pe(p("a1")), pz(), pz(), pz()},
                   {pe(p("a2")), pe(p("a1") * p("a1"), denom), pe(p("c2")), pe(p("d2"))},
                   {pe(p("a3")), pz(), pe(p("c3")), pe(p("d3"))},
                   {pe(p("a4")), pz(), pe(p("c4")), pe(p("d4"))}};
      f.excluded = {denom};
      f.excluded_text = "2*a1 + lambda != 0";
      e.families.push_back(std::move(f));
    }
    e.canonical_family = "lambda-family";
    e.canonical_params = {{"lambda", Rational(1)}, {"a1", Rational(1)}, {"a2", Rational(0)},
                          {"a3", Rational(0)},     {"a4", Rational(0)}, {"c2", Rational(0)},
                          {"c3", Rational(0)},     {"c4", Rational(0)}, {"d2", Rational(0)},
                          {"d3", Rational(0)},     {"d4", Rational(0)}};
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "dim4-H";
    e.description = "e1*e1 = e2, e3*e3 = e2";
    e.algebra = algebra_dim4_two_squares();

    {
      OperatorFamily f;
      f.name = "zero-weight-A";
      ParamCtx p({"a2", "c2", "d2", "a4", "b4", "c4", "d4"});
      f.params = p.names();
      f.fixed_weight = Rational(0);
      f.entries = {{pz(), pz(), pz(), pz()},
                   {pe(p("a2")), pz(), pe(p("c2")), pe(p("d2"))},
                   {pz(), pz(), pz(), pz()},
                   {pe(p("a4")), pe(p("b4")), pe(p("c4")), pe(p("d4"))}};
      f.excluded_text = "none";
      e.families.push_back(std::move(f));
    }
    {
      OperatorFamily f;
      f.name = "zero-weight-B";
      ParamCtx p({"a2", "b2", "c2", "d2", "a4", "b4", "c4", "d4"});
      f.params = p.names();
      f.fixed_weight = Rational(0);
      f.entries = {{pz(), pz(), pz(), pz()},
                   {pe(p("a2")), pe(p("b2")), pe(p("c2")), pe(p("d2"))},
                   {pz(), pz(), pz(), pz()},
                   {pe(p("a4")), pe(p("b4")), pe(p("c4")), pe(p("d4"))}};
      f.excluded = {p("b2") * p("b4")};
      f.excluded_text = "b2*b4 != 0";
      e.families.push_back(std::move(f));
    }
    e.canonical_family = "zero-weight-B";
    e.canonical_params = {{"a2", Rational(1)}, {"b2", Rational(1)}, {"c2", Rational(0)},
                          {"d2", Rational(0)}, {"a4", Rational(0)}, {"b4", Rational(1)},
                          {"c4", Rational(0)}, {"d4", Rational(0)}};
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "dim3";
    e.description = "e1*e2 = e3 = e2*e1";
    e.algebra = algebra_dim3();

    {
      OperatorFamily f;
      f.name = "main";
      ParamCtx p({"lambda", "r11", "r12", "r31", "r32"});
      f.params = p.names();
      Poly r21_num = (p("lambda") + p("r11")) * p("r11");
      f.entries = {{pe(p("r11")), pe(p("r12")), pz()},
                   {pe(r21_num, p("r12")), pe(p("r11")), pz()},
                   {pe(p("r31")), pe(p("r32")), pe(p("r11"))}};
      f.excluded = {p("r12"), p("r11"), p("r11") + p("lambda")};
      f.excluded_text = "r12 != 0, r11 != 0, r11 != -lambda";
      e.families.push_back(std::move(f));
    }
    e.canonical_family = "main";
    e.canonical_params = {{"lambda", Rational(1)}, {"r11", Rational(1)}, {"r12", Rational(1)},
                          {"r31", Rational(0)},    {"r32", Rational(0)}};
    e.expected_degree1_dims = {{4, 3, 1}};
    entries.push_back(std::move(e));
  }

  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& e : catalog_entries()) ids.push_back(e.id);
  return ids;
}

const CatalogEntry& catalog_get(const std::string& id) {
  for (const auto& e : catalog_entries()) {
    if (e.id == id) return e;
  }
  fail(ErrorKind::UnknownId, "no catalog entry \"" + id + "\"");
}

const OperatorFamily& catalog_family(const CatalogEntry& entry, const std::string& family) {
  for (const auto& f : entry.families) {
    if (f.name == family) return f;
  }
  fail(ErrorKind::UnknownId, "entry " + entry.id + " has no family \"" + family + "\"");
}

RBOperator instantiate(const CatalogEntry& entry, const OperatorFamily& family,
                       const std::map<std::string, Rational>& params) {
  std::vector<Rational> values;
  values.reserve(family.params.size());
  for (const std::string& name : family.params) {
    auto it = params.find(name);
    if (it == params.end())
      fail(ErrorKind::ExcludedParameters, "missing parameter " + name);
    values.push_back(it->second);
  }
  for (const auto& [name, value] : params) {
    if (std::find(family.params.begin(), family.params.end(), name) == family.params.end())
      fail(ErrorKind::ExcludedParameters, "unknown parameter " + name);
  }
  for (const Poly& cond : family.excluded) {
    if (cond.eval(values).is_zero())
      fail(ErrorKind::ExcludedParameters,
           "parameters hit the excluded locus (" + family.excluded_text + ")");
  }
  std::size_t n = entry.algebra.dim();
  Matrix op(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const ParamExpr& ex = family.entries[r][c];
      Rational den = ex.den.eval(values);
      if (den.is_zero())
        fail(ErrorKind::ExcludedParameters, "entry denominator vanishes at these parameters");
      op.at(r, c) = ex.num.eval(values) / den;
    }
  }
  Rational weight = family.fixed_weight ? *family.fixed_weight : params.at("lambda");
  return RBOperator{entry.algebra, weight, std::move(op)};
}

RBOperator instantiate(const std::string& id, const std::string& family,
                       const std::map<std::string, Rational>& params) {
  const CatalogEntry& entry = catalog_get(id);
  return instantiate(entry, catalog_family(entry, family), params);
}

RBOperator canonical_instance(const CatalogEntry& entry) {
  return instantiate(entry, catalog_family(entry, entry.canonical_family),
                     entry.canonical_params);
}

std::vector<std::map<std::string, Rational>> family_samples(const CatalogEntry& entry,
                                                            const OperatorFamily& family,
                                                            std::size_t count) {
  std::uint64_t seed = 0xc0ffee;
  for (char ch : entry.id + "/" + family.name) seed = seed * 131 + static_cast<unsigned char>(ch);
  DetRng rng(seed);
  std::vector<std::map<std::string, Rational>> out;
  std::size_t guard = 0;
  while (out.size() < count && ++guard < 10000) {
    std::map<std::string, Rational> assignment;
    std::vector<Rational> values;
    for (const std::string& name : family.params) {
      Rational v = rng.sample_scalar();
      assignment[name] = v;
      values.push_back(v);
    }
    bool allowed = std::none_of(family.excluded.begin(), family.excluded.end(),
                                [&](const Poly& p) { return p.eval(values).is_zero(); });
    if (allowed) out.push_back(std::move(assignment));
  }
  return out;
}

std::vector<Poly> displayed_constraints_dim2(const Rational& lambda) {
  // Unknowns x_{r,c} = r*2 + c; in the displayed names a1 = x_{0,0},
  // a2 = x_{1,0}, b1 = x_{0,1}, b2 = x_{1,1}.
  Poly a1 = Poly::var(0), b1 = Poly::var(1), b2 = Poly::var(3);
  Poly two_a1_lam = a1.scaled(Rational(2)) + Poly::constant(lambda);
  return {two_a1_lam * b1, a1 * a1 - two_a1_lam * b2, a1 * b1 - b1 * b2, b1};
}

std::vector<Poly> displayed_constraints_dim4(const Rational& lambda) {
  // x_{r,c} = r*4 + c; a1 = x_{0,0}, b1 = x_{0,1}, c1 = x_{0,2}, d1 = x_{0,3},
  // b2 = x_{1,1}, b3 = x_{2,1}, b4 = x_{3,1}.
  Poly a1 = Poly::var(0), b1 = Poly::var(1), c1 = Poly::var(2), d1 = Poly::var(3);
  Poly b2 = Poly::var(5), b3 = Poly::var(9), b4 = Poly::var(13);
  Poly two_a1_lam = a1.scaled(Rational(2)) + Poly::constant(lambda);
  return {b1, c1, d1, a1 * a1 - two_a1_lam * b2, two_a1_lam * (b3 - b4)};
}

}  // namespace jjrb
