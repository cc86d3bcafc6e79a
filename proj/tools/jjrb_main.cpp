// jjrb - checks, constructions, constraint systems and low-degree cohomology
// for weighted Rota-Baxter operators on Jacobi-Jordan algebras.
//
// Exit codes: 0 = all requested checks pass, 1 = a mathematical identity
// fails on well-formed input, 2 = unusable input (parse error, missing
// section, unsupported request).

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jjrb/catalog.hpp"
#include "jjrb/cohomology.hpp"
#include "jjrb/error.hpp"
#include "jjrb/instance_io.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace jjrb;

struct Claim {
  std::string claim;
  std::string source;
  std::string status;  // PASS | FAIL | FLAGGED
  std::string witness;
};

Json claims_to_json(const std::vector<Claim>& claims) {
  Json arr = Json::array();
  for (const Claim& c : claims) {
    Json j = Json::object();
    j["claim"] = c.claim;
    j["paper_ref"] = c.source;
    j["status"] = c.status;
    if (!c.witness.empty()) j["witness"] = c.witness;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json make_report(const std::string& command, const std::string& input,
                 const std::vector<Claim>& claims, std::optional<Json> data = std::nullopt) {
  Json report = Json::object();
  report["command"] = command;
  report["input"] = input;
  report["results"] = claims_to_json(claims);
  if (data) report["data"] = std::move(*data);
  return report;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(ErrorKind::ParseError, "cannot write " + out_path);
  out << text;
}

int exit_code_for(const std::vector<Claim>& claims) {
  for (const Claim& c : claims) {
    if (c.status == "FAIL") return 1;
  }
  return 0;
}

std::string witness2(const std::optional<std::array<std::size_t, 2>>& w) {
  if (!w) return "";
  return "(e" + std::to_string((*w)[0] + 1) + ", e" + std::to_string((*w)[1] + 1) + ")";
}

std::string witness3(const std::optional<std::array<std::size_t, 3>>& w) {
  if (!w) return "";
  return "(e" + std::to_string((*w)[0] + 1) + ", e" + std::to_string((*w)[1] + 1) + ", e" +
         std::to_string((*w)[2] + 1) + ")";
}

void add_algebra_claims(std::vector<Claim>& claims, const JJAlgebra& a) {
  AxiomReport rep = check_jj_axioms(a);
  claims.push_back({"product is commutative", "defining identity x*y = y*x",
                    rep.commutative ? "PASS" : "FAIL", witness2(rep.commutative_witness)});
  claims.push_back({"Jacobi identity holds",
                    "defining identity (x*y)*z + (y*z)*x + (z*x)*y = 0",
                    rep.jacobi ? "PASS" : "FAIL", witness3(rep.jacobi_witness)});
}

const Rational& require_weight(const InstanceFile& f) {
  if (!f.weight) fail(ErrorKind::MissingSection, "no \"weight\" section");
  return *f.weight;
}

RBOperator require_rb(const InstanceFile& f) {
  if (!f.rb_operator) fail(ErrorKind::MissingSection, "no \"rb_operator\" section");
  return RBOperator{f.algebra, require_weight(f), *f.rb_operator};
}

const Representation& require_rep(const InstanceFile& f) {
  if (!f.representation) fail(ErrorKind::MissingSection, "no \"representation\" section");
  return *f.representation;
}

const Matrix& require_t(const InstanceFile& f) {
  if (!f.t_operator) fail(ErrorKind::MissingSection, "no \"t_operator\" section");
  return *f.t_operator;
}

/// Representation data for commands that accept either an explicit module or
/// default to the adjoint one.
RBRepresentation make_rb_representation(const InstanceFile& f) {
  RBOperator rb = require_rb(f);
  if (f.representation) {
    return RBRepresentation{*f.representation, rb, require_t(f)};
  }
  if (!check_jj_axioms(f.algebra).ok())
    fail(ErrorKind::AxiomViolation, "adjoint representation requires a Jacobi-Jordan algebra");
  Matrix t = rb.op;
  return RBRepresentation{adjoint_rep(f.algebra), std::move(rb), std::move(t)};
}

InstanceFile to_instance(const RBRepresentation& rr, bool include_module) {
  InstanceFile out;
  out.algebra = rr.rb.algebra;
  out.weight = rr.rb.weight;
  out.rb_operator = rr.rb.op;
  if (include_module) {
    out.representation = rr.rep;
    out.t_operator = rr.t_op;
  }
  return out;
}

void add_module_claims(std::vector<Claim>& claims, const RBRepresentation& rr,
                       const std::string& label) {
  CheckRepResult rep = check_representation(rr.rep);
  claims.push_back({label + ": representation anticommutator identity",
                    "defining identity rho(x*y) = -rho(x)rho(y) - rho(y)rho(x)",
                    rep.ok ? "PASS" : "FAIL", witness2(rep.witness)});
  CheckRepResult compat = rb_compat_identity(rr.rep, rr.rb.weight, rr.rb.op, rr.t_op);
  claims.push_back({label + ": T compatibility identity",
                    "defining identity rho(Ix)T = T(rho(Ix) + rho(x)T + lambda rho(x))",
                    compat.ok ? "PASS" : "FAIL", witness2(compat.witness)});
}

std::map<std::string, Rational> parse_params(const std::string& text) {
  std::map<std::string, Rational> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      fail(ErrorKind::ParseError, "--params expects name=value pairs, got \"" + item + "\"");
    out[item.substr(0, eq)] = Rational::parse(item.substr(eq + 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Matrix parse_inline_matrix(const std::string& text, std::size_t n) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("--psi: ") + e.what());
  }
  if (!doc.is_array() || doc.size() != n) fail(ErrorKind::ParseError, "--psi: expected n rows");
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!doc[r].is_array() || doc[r].size() != n)
      fail(ErrorKind::ParseError, "--psi: expected n entries per row");
    for (std::size_t c = 0; c < n; ++c) {
      if (!doc[r][c].is_string()) fail(ErrorKind::ParseError, "--psi: entries must be strings");
      m.at(r, c) = Rational::parse(doc[r][c].get<std::string>());
    }
  }
  return m;
}

Json basis_to_json(const SubspaceBasis& basis) {
  Json arr = Json::array();
  for (const Vec& v : basis.vectors()) {
    Json row = Json::array();
    for (const Rational& x : v) row.push_back(x.str());
    arr.push_back(std::move(row));
  }
  return arr;
}

Json cohomology_to_json(const CohomologyReport& rep) {
  Json data = Json::object();
  data["degree"] = rep.degree;
  data["dim_cocycles"] = rep.dim_cocycles;
  data["dim_coboundaries"] = rep.dim_coboundaries;
  data["dim_cohomology"] = rep.dim_cohomology;
  data["cocycle_basis"] = basis_to_json(rep.cocycle_basis);
  data["coboundary_basis"] = basis_to_json(rep.coboundary_basis);
  data["representative_basis"] = basis_to_json(rep.representative_basis);
  return data;
}

int cmd_check(const std::string& path, const std::string& what, bool strict,
              const std::string& out_path) {
  InstanceFile f = load_instance(path, strict);
  std::vector<Claim> claims;
  if (what == "algebra") {
    add_algebra_claims(claims, f.algebra);
  } else if (what == "rb") {
    add_algebra_claims(claims, f.algebra);
    RBOperator rb = require_rb(f);
    CheckRBResult res = check_rb(rb);
    claims.push_back({"Rota-Baxter identity holds (weight " + rb.weight.str() + ")",
                      "defining identity I(x)*I(y) = I(I(x)*y + x*I(y) + lambda x*y)",
                      res.ok ? "PASS" : "FAIL", witness2(res.witness)});
  } else if (what == "rep") {
    add_algebra_claims(claims, f.algebra);
    CheckRepResult res = check_representation(require_rep(f));
    claims.push_back({"representation anticommutator identity",
                      "defining identity rho(x*y) = -rho(x)rho(y) - rho(y)rho(x)",
                      res.ok ? "PASS" : "FAIL", witness2(res.witness)});
  } else if (what == "rbrep") {
    add_algebra_claims(claims, f.algebra);
    RBOperator rb = require_rb(f);
    CheckRBResult rbres = check_rb(rb);
    claims.push_back({"Rota-Baxter identity holds (weight " + rb.weight.str() + ")",
                      "defining identity I(x)*I(y) = I(I(x)*y + x*I(y) + lambda x*y)",
                      rbres.ok ? "PASS" : "FAIL", witness2(rbres.witness)});
    RBRepresentation rr{require_rep(f), rb, require_t(f)};
    add_module_claims(claims, rr, "module");
  } else if (what == "paired") {
    add_algebra_claims(claims, f.algebra);
    const Representation& rep = require_rep(f);
    CheckRepResult rep_res = check_representation(rep);
    claims.push_back({"representation anticommutator identity",
                      "defining identity rho(x*y) = -rho(x)rho(y) - rho(y)rho(x)",
                      rep_res.ok ? "PASS" : "FAIL", witness2(rep_res.witness)});
    if (rep_res.ok) {
      RBOperator rb = require_rb(f);
      PairedReport paired = check_paired(rep, rb.weight, rb.op, require_t(f));
      std::string witness;
      if (!paired.paired) {
        CheckRBResult op_res = check_rb(rb);
        CheckRepResult compat = rb_compat_identity(rep, rb.weight, rb.op, require_t(f));
        witness = !op_res.ok ? "operator identity fails at " + witness2(op_res.witness)
                             : "compatibility fails at " + witness2(compat.witness);
      }
      claims.push_back({"pair (I, T) satisfies both paired-operator identities",
                        "paired-operator definition", paired.paired ? "PASS" : "FAIL", witness});
      claims.push_back({"graph of (I, T) is a subalgebra of the quadruple semidirect algebra",
                        "graph characterization of paired operators",
                        paired.graph_subalgebra ? "PASS" : "FAIL", ""});
      claims.push_back({"the two characterizations agree",
                        "equivalence of the identity and graph routes",
                        paired.paired == paired.graph_subalgebra ? "PASS" : "FAIL", ""});
    }
  } else {
    fail(ErrorKind::ParseError, "unknown --what \"" + what + "\"");
  }
  write_output(make_report("check " + what, path, claims).dump(2) + "\n", out_path);
  return exit_code_for(claims);
}

int cmd_construct(const std::string& path, const std::string& kind, bool strict, int sign,
                  const std::string& mu_text, const std::string& lambda_text,
                  const std::string& psi_text, const std::string& out_path) {
  InstanceFile f = load_instance(path, strict);
  std::vector<Claim> claims;
  InstanceFile constructed;

  auto lambda_option = [&]() -> Rational {
    if (!lambda_text.empty()) return Rational::parse(lambda_text);
    if (f.weight) return *f.weight;
    return Rational(0);
  };

  if (kind == "derived") {
    RBOperator rb = require_rb(f);
    JJAlgebra derived = derived_algebra(rb);
    constructed.algebra = derived;
    constructed.weight = rb.weight;
    constructed.rb_operator = rb.op;
    AxiomReport ax = check_jj_axioms(derived);
    claims.push_back({"derived product is Jacobi-Jordan", "derived algebra construction",
                      ax.ok() ? "PASS" : "FAIL", ""});
    AlgebraMorphism to_base{derived, f.algebra, rb.op};
    claims.push_back({"I is a morphism from the derived algebra to the base algebra",
                      "derived algebra construction", check_morphism(to_base) ? "PASS" : "FAIL",
                      ""});
    claims.push_back({"(A_I, I) is again Rota-Baxter of the same weight",
                      "derived algebra construction",
                      check_rb(RBOperator{derived, rb.weight, rb.op}).ok ? "PASS" : "FAIL", ""});
  } else if (kind == "semidirect") {
    RBRepresentation rr = make_rb_representation(f);
    RBOperator sd = semidirect_product(rr);
    constructed.algebra = sd.algebra;
    constructed.weight = sd.weight;
    constructed.rb_operator = sd.op;
    claims.push_back({"semidirect product is Jacobi-Jordan", "semidirect product construction",
                      check_jj_axioms(sd.algebra).ok() ? "PASS" : "FAIL", ""});
    claims.push_back({"I + T is Rota-Baxter on the semidirect product",
                      "semidirect product construction", check_rb(sd).ok ? "PASS" : "FAIL", ""});
  } else if (kind == "doubling") {
    Rational lambda = lambda_option();
    JJAlgebra dbl = doubling(f.algebra, lambda);
    constructed.algebra = dbl;
    claims.push_back({"doubled algebra is Jacobi-Jordan (weight " + lambda.str() + ")",
                      "doubling construction", check_jj_axioms(dbl).ok() ? "PASS" : "FAIL", ""});
    if (f.representation) {
      Representation dr = doubled_rep(*f.representation, lambda);
      constructed.representation = dr;
      claims.push_back({"doubled action is a representation of the doubling",
                        "doubling construction",
                        check_representation(dr).ok ? "PASS" : "FAIL", ""});
    }
  } else if (kind == "quadruple") {
    Rational lambda = lambda_option();
    const Representation rep =
        f.representation ? *f.representation : adjoint_rep(f.algebra);
    JJAlgebra quad = quadruple_semidirect(rep, lambda);
    constructed.algebra = quad;
    claims.push_back({"quadruple semidirect algebra is Jacobi-Jordan (weight " + lambda.str() + ")",
                      "quadruple semidirect construction",
                      check_jj_axioms(quad).ok() ? "PASS" : "FAIL", ""});
  } else if (kind == "dual" || kind == "hat" || kind == "bar" || kind == "tilde" ||
             kind == "reflect") {
    if (kind == "hat" && sign != 1 && sign != -1)
      fail(ErrorKind::ParseError, "--sign must be +1 or -1");
    RBRepresentation rr = make_rb_representation(f);
    RBRepresentation out =
        kind == "dual"    ? dual_rep(rr)
        : kind == "hat"   ? hat_gl_rep(rr, sign)
        : kind == "bar"   ? bar_rep(rr)
        : kind == "tilde" ? tilde_rep(rr)
                          : reflect_rep(rr);
    constructed = to_instance(out, true);
    if (kind == "reflect" || kind == "bar" || kind == "tilde") {
      claims.push_back({"constructed operator passes the Rota-Baxter identity",
                        kind + " construction", check_rb(out.rb).ok ? "PASS" : "FAIL", ""});
    }
    add_module_claims(claims, out, kind);
  } else if (kind == "scale") {
    if (mu_text.empty()) fail(ErrorKind::ParseError, "scale requires --mu");
    RBOperator scaled = scale_rb(require_rb(f), Rational::parse(mu_text));
    constructed.algebra = scaled.algebra;
    constructed.weight = scaled.weight;
    constructed.rb_operator = scaled.op;
    claims.push_back({"scaled operator is Rota-Baxter of weight " + scaled.weight.str(),
                      "scaling construction", check_rb(scaled).ok ? "PASS" : "FAIL", ""});
  } else if (kind == "conjugate") {
    if (psi_text.empty()) fail(ErrorKind::ParseError, "conjugate requires --psi");
    RBOperator rb = require_rb(f);
    Matrix psi = parse_inline_matrix(psi_text, f.algebra.dim());
    RBOperator conj = conjugate_rb(rb, AlgebraMorphism{f.algebra, f.algebra, psi});
    constructed.algebra = conj.algebra;
    constructed.weight = conj.weight;
    constructed.rb_operator = conj.op;
    claims.push_back({"conjugated operator is Rota-Baxter of the same weight",
                      "conjugation construction", check_rb(conj).ok ? "PASS" : "FAIL", ""});
  } else {
    fail(ErrorKind::ParseError, "unknown --kind \"" + kind + "\"");
  }

  std::string instance_text = emit_instance(constructed);
  Json data = Json::parse(instance_text);
  // The report always goes to stdout; -o saves the constructed instance as a
  // directly loadable file.
  write_output(make_report("construct " + kind, path, claims, data).dump(2) + "\n", "");
  if (!out_path.empty()) write_output(instance_text, out_path);
  return exit_code_for(claims);
}

int cmd_cohomology(const std::string& path, long degree, bool strict,
                   const std::string& out_path) {
  InstanceFile f = load_instance(path, strict);
  if (degree < 0 || degree > 1)
    fail(ErrorKind::UnsupportedDegree,
         "the Rota-Baxter cochain complex is defined in degrees 0 and 1 only");
  RBRepresentation rr = make_rb_representation(f);
  CohomologyReport rep = cohomology_rb(rr, static_cast<std::size_t>(degree));
  std::vector<Claim> claims;
  claims.push_back({"cohomology computed in degree " + std::to_string(degree),
                    "cocycles modulo coboundaries of the Rota-Baxter complex", "PASS",
                    "dim Z = " + std::to_string(rep.dim_cocycles) +
                        ", dim B = " + std::to_string(rep.dim_coboundaries) +
                        ", dim H = " + std::to_string(rep.dim_cohomology)});
  write_output(make_report("cohomology", path, claims, cohomology_to_json(rep)).dump(2) + "\n",
               out_path);
  return 0;
}

int cmd_constraints(const std::string& path, bool strict, const std::string& out_path) {
  InstanceFile f = load_instance(path, strict);
  PolySystem sys = rb_constraint_system(f.algebra, require_weight(f));
  write_output(sys.to_text(), out_path);
  return 0;
}

int cmd_catalog_list(const std::string& out_path) {
  Json data = Json::array();
  for (const CatalogEntry& e : catalog_entries()) {
    Json entry = Json::object();
    entry["id"] = e.id;
    entry["description"] = e.description;
    entry["dim"] = e.algebra.dim();
    Json fams = Json::array();
    for (const OperatorFamily& fam : e.families) fams.push_back(fam.name);
    entry["families"] = std::move(fams);
    data.push_back(std::move(entry));
  }
  write_output(make_report("catalog list", "catalog", {}, data).dump(2) + "\n", out_path);
  return 0;
}

int cmd_catalog_show(const std::string& id, const std::string& out_path) {
  const CatalogEntry& e = catalog_get(id);
  Json data = Json::object();
  data["id"] = e.id;
  data["description"] = e.description;
  data["dim"] = e.algebra.dim();
  Json fams = Json::array();
  for (const OperatorFamily& fam : e.families) {
    Json fj = Json::object();
    fj["name"] = fam.name;
    Json params = Json::array();
    for (const std::string& p : fam.params) params.push_back(p);
    fj["params"] = std::move(params);
    if (fam.fixed_weight) fj["weight"] = fam.fixed_weight->str();
    fj["excluded"] = fam.excluded_text;
    fams.push_back(std::move(fj));
  }
  data["families"] = std::move(fams);
  data["canonical_family"] = e.canonical_family;
  Json cp = Json::object();
  for (const auto& [k, v] : e.canonical_params) cp[k] = v.str();
  data["canonical_params"] = std::move(cp);
  write_output(make_report("catalog show", id, {}, data).dump(2) + "\n", out_path);
  return 0;
}

int cmd_catalog_export(const std::string& id, const std::string& family,
                       const std::string& params_text, const std::string& out_path) {
  const CatalogEntry& e = catalog_get(id);
  InstanceFile f;
  f.algebra = e.algebra;
  if (!family.empty()) {
    RBOperator op = instantiate(e, catalog_family(e, family), parse_params(params_text));
    f.weight = op.weight;
    f.rb_operator = op.op;
  }
  write_output(emit_instance(f), out_path);
  return 0;
}

int cmd_verify_paper(const std::string& out_path) {
  VerifyReport rep = verify_paper();
  std::vector<Claim> claims;
  claims.reserve(rep.results.size());
  for (const ClaimResult& r : rep.results)
    claims.push_back({r.claim, r.source, r.status, r.witness});
  Json data = Json::object();
  data["passed"] = rep.passed;
  data["failed"] = rep.failed;
  data["flagged"] = rep.flagged;
  write_output(make_report("verify-paper", "catalog", claims, data).dump(2) + "\n", out_path);
  return rep.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Rota-Baxter operators on Jacobi-Jordan algebras: axiom checks, "
               "derived constructions, constraint systems, low-degree cohomology"};
  app.require_subcommand(1);

  std::string path, what = "algebra", kind, out_path, mu, lambda, psi, id, family, params;
  bool strict = false;
  int sign = 1;
  long degree = 1;

  auto* check = app.add_subcommand("check", "Verify defining identities of an instance file");
  check->add_option("file", path, "instance file")->required();
  check->add_option("--what", what, "algebra|rb|rep|rbrep|paired")->required();
  check->add_flag("--strict", strict, "reject products listed without their explicit mirror");

  auto* construct = app.add_subcommand("construct", "Build a derived structure and re-validate");
  construct->add_option("file", path, "instance file")->required();
  construct
      ->add_option("--kind", kind,
                   "derived|semidirect|doubling|quadruple|dual|hat|bar|tilde|reflect|scale|"
                   "conjugate")
      ->required();
  construct->add_flag("--strict", strict);
  construct->add_option("--sign", sign, "gl(V) action sign, +1 or -1 (default +1)");
  construct->add_option("--mu", mu, "scaling factor for --kind scale");
  construct->add_option("--lambda", lambda, "weight for doubling/quadruple (default: file weight)");
  construct->add_option("--psi", psi, "automorphism matrix for --kind conjugate, JSON rows");
  construct->add_option("-o,--output", out_path,
                        "save the constructed instance file here (report still on stdout)");

  auto* cohomology = app.add_subcommand("cohomology", "Exact Rota-Baxter cohomology report");
  cohomology->add_option("file", path, "instance file")->required();
  cohomology->add_option("--degree", degree, "0 or 1")->required();
  cohomology->add_flag("--strict", strict);
  cohomology->add_option("-o,--output", out_path);

  auto* constraints =
      app.add_subcommand("constraints", "Polynomial system cutting out the operators");
  constraints->add_option("file", path, "instance file")->required();
  constraints->add_flag("--strict", strict);
  constraints->add_option("-o,--output", out_path);

  auto* catalog = app.add_subcommand("catalog", "Built-in worked instances");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "List catalog entries");
  cat_list->add_option("-o,--output", out_path);
  auto* cat_show = catalog->add_subcommand("show", "Show one entry with its families");
  cat_show->add_option("id", id, "entry id")->required();
  cat_show->add_option("-o,--output", out_path);
  auto* cat_export = catalog->add_subcommand("export", "Export an entry as an instance file");
  cat_export->add_option("id", id, "entry id")->required();
  cat_export->add_option("--family", family, "operator family to instantiate");
  cat_export->add_option("--params", params, "comma-separated name=value parameter list");
  cat_export->add_option("-o,--output", out_path);

  auto* verify =
      app.add_subcommand("verify-paper", "Run the whole catalog reproduction suite");
  verify->add_option("-o,--output", out_path);

  check->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(path, what, strict, out_path);
    if (construct->parsed())
      return cmd_construct(path, kind, strict, sign, mu, lambda, psi, out_path);
    if (cohomology->parsed()) return cmd_cohomology(path, degree, strict, out_path);
    if (constraints->parsed()) return cmd_constraints(path, strict, out_path);
    if (catalog->parsed()) {
      if (cat_list->parsed()) return cmd_catalog_list(out_path);
      if (cat_show->parsed()) return cmd_catalog_show(id, out_path);
      if (cat_export->parsed()) return cmd_catalog_export(id, family, params, out_path);
    }
    if (verify->parsed()) return cmd_verify_paper(out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
