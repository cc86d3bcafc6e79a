#include <algorithm>
#include <string>

#include "jjrb/catalog.hpp"
#include "jjrb/cohomology.hpp"
#include "jjrb/error.hpp"
#include "jjrb/parallel.hpp"
#include "jjrb/rng.hpp"

namespace jjrb {

namespace {

class ReportBuilder {
 public:
  void add(int criterion, const std::string& claim, const std::string& source, bool ok,
           const std::string& witness = "") {
    report_.results.push_back({criterion, claim, source, ok ? "PASS" : "FAIL", witness});
    if (ok) {
      ++report_.passed;
    } else {
      ++report_.failed;
    }
  }

  void flag(int criterion, const std::string& claim, const std::string& source,
            const std::string& witness) {
    report_.results.push_back({criterion, claim, source, "FLAGGED", witness});
    ++report_.flagged;
  }

  VerifyReport take() { return std::move(report_); }

 private:
  VerifyReport report_;
};

std::string pair_witness(const std::optional<std::array<std::size_t, 2>>& w) {
  if (!w) return "";
  return "(e" + std::to_string((*w)[0] + 1) + ", e" + std::to_string((*w)[1] + 1) + ")";
}

std::string dims_text(std::size_t z, std::size_t b, std::size_t h) {
  return "dim Z1 = " + std::to_string(z) + ", dim B1 = " + std::to_string(b) +
         ", dim H1 = " + std::to_string(h);
}

/// The nilpotent 3-dim representation of the 2-dim catalog algebra with
/// rho(e1) = shift, rho(e2) = -2 shift^2; unlike the adjoint, it is nonzero
/// on products, which is what exposes the gl(V) sign issue.
RBRepresentation faithful_dim2_witness() {
  const CatalogEntry& entry = catalog_get("dim2");
  Matrix shift(3, 3);
  shift.at(1, 0) = Rational(1);
  shift.at(2, 1) = Rational(1);
  Representation rep{entry.algebra, 3, {shift, (shift * shift).scaled(Rational(-2))}};
  RBOperator rb = canonical_instance(entry);
  return RBRepresentation{std::move(rep), std::move(rb), Matrix(3, 3)};
}

void degree0_claims(ReportBuilder& out) {
  for (const CatalogEntry& entry : catalog_entries()) {
    // the canonical instance plus deterministic samples from each family
    std::vector<RBOperator> instances = {canonical_instance(entry)};
    for (const OperatorFamily& family : entry.families) {
      for (const auto& params : family_samples(entry, family, 3))
        instances.push_back(instantiate(entry, family, params));
    }
    bool all_zero = true;
    for (const RBOperator& op : instances) {
      CohomologyReport rep = cohomology_rb(adjoint_rb_rep(op), 0);
      all_zero = all_zero && rep.dim_cohomology == 0 && rep.dim_cocycles == 0;
    }
    out.add(1,
            "H0_RB vanishes (" + entry.id + ", " + std::to_string(instances.size()) +
                " instances)",
            "degree-0 computation: Z0 = ker(v -> (d0 v, -v)) = 0", all_zero);
  }
}

void dim3_claims(ReportBuilder& out) {
  const CatalogEntry& entry = catalog_get("dim3");
  RBRepresentation rr = adjoint_rb_rep(canonical_instance(entry));
  CohomologyReport rep = cohomology_rb(rr, 1);
  bool ok = rep.dim_cocycles == 4 && rep.dim_coboundaries == 3 && rep.dim_cohomology == 1;
  out.add(2, "dim3 instance: antiderivations 4, inner 3, H1_RB = 1",
          "3-dim worked example, lambda = 1, r11 = r12 = 1",
          ok, dims_text(rep.dim_cocycles, rep.dim_coboundaries, rep.dim_cohomology));

  // Displayed class family at d11 = 1 and r31 = r32 = 0:
  // (diag(1,1,-2), (0,0,0)). Unlike the 2-dim display, this one is exact.
  Matrix eta(3, 3);
  eta.at(0, 0) = Rational(1);
  eta.at(1, 1) = Rational(1);
  eta.at(2, 2) = Rational(-2);
  Vec flat = flatten(RBCochain1{Cochain::from_matrix(eta), zero_vec(3)});
  out.add(2, "dim3 instance: displayed class (diag(1,1,-2), 0) is a cocycle off the coboundaries",
          "3-dim worked example, displayed H1 representative family",
          rep.cocycle_basis.contains(flat) && !rep.coboundary_basis.contains(flat), "");
}

void dim2_claims(ReportBuilder& out) {
  const CatalogEntry& entry = catalog_get("dim2");
  RBRepresentation rr = adjoint_rb_rep(canonical_instance(entry));
  CohomologyReport rep = cohomology_rb(rr, 1);
  bool dims_ok = rep.dim_cocycles == 3 && rep.dim_coboundaries == 2 && rep.dim_cohomology == 1;
  out.add(3, "dim2 instance: H1_RB has dimension 1",
          "2-dim worked example, weight 0, I = [[0,0],[1,1]]",
          dims_ok, dims_text(rep.dim_cocycles, rep.dim_coboundaries, rep.dim_cohomology));

  // Displayed representative (diag(1,-2), (3,0)), taken literally.
  Matrix eta(2, 2);
  eta.at(0, 0) = Rational(1);
  eta.at(1, 1) = Rational(-2);
  Vec v_displayed = {Rational(3), Rational(0)};
  Vec v_corrected = {Rational(-3), Rational(0)};
  auto flatten_pair = [](const Matrix& h, const Vec& v) {
    Vec flat = flatten(RBCochain1{Cochain::from_matrix(h), v});
    return flat;
  };
  Vec cand = flatten_pair(eta, v_displayed);
  bool in_z = rep.cocycle_basis.contains(cand);
  bool indep = !rep.coboundary_basis.contains(cand);
  Vec cand_fixed = flatten_pair(eta, v_corrected);
  bool fixed_in_z = rep.cocycle_basis.contains(cand_fixed);
  bool fixed_indep = !rep.coboundary_basis.contains(cand_fixed);
  std::string witness;
  if (!(in_z && indep)) {
    witness =
        "computed: (diag(1,-2), (3,0)) is not a cocycle (compatibility equation at e1 gives "
        "-3*e2 on the left vs 3*e2 on the right); the sign-corrected pair (diag(1,-2), (-3,0)) ";
    witness += (fixed_in_z && fixed_indep) ? "is a cocycle outside the coboundary span"
                                           : "also fails";
  }
  out.add(3, "dim2 instance: displayed class (diag(1,-2), (3,0)) is a cocycle off the coboundaries",
          "2-dim worked example, displayed H1 representative family", in_z && indep, witness);

  out.flag(3, "dim2 instance: antiderivation space dimension",
           "2-dim worked example states dimension 5",
           "computed dimension is 3 (parameters a11, a21, x2); the quotient dimension 1 is "
           "unaffected");
}

void family_claims(ReportBuilder& out) {
  for (const CatalogEntry& entry : catalog_entries()) {
    for (const OperatorFamily& family : entry.families) {
      auto samples = family_samples(entry, family, 10);
      // Samples are independent grid evaluations; check them concurrently.
      std::vector<std::string> failures(samples.size());
      parallel_for(samples.size(), [&](std::size_t s) {
        try {
          CheckRBResult res = check_rb(instantiate(entry, family, samples[s]));
          if (!res.ok) failures[s] = "failed at basis pair " + pair_witness(res.witness);
        } catch (const Error& e) {
          failures[s] = e.what();
        }
      });
      std::size_t ok_count = 0;
      std::string witness;
      for (const std::string& f : failures) {
        if (f.empty()) {
          ++ok_count;
        } else if (witness.empty()) {
          witness = f;
        }
      }
      out.add(4,
              entry.id + "/" + family.name + ": 10 parameter samples satisfy the Rota-Baxter "
              "identity",
              "operator family display (" + entry.description + "), excluded locus " +
                  family.excluded_text,
              ok_count == samples.size() && samples.size() == 10, witness);
    }
  }

  // Stated excluded-locus condition for the weighted 2-dim family.
  const CatalogEntry& dim2 = catalog_get("dim2");
  const OperatorFamily& lam_family = catalog_family(dim2, "lambda-family");
  RBOperator at_half = instantiate(
      dim2, lam_family,
      {{"lambda", Rational(2)}, {"a1", Rational(1)}, {"a2", Rational(1)}});
  bool half_ok = check_rb(at_half).ok;
  out.flag(4, "dim2 lambda-family: stated parameter condition",
           "operator family condition stated as a1 != lambda/2",
           std::string("the derivation forces 2*a1 + lambda != 0, i.e. a1 != -lambda/2; the "
                       "point a1 = lambda/2 = 1 (lambda = 2) is ") +
               (half_ok ? "a valid operator" : "invalid (unexpected)"));
}

void constraint_claims(ReportBuilder& out) {
  struct Case {
    const char* id;
    std::vector<Poly> (*displayed)(const Rational&);
  };
  const Case cases[] = {{"dim2", displayed_constraints_dim2},
                        {"dim4-G", displayed_constraints_dim4}};
  for (const Case& c : cases) {
    const CatalogEntry& entry = catalog_get(c.id);
    std::size_t n = entry.algebra.dim();
    for (long lam_int : {0L, 1L}) {
      Rational lambda(lam_int);
      PolySystem sys = rb_constraint_system(entry.algebra, lambda);
      std::vector<Poly> displayed = c.displayed(lambda);

      // 5 on-variety assignments from the matching families, 5 generic ones.
      std::vector<std::vector<Rational>> assignments;
      for (const OperatorFamily& family : entry.families) {
        if (family.fixed_weight && *family.fixed_weight != lambda) continue;
        for (auto& params : family_samples(entry, family, 5)) {
          if (!family.fixed_weight) params["lambda"] = lambda;
          try {
            assignments.push_back(instantiate(entry, family, params).op.entries());
          } catch (const Error&) {
            continue;  // pinning lambda may land on the excluded locus
          }
          if (assignments.size() >= 5) break;
        }
        if (assignments.size() >= 5) break;
      }
      DetRng rng(0x5eed + static_cast<std::uint64_t>(lam_int) + n);
      while (assignments.size() < 10) {
        std::vector<Rational> a;
        a.reserve(n * n);
        for (std::size_t i = 0; i < n * n; ++i) a.push_back(rng.sample_scalar_or_zero());
        assignments.push_back(std::move(a));
      }

      std::size_t vanishing = 0, nonvanishing = 0;
      bool equivalent = true;
      for (const auto& a : assignments) {
        bool gen_zero = true;
        for (const Rational& r : eval_constraints(sys, a)) gen_zero = gen_zero && r.is_zero();
        bool disp_zero = true;
        for (const Poly& p : displayed) disp_zero = disp_zero && p.eval(a).is_zero();
        if (gen_zero != disp_zero) equivalent = false;
        (gen_zero ? vanishing : nonvanishing)++;
      }
      out.add(5,
              c.id == std::string("dim2")
                  ? "dim2 constraint system matches the displayed system (weight " +
                        lambda.str() + ")"
                  : "dim4-G constraint system matches the displayed system (weight " +
                        lambda.str() + ")",
              "displayed polynomial conditions for the operator entries",
              equivalent && vanishing > 0 && nonvanishing > 0,
              "checked 10 assignments (" + std::to_string(vanishing) + " on the variety, " +
                  std::to_string(nonvanishing) + " off)");
    }
  }

  // The displayed dim4-G system is strictly weaker than the generated one:
  // its third condition couples b3 and b4, while the (e1, e1) instance of the
  // defining identity forces (2 a1 + lambda) b3 and (2 a1 + lambda) b4 to
  // vanish separately. Demonstrate at a1 = 1, lambda = 0, b2 = 1/2,
  // b3 = b4 = 1 where the displayed system vanishes and the identity fails.
  {
    const CatalogEntry& entry = catalog_get("dim4-G");
    Rational lambda(0);
    Matrix witness_op(4, 4);
    witness_op.at(0, 0) = Rational(1);
    witness_op.at(1, 1) = Rational(1, 2);
    witness_op.at(2, 1) = Rational(1);
    witness_op.at(3, 1) = Rational(1);
    bool displayed_vanishes = true;
    for (const Poly& p : displayed_constraints_dim4(lambda))
      displayed_vanishes = displayed_vanishes && p.eval(witness_op.entries()).is_zero();
    CheckRBResult direct = check_rb({entry.algebra, lambda, witness_op});
    std::string detail =
        "the displayed third condition (2a1+lambda)(b3-b4) = 0 is weaker than the generated "
        "pair (2a1+lambda)b3 = (2a1+lambda)b4 = 0; at a1 = 1, lambda = 0, b2 = 1/2, "
        "b3 = b4 = 1 the displayed system vanishes yet the defining identity fails at " +
        pair_witness(direct.witness) +
        "; the catalog families therefore carry b3 = b4 = 0";
    if (!displayed_vanishes || direct.ok)
      detail = "demonstration failed (unexpected)";
    out.flag(5, "dim4-G displayed constraint system is incomplete",
             "displayed conditions and operator family for the second 4-dim algebra", detail);
  }
}

struct TrialCandidate {
  RBOperator op;
  Matrix t_op;
  bool perturbed = false;
};

TrialCandidate sample_candidate(const CatalogEntry& entry, DetRng& rng) {
  const OperatorFamily& family = entry.families[rng.below(entry.families.size())];
  std::map<std::string, Rational> params;
  std::vector<Rational> values;
  for (std::size_t guard = 0; guard < 1000; ++guard) {
    params.clear();
    values.clear();
    for (const std::string& name : family.params) {
      Rational v = rng.sample_scalar();
      params[name] = v;
      values.push_back(v);
    }
    bool allowed = std::none_of(family.excluded.begin(), family.excluded.end(),
                                [&](const Poly& p) { return p.eval(values).is_zero(); });
    if (allowed) break;
  }
  TrialCandidate cand{instantiate(entry, family, params), Matrix(), false};
  cand.t_op = cand.op.op;  // adjoint pairing T = I
  std::size_t n = entry.algebra.dim();
  if (rng.below(2) == 1) {
    cand.perturbed = true;
    Matrix& target = rng.below(2) == 0 ? cand.op.op : cand.t_op;
    target.at(rng.below(n), rng.below(n)) += rng.sample_scalar();
  }
  return cand;
}

void property_claims(ReportBuilder& out) {
  for (const CatalogEntry& entry : catalog_entries()) {
    Representation adj = adjoint_rep(entry.algebra);
    std::uint64_t seed = 0xabcdef;
    for (char ch : entry.id) seed = seed * 131 + static_cast<unsigned char>(ch);
    DetRng rng(seed);

    bool paired_equiv = true, graph_equiv = true, semidirect_equiv = true;
    bool composite_base = true, composite_tilde = true, intertwine = true, composite_rb = true;
    std::size_t valid_trials = 0, invalid_trials = 0;
    std::string witness;

    for (std::size_t trial = 0; trial < 100; ++trial) {
      TrialCandidate cand = sample_candidate(entry, rng);
      bool direct = check_rb(cand.op).ok &&
                    rb_compat_identity(adj, cand.op.weight, cand.op.op, cand.t_op).ok;
      if (!direct) ++invalid_trials;

      PairedReport paired = check_paired(adj, cand.op.weight, cand.op.op, cand.t_op);
      if (paired.paired != direct) {
        paired_equiv = false;
        if (witness.empty()) witness = "paired mismatch at trial " + std::to_string(trial);
      }
      if (paired.graph_subalgebra != paired.paired) {
        graph_equiv = false;
        if (witness.empty()) witness = "graph mismatch at trial " + std::to_string(trial);
      }

      RBRepresentation sd_input{adj, cand.op, cand.t_op};
      RBOperator sd = semidirect_product(sd_input);
      bool sd_ok = check_jj_axioms(sd.algebra).ok() && check_rb(sd).ok;
      if (sd_ok != direct) {
        semidirect_equiv = false;
        if (witness.empty()) witness = "semidirect mismatch at trial " + std::to_string(trial);
      }

      if (!direct) continue;
      ++valid_trials;
      RBRepresentation rr{adj, cand.op, cand.t_op};
      Representation tilde = tilde_rep(rr).rep;
      if (!(assemble_d(adj, 1) * assemble_delta(adj, 0)).is_zero()) composite_base = false;
      if (!(assemble_d(tilde, 1) * assemble_delta(tilde, 0)).is_zero()) composite_tilde = false;
      // d_tilde^0 o phi2^0 = phi1^1 o delta^0 column by column.
      Matrix lhs = assemble_d(tilde, 0);
      Matrix rhs(lhs.rows(), lhs.cols());
      for (std::size_t a = 0; a < adj.dim_v; ++a) {
        Vec basis = zero_vec(adj.dim_v);
        basis[a] = Rational(1);
        Cochain delta0 = delta_n(adj, Cochain::from_vector(basis, adj.algebra.dim()));
        rhs.set_column(a, phi1(rr, delta0).coeffs);
      }
      if (!(lhs == rhs)) intertwine = false;
      if (!(assemble_d_rb1(rr) * assemble_delta_rb0(rr)).is_zero()) composite_rb = false;
    }

    // both implication directions of the equivalences need representatives of
    // both classes among the trials
    bool mix = valid_trials > 0 && invalid_trials > 0;
    const std::string src = "algebraic identities, 100 fixed-seed trials (" + entry.id + ", " +
                            std::to_string(valid_trials) + " valid / " +
                            std::to_string(invalid_trials) + " perturbed)";
    out.add(6, entry.id + ": paired operators = Rota-Baxter identity + compatibility", src,
            paired_equiv && mix, paired_equiv ? "" : witness);
    out.add(6, entry.id + ": paired operators = graph closed in the quadruple algebra", src,
            graph_equiv && mix, graph_equiv ? "" : witness);
    out.add(6, entry.id + ": semidirect operator valid exactly when the pair is valid", src,
            semidirect_equiv && mix, semidirect_equiv ? "" : witness);
    out.add(6, entry.id + ": d1 o delta0 = 0 on valid instances", src,
            composite_base && valid_trials > 0);
    out.add(6, entry.id + ": tilde d1 o tilde delta0 = 0", src,
            composite_tilde && valid_trials > 0);
    out.add(6, entry.id + ": tilde d0 = phi1 o delta0 (comparison identity)", src,
            intertwine && valid_trials > 0);
    out.add(6, entry.id + ": d_RB1 o delta_RB0 = 0", src, composite_rb && valid_trials > 0);
  }
}

void construction_claims(ReportBuilder& out) {
  for (const CatalogEntry& entry : catalog_entries()) {
    RBOperator op = canonical_instance(entry);
    RBRepresentation rr = adjoint_rb_rep(op);
    const std::string src = "derived-structure constructions on " + entry.id;

    JJAlgebra derived = derived_algebra(op);
    bool derived_ok = check_jj_axioms(derived).ok();
    AlgebraMorphism to_base{derived, entry.algebra, op.op};
    derived_ok = derived_ok && check_morphism(to_base);
    derived_ok = derived_ok && check_rb(RBOperator{derived, op.weight, op.op}).ok;
    out.add(7, entry.id + ": derived algebra is Jacobi-Jordan, I is a morphism, (A_I, I) valid",
            src, derived_ok);

    RBOperator sd = semidirect_product(rr);
    out.add(7, entry.id + ": semidirect product passes both axiom checks", src,
            check_jj_axioms(sd.algebra).ok() && check_rb(sd).ok);

    JJAlgebra dbl = doubling(entry.algebra, op.weight);
    Representation dbl_rep = doubled_rep(rr.rep, op.weight);
    out.add(7, entry.id + ": doubling is Jacobi-Jordan and the doubled action is a representation",
            src, check_jj_axioms(dbl).ok() && check_representation(dbl_rep).ok);

    JJAlgebra quad = quadruple_semidirect(rr.rep, op.weight);
    out.add(7, entry.id + ": quadruple semidirect algebra is Jacobi-Jordan", src,
            check_jj_axioms(quad).ok());

    RBRepresentation bar = bar_rep(rr);
    bool bar_ok = check_representation(bar.rep).ok && check_rb_representation(bar).ok;
    for (std::size_t i = 0; i < entry.algebra.dim() && bar_ok; ++i) {
      Matrix lhs = rr.t_op * bar.rep.action[i];
      Matrix rhs = action_of(rr.rep, op.op.column(i)) * rr.t_op;
      bar_ok = lhs == rhs;
    }
    out.add(7, entry.id + ": bar representation valid over (A_I, I), T-intertwining holds", src,
            bar_ok);

    RBRepresentation tilde = tilde_rep(rr);
    out.add(7, entry.id + ": tilde representation valid over (A_I, I)", src,
            check_representation(tilde.rep).ok && check_rb_representation(tilde).ok);

    if (op.weight.is_zero()) {
      RBRepresentation dual = dual_rep(rr);
      out.add(7, entry.id + ": dual representation valid (weight 0)", src,
              check_representation(dual.rep).ok && check_rb_representation(dual).ok);
    }

    RBRepresentation refl = reflect_rep(rr);
    out.add(7, entry.id + ": reflected pair (-lambda id - I, -lambda id - T) valid", src,
            check_rb(refl.rb).ok && check_representation(refl.rep).ok &&
                check_rb_representation(refl).ok);

    RBRepresentation sum = direct_sum({rr, rr});
    out.add(7, entry.id + ": direct sum of two adjoint copies valid", src,
            check_representation(sum.rep).ok && check_rb_representation(sum).ok);

    RBRepresentation hat = hat_gl_rep(rr, +1);
    out.add(7, entry.id + ": gl(V) representation with the corrected sign valid", src,
            check_representation(hat.rep).ok && check_rb_representation(hat).ok);
  }

  // Documented discrepancy: the displayed gl(V) action sign.
  RBRepresentation witness_rep = faithful_dim2_witness();
  RBRepresentation hat_plus = hat_gl_rep(witness_rep, +1);
  RBRepresentation hat_minus = hat_gl_rep(witness_rep, -1);
  CheckRepResult plus_res = check_representation(hat_plus.rep);
  CheckRepResult minus_res = check_representation(hat_minus.rep);
  bool demonstrated = plus_res.ok && !minus_res.ok;
  out.add(7, "gl(V) action sign: displayed sign fails the representation axiom",
          "gl(V) action display (hat rho(x) f) u = -f(rho(x) u)",
          demonstrated,
          demonstrated
              ? "witness: 3-dim faithful module over dim2, failing basis pair " +
                    pair_witness(minus_res.witness) +
                    "; sign +1 passes (catalog adjoint actions vanish on products, so there "
                    "both signs pass degenerately)"
              : "demonstration failed");
  out.flag(7, "gl(V) action sign convention",
           "gl(V) action display (hat rho(x) f) u = -f(rho(x) u)",
           "the library default is +1 (f o rho(x)); the displayed -1 violates the "
           "anticommutator axiom whenever rho is nonzero on products, see the adjacent "
           "demonstration claim");

  // Documented discrepancy: the doubling product display repeats x*y'.
  const CatalogEntry& dim2 = catalog_get("dim2");
  JJAlgebra literal = doubling_literal_display(dim2.algebra, Rational(1));
  AxiomReport literal_rep = check_jj_axioms(literal);
  JJAlgebra fixed = doubling(dim2.algebra, Rational(1));
  bool doubling_demo = !literal_rep.commutative && check_jj_axioms(fixed).ok();
  out.add(7, "doubling product: symmetric completion is Jacobi-Jordan, displayed form is not",
          "doubling product display (x,x')*(y,y') = (x*y, x*y' + x*y' + lambda x'*y')",
          doubling_demo,
          doubling_demo ? "the displayed product fails commutativity; the implemented second "
                          "component is x*y' + x'*y + lambda x'*y'"
                        : "demonstration failed");
  out.flag(7, "doubling product display",
           "doubling product display (second component)",
           "the display repeats the term x*y'; the implementation uses the symmetric "
           "completion x*y' + x'*y + lambda x'*y', which the commutativity of the product "
           "forces");
}

}  // namespace

VerifyReport verify_paper(int only_criterion) {
  ReportBuilder out;
  auto wanted = [only_criterion](int criterion) {
    return only_criterion == 0 || only_criterion == criterion;
  };
  if (wanted(1)) degree0_claims(out);
  if (wanted(2)) dim3_claims(out);
  if (wanted(3)) dim2_claims(out);
  if (wanted(4)) family_claims(out);
  if (wanted(5)) constraint_claims(out);
  if (wanted(6)) property_claims(out);
  if (wanted(7)) construction_claims(out);
  return out.take();
}

}  // namespace jjrb
