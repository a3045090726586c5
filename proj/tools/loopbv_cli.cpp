// loopbv: build the BV algebras H_*(Omega G) (x) H(M) from finite
// presentations, print B and bracket tables, and machine-verify the axioms.
#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "loopbv/errors.hpp"
#include "loopbv/expr.hpp"
#include "loopbv/model_io.hpp"
#include "loopbv/models.hpp"
#include "loopbv/semidirect.hpp"
#include "loopbv/sweep.hpp"

using namespace loopbv;

namespace {

struct Common {
  std::string model;
  std::string catalog_dir;
  int window = 6;
  int exp_cap = -1;  // -1: verify -> 2, table -> window
  unsigned long seed = 0;
  std::string format = "text";
  bool serial = false;

  SweepOptions sweep(int default_cap) const {
    SweepOptions opts;
    opts.window.degree_bound = window;
    opts.window.free_exp_cap = exp_cap >= 0 ? exp_cap : default_cap;
    opts.parallel = !serial;
    return opts;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--model", c.model, "model file path or catalog name (e.g. SU(3))")->required();
  cmd->add_option("--catalog-dir", c.catalog_dir, "directory holding the catalog model files");
  cmd->add_option("--window,-D", c.window, "degree window bound")->check(CLI::PositiveNumber);
  cmd->add_option("--exp-cap", c.exp_cap, "cap on free pi1 exponents in windows");
  cmd->add_option("--seed", c.seed, "seed for sampled sweeps (fixed seed => identical report)");
  cmd->add_option("--format", c.format, "text | structured")
      ->check(CLI::IsMember({"text", "structured", "json"}));
  cmd->add_flag("--serial", c.serial, "run sweeps on the serial reference path");
}

void print_reports(const Common& c, const std::vector<CheckReport>& reports) {
  if (c.format == "text")
    std::fputs(render_text(reports).c_str(), stdout);
  else
    std::fputs(render_json(reports).c_str(), stdout);
}

int report_status(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return 1;
  return 0;
}

std::string describe_generator(const Signature& sig, int id) {
  const GeneratorSpec& g = sig.gen(id);
  std::string kind;
  switch (g.kind) {
    case GenKind::GroupFree: kind = "group-free"; break;
    case GenKind::GroupTorsion: kind = "group-torsion(" + std::to_string(g.torsion_order) + ")"; break;
    case GenKind::PolyEven: kind = "poly-even"; break;
    case GenKind::ExtOdd: kind = "ext-odd"; break;
  }
  return "  " + g.name + ": " + kind + ", degree " + std::to_string(g.degree);
}

int cmd_build(const Common& c) {
  ParsedModel parsed = resolve_model(c.model, c.catalog_dir);
  const Signature& sig = *parsed.model.sig;
  std::printf("model: %s (kind %s)\n", parsed.model.name.c_str(), parsed.kind.c_str());
  std::printf("generators (%d):\n", sig.generator_count());
  for (int id = 0; id < sig.generator_count(); ++id)
    std::printf("%s\n", describe_generator(sig, id).c_str());
  if (const TableFactor* t = sig.table()) {
    std::printf("manifold table classes (%d):\n", t->class_count());
    for (int k = 0; k < t->class_count(); ++k)
      std::printf("  %s: degree %d\n", t->names[k].c_str(), t->degrees[k]);
  }
  if (!parsed.samelson.zero_default)
    std::printf("samelson table: %zu entries\n", parsed.samelson.entries.size());
  return 0;
}

int cmd_apply_b(const Common& c, const std::string& a_expr) {
  ParsedModel parsed = resolve_model(c.model, c.catalog_dir);
  Element a = parse_monomial_expression(parsed.model.sig, a_expr);
  std::printf("B(%s) = %s\n", a.str().c_str(), apply_B(parsed.model, a).str().c_str());
  return 0;
}

int cmd_bracket(const Common& c, const std::string& a_expr, const std::string& b_expr) {
  ParsedModel parsed = resolve_model(c.model, c.catalog_dir);
  Element a = parse_monomial_expression(parsed.model.sig, a_expr);
  Element b = parse_monomial_expression(parsed.model.sig, b_expr);
  std::printf("{%s, %s} = %s\n", a.str().c_str(), b.str().c_str(),
              bracket(parsed.model, a, b).str().c_str());
  return 0;
}

int cmd_table(const Common& c) {
  ParsedModel parsed = resolve_model(c.model, c.catalog_dir);
  const SweepOptions opts = c.sweep(c.window);
  std::printf("deg  monomial  ->  B(monomial)\n");
  for (const Monomial& m : enumerate_window(*parsed.model.sig, opts.window)) {
    Element b = apply_B(parsed.model, Element::monomial(parsed.model.sig, m));
    std::printf("%3d  %s  ->  %s\n", parsed.model.sig->degree(m),
                parsed.model.sig->to_string(m).c_str(), b.str().c_str());
  }
  return 0;
}

int cmd_verify(const Common& c) {
  ParsedModel parsed = resolve_model(c.model, c.catalog_dir);
  const SweepOptions opts = c.sweep(2);
  std::vector<CheckReport> reports;
  reports.push_back(run_algebra_checks(parsed.model.sig, opts));
  reports.push_back(run_hopf_checks(parsed.model.sig, opts, c.seed));
  reports.push_back(run_axiom_sweep(parsed.model, opts));
  reports.push_back(run_subalgebra_checks(parsed.model, opts));
  if (parsed.lie_data) {
    reports.push_back(run_cap_sign_checks(parsed.model));
    reports.push_back(run_formula_agreement(parsed.model, opts));
    reports.push_back(check_morphism_into_model(parsed.model, parsed.samelson, opts));
    reports.push_back(check_semidirect_axioms(parsed.model, parsed.samelson, opts));
    reports.push_back(check_pi1_grouplike_identity(parsed.model, opts));
  }
  print_reports(c, reports);
  return report_status(reports);
}

int cmd_decompose(const Common& c) {
  ParsedModel parsed = resolve_model(c.model, c.catalog_dir);
  if (!parsed.lie_data) throw SchemaError("decompose applies to lie_group models");
  const SweepOptions opts = c.sweep(2);
  DecompositionReport rep = decomposition_check(*parsed.lie_data, opts.window);
  if (c.format == "text") {
    if (rep.ok())
      std::printf("Theta conjugation matches on %lld monomials\n", rep.checked);
    else
      std::printf(
          "Theta conjugation FAILED on %lld of %lld monomials\nfirst: %s\n  lhs = %s\n  rhs = %s\n",
          rep.mismatched, rep.checked, rep.first_input.c_str(), rep.first_lhs.c_str(),
          rep.first_rhs.c_str());
  } else {
    CheckReport as_check;
    as_check.title = "decomposition: " + rep.model_name;
    as_check.set("theta_conjugation", rep.checked, rep.mismatched);
    if (!rep.ok())
      as_check.examples.push_back(
          {"theta_conjugation", {rep.first_input}, rep.first_lhs, rep.first_rhs});
    print_reports(c, {as_check});
  }
  return rep.ok() ? 0 : 1;
}

int cmd_semidirect_check(const Common& c) {
  ParsedModel parsed = resolve_model(c.model, c.catalog_dir);
  if (!parsed.lie_data) throw SchemaError("semidirect-check applies to lie_group models");
  const SweepOptions opts = c.sweep(2);
  std::vector<CheckReport> reports;
  reports.push_back(check_morphism_into_model(parsed.model, parsed.samelson, opts));
  reports.push_back(check_semidirect_axioms(parsed.model, parsed.samelson, opts));
  reports.push_back(check_pi1_grouplike_identity(parsed.model, opts));
  print_reports(c, reports);
  return report_status(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact BV algebras on loop homology of Lie groups and G-manifolds"};
  app.require_subcommand(1);

  Common c;
  std::string a_expr, b_expr;

  auto* build = app.add_subcommand("build", "parse a model and print its presentation");
  add_common(build, c);

  auto* applyb = app.add_subcommand("apply-b", "apply B to a monomial expression");
  add_common(applyb, c);
  applyb->add_option("--a", a_expr, "monomial expression, e.g. 'x1^3*sx2^2*d1*d2'")->required();

  auto* br = app.add_subcommand("bracket", "Gerstenhaber bracket of two expressions");
  add_common(br, c);
  br->add_option("--a", a_expr, "left argument")->required();
  br->add_option("--b", b_expr, "right argument")->required();

  auto* table = app.add_subcommand("table", "print B on every window basis monomial");
  add_common(table, c);

  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  add_common(verify, c);

  auto* dec = app.add_subcommand("decompose", "check the sphere-factor decomposition");
  add_common(dec, c);

  auto* sd = app.add_subcommand("semidirect-check", "check the semidirect Lie morphism");
  add_common(sd, c);

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(c);
    if (applyb->parsed()) return cmd_apply_b(c, a_expr);
    if (br->parsed()) return cmd_bracket(c, a_expr, b_expr);
    if (table->parsed()) return cmd_table(c);
    if (verify->parsed()) return cmd_verify(c);
    if (dec->parsed()) return cmd_decompose(c);
    if (sd->parsed()) return cmd_semidirect_check(c);
  } catch (const SchemaError& e) {
    std::fprintf(stderr, "schema error: %s\n", e.what());
    return 2;
  } catch (const ModelIncompleteError& e) {
    std::fprintf(stderr, "model incomplete: %s\n", e.what());
    return 2;
  } catch (const SignatureError& e) {
    std::fprintf(stderr, "signature error: %s\n", e.what());
    return 2;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 2;
  }
  return 0;
}
