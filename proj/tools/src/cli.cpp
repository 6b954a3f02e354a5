#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "graded_lab/errors.hpp"
#include "graded_lab/integer_backend.hpp"
#include "graded_lab/harness/report.hpp"
#include "graded_lab/localization.hpp"
#include "graded_lab/primality.hpp"

namespace graded_lab::cli {

namespace {

using harness::Json;

std::string ring_set(const GradedRing& r, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (Elem x : s) {
    out += (first ? "" : ",") + r.label(x);
    first = false;
  }
  return out + "}";
}

std::string module_set(const GradedModule& m, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (Elem x : s) {
    out += (first ? "" : ",") + m.label(x);
    first = false;
  }
  return out + "}";
}

Json labels_json(const GradedRing& r, const Subset& s) {
  Json a = Json::array();
  for (Elem x : s) a.push_back(r.label(x));
  return a;
}

void print_violations(const ValidationError& e, std::ostream& err) {
  err << "axiom violations:\n";
  for (const auto& v : e.violations()) {
    err << "  " << v.axiom << ": " << v.detail;
    if (!v.witnesses.empty()) {
      err << " [";
      for (std::size_t i = 0; i < v.witnesses.size(); ++i) err << (i ? "," : "") << v.witnesses[i];
      err << "]";
    }
    err << "\n";
  }
}

int cmd_validate(const std::string& file, std::ostream& out) {
  const harness::Instance inst = harness::build_instance(harness::load_json_file(file));
  const GradedRing& r = *inst.ring;
  const GradedModule& m = *inst.module;
  out << "instance: " << inst.name << "\n";
  out << "ring: order " << r.order() << ", grading group of order " << r.group().size() << "\n";
  out << "module: order " << m.order() << "\n";
  for (Degree g = 0; g < r.group().size(); ++g) {
    if (r.component(g).size() <= 1 && m.component(g).size() <= 1) continue;
    out << "  degree " << r.group().label(g) << ": R " << ring_set(r, r.component(g)) << ", M "
        << module_set(m, m.component(g)) << "\n";
  }
  for (const auto& w : r.warnings()) out << "warning: " << w.axiom << ": " << w.detail << "\n";
  for (const auto& w : m.warnings()) out << "warning: " << w.axiom << ": " << w.detail << "\n";
  if (!inst.surrogate_note.empty()) out << "note: " << inst.surrogate_note << "\n";
  out << "valid\n";
  return kExitOk;
}

int classify_integer(const harness::Instance& inst, bool json, std::ostream& out) {
  const IntegerModel z(*inst.integer_modulus);
  const GradedRing& r = *z.surrogate().ring;
  if (json) {
    Json j;
    j["instance"] = inst.name;
    j["gw_residues"] = labels_json(r, z.gw_residues());
    j["g_residues"] = labels_json(r, z.g_residues());
    j["weakly_primal"] = z.is_weakly_primal();
    j["primal"] = z.is_primal();
    j["weakly_prime"] = z.is_weakly_prime();
    j["weakly_primary"] = z.is_weakly_primary();
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "instance: " << inst.name << "\n";
  out << "GW(N): nonzero integers with residue in " << ring_set(r, z.gw_residues()) << " mod " << z.modulus() << "\n";
  out << "G(N): integers with residue in " << ring_set(r, z.g_residues()) << " mod " << z.modulus() << "\n";
  out << "weakly primal: " << (z.is_weakly_primal() ? "yes" : "no") << "\n";
  out << "primal: " << (z.is_primal() ? "yes" : "no") << "\n";
  out << "weakly prime: " << (z.is_weakly_prime() ? "yes" : "no") << "\n";
  out << "weakly primary: " << (z.is_weakly_primary() ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_classify(const std::string& file, const std::string& selector, bool json, std::ostream& out) {
  const harness::Instance inst = harness::build_instance(harness::load_json_file(file));
  if (inst.is_integer()) return classify_integer(inst, json, out);
  GradedSubmodule n = GradedSubmodule::zero(inst.module);
  if (!selector.empty()) {
    n = harness::select_submodule(inst.module, selector);
  } else if (inst.fixed_submodule) {
    n = GradedSubmodule::from_members(inst.module, *inst.fixed_submodule);
  } else if (!inst.submodules.empty()) {
    n = inst.submodules.front();
  } else {
    throw harness::InputError("no submodule selected (use --submodule)");
  }
  const PrimalityVerdict v = classify(n);
  const GradedRing& r = *inst.ring;
  const GradedModule& m = *inst.module;
  std::optional<QuotientModel> over_z;
  if (selector.empty() && inst.fixed_submodule && inst.descriptor.contains("zinstance")) {
    const Json& z = inst.descriptor.at("zinstance");
    over_z.emplace(ZnQuotient{z.at("n").get<long>(), z.at("d").get<long>()});
  }
  if (json) {
    Json j;
    j["instance"] = inst.name;
    Json members = Json::array();
    for (Elem x : v.submodule) members.push_back(m.label(x));
    j["submodule"] = members;
    j["gw"] = labels_json(r, v.gw.members);
    j["g"] = labels_json(r, v.g.members);
    j["w"] = labels_json(r, v.w.members);
    j["weakly_primal"] = v.is_weakly_primal;
    j["primal"] = v.is_primal;
    j["weakly_prime"] = v.is_weakly_prime;
    j["weakly_primary"] = v.is_weakly_primary;
    if (v.adjoint) j["adjoint"] = labels_json(r, v.adjoint->members());
    if (over_z) {
      j["over_z"] = {{"weakly_primal", over_z->is_weakly_primal()}, {"primal", over_z->is_primal()},
                     {"weakly_prime", over_z->is_weakly_prime()}, {"weakly_primary", over_z->is_weakly_primary()}};
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "instance: " << inst.name << "\n";
  out << "N = " << module_set(m, v.submodule) << "\n";
  out << "GW(N) = " << ring_set(r, v.gw.members) << "\n";
  for (Elem x : v.gw.members) {
    if (v.gw.witness[x]) {
      out << "  " << r.label(x) << " * " << m.label(*v.gw.witness[x]) << " = " << m.label(m.act(x, *v.gw.witness[x]))
          << "\n";
    }
  }
  out << "G(N) = " << ring_set(r, v.g.members) << "\n";
  out << "W(N) = " << ring_set(r, v.w.members) << "\n";
  out << "weakly primal: " << (v.is_weakly_primal ? "yes" : "no");
  if (v.adjoint) out << ", adjoint " << ring_set(r, v.adjoint->members());
  if (!v.weakly_primal_failure.ok) out << " (" << v.weakly_primal_failure.failed << ")";
  out << "\n";
  out << "primal: " << (v.is_primal ? "yes" : "no");
  if (!v.primal_failure.ok) out << " (" << v.primal_failure.failed << ")";
  out << "\n";
  out << "weakly prime: " << (v.is_weakly_prime ? "yes" : "no");
  if (v.weakly_prime_counterexample) {
    out << " (x = " << r.label(v.weakly_prime_counterexample->first)
        << ", m = " << m.label(v.weakly_prime_counterexample->second) << ")";
  }
  out << "\n";
  out << "weakly primary: " << (v.is_weakly_primary ? "yes" : "no");
  if (v.weakly_primary_counterexample) {
    out << " (x = " << r.label(v.weakly_primary_counterexample->first)
        << ", m = " << m.label(v.weakly_primary_counterexample->second) << ")";
  }
  out << "\n";
  if (over_z) {
    out << "over the base ring Z: weakly primal: " << (over_z->is_weakly_primal() ? "yes" : "no")
        << ", primal: " << (over_z->is_primal() ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_localize(const std::string& file, const std::string& s_text, const std::string& selector,
                 std::ostream& out) {
  const harness::Instance inst = harness::build_instance(harness::load_json_file(file));
  if (inst.is_integer()) throw harness::InputError("localize needs a finite table instance");
  const std::vector<Elem> gens = harness::parse_elements(s_text);
  for (Elem g : gens) {
    if (g >= inst.ring->order()) throw harness::InputError("element " + std::to_string(g) + " is out of range");
  }
  const auto s = multiplicative_closure(inst.ring, gens);
  if (!s) throw harness::InputError("the generated multiplicative set contains 0 or a non-homogeneous element");
  const LocalizedModulePtr lm = localize_module(inst.module, *s);
  const LocalizedRing& lr = *lm->localized_ring();
  const GradedRing& r = *inst.ring;
  const GradedRing& rs = *lr.ring();
  const GradedModule& ms = *lm->module();
  out << "instance: " << inst.name << "\n";
  out << "S = " << ring_set(r, s->members()) << "\n";
  out << "R_S: " << rs.order() << " classes\n";
  for (Elem c = 0; c < rs.order(); ++c) {
    const auto [a, d] = lr.representative(c);
    out << "  " << rs.label(c) << " = " << r.label(a) << "/" << r.label(d) << "\n";
  }
  out << "phi on R:";
  for (Elem x = 0; x < r.order(); ++x) out << " " << r.label(x) << "->" << rs.label(lr.phi(x));
  out << "\n";
  out << "M_S: " << ms.order() << " classes\n";
  for (Elem c = 0; c < ms.order(); ++c) {
    const auto [a, d] = lm->representative(c);
    out << "  " << ms.label(c) << " = " << inst.module->label(a) << "/" << r.label(d) << "\n";
  }
  out << "phi on M:";
  for (Elem x = 0; x < inst.module->order(); ++x) out << " " << inst.module->label(x) << "->" << ms.label(lm->phi(x));
  out << "\n";
  for (Degree g = 0; g < rs.group().size(); ++g) {
    if (rs.component(g).size() <= 1 && ms.component(g).size() <= 1) continue;
    out << "  degree " << rs.group().label(g) << ": R_S " << ring_set(rs, rs.component(g)) << ", M_S "
        << module_set(ms, ms.component(g)) << "\n";
  }
  const auto& eq = lm->classes().equivalence;
  out << "equivalence relation: " << (eq.ok && lr.classes().equivalence.ok ? "ok" : "FAILED") << " ("
      << eq.pairs_checked + lr.classes().equivalence.pairs_checked << " pairs)\n";
  const HomomorphismCheck hr = check_phi(lr);
  const HomomorphismCheck hm = check_phi(*lm);
  out << "phi homomorphism of degree e: " << (hr.ok && hm.ok ? "ok" : "FAILED " + hr.failed + hm.failed) << "\n";
  if (!selector.empty()) {
    const GradedSubmodule n = harness::select_submodule(inst.module, selector);
    const GradedSubmodule ns = extend_submodule(*lm, n);
    const GradedSubmodule back = contract(*lm, ns);
    out << "N = " << module_set(*inst.module, n.members()) << "\n";
    out << "N_S = " << module_set(ms, ns.members()) << "\n";
    out << "N_S contracted = " << module_set(*inst.module, back.members()) << "\n";
  }
  if (!(eq.ok && lr.classes().equivalence.ok && hr.ok && hm.ok)) return kExitInternal;
  return kExitOk;
}

int cmd_claims_run(const std::optional<std::string>& budget_file, const std::vector<std::string>& claims,
                   const std::optional<std::string>& out_path, std::size_t jobs, bool json, std::ostream& out) {
  harness::RunOptions opt;
  opt.budget = harness::load_budget(budget_file);
  opt.claims = claims;
  opt.jobs = jobs;
  const harness::RunResult run = harness::run_claims(opt);
  const Json report = harness::report_json(run);
  if (out_path) {
    std::ofstream f(*out_path);
    if (!f) throw harness::InputError("cannot write " + *out_path);
    f << report.dump(2) << "\n";
  }
  if (json) {
    out << report.dump(2) << "\n";
  } else {
    out << harness::report_text(run);
  }
  const bool sound = run.errors.empty() && run.certificates_verified == run.certificates &&
                     run.factorizations_valid == run.factorizations.size();
  return sound ? kExitOk : kExitInternal;
}

int cmd_examples(std::ostream& out) {
  harness::RunOptions opt;
  opt.claims = {"exm1.1", "exm1.2", "exm1.3", "exm1.4"};
  opt.instances = std::vector<Json>{};
  const harness::RunResult run = harness::run_claims(opt);
  out << harness::examples_text(run);
  for (const auto& e : run.errors) out << "error: " << e << "\n";
  return run.errors.empty() && run.certificates_verified == run.certificates ? kExitOk : kExitInternal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded weakly primal submodules: classification, localization and claim checking", "graded-lab"};
  app.require_subcommand(1);

  std::string file, selector, s_text;
  bool json = false;

  auto* validate = app.add_subcommand("validate", "Parse and validate a structure file");
  validate->add_option("file", file, "Structure file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Print the primality verdict of a submodule");
  classify_cmd->add_option("file", file, "Structure file")->required();
  classify_cmd->add_option("--submodule", selector, "gen:<elements>, members:<elements> or index:<k>");
  classify_cmd->add_flag("--json", json, "Print JSON");

  auto* claims_cmd = app.add_subcommand("claims", "Claim checking");
  claims_cmd->require_subcommand(1);
  auto* run_cmd = claims_cmd->add_subcommand("run", "Check every claim over the instance stream");
  std::optional<std::string> budget_file, out_path;
  std::vector<std::string> claim_ids;
  std::size_t jobs = 1;
  run_cmd->add_option("--budget", budget_file, "Budget file (JSON)");
  run_cmd->add_option("--claim", claim_ids, "Claim id (repeatable)");
  run_cmd->add_option("--out", out_path, "Write the JSON report here");
  run_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  run_cmd->add_flag("--json", json, "Print the JSON report instead of the summary");

  auto* examples = app.add_subcommand("examples", "Worked examples");
  examples->require_subcommand(1);
  auto* reproduce = examples->add_subcommand("reproduce", "Asserted against computed verdicts, side by side");

  auto* localize_cmd = app.add_subcommand("localize", "Print R_S, M_S and phi");
  localize_cmd->add_option("file", file, "Structure file")->required();
  localize_cmd->add_option("--s", s_text, "Generators of S, comma separated")->required();
  localize_cmd->add_option("--submodule", selector, "Also show N_S and its contraction");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*validate) return cmd_validate(file, out);
    if (*classify_cmd) return cmd_classify(file, selector, json, out);
    if (*run_cmd) return cmd_claims_run(budget_file, claim_ids, out_path, jobs, json, out);
    if (*reproduce) return cmd_examples(out);
    if (*localize_cmd) return cmd_localize(file, s_text, selector, out);
  } catch (const ValidationError& e) {
    print_violations(e, err);
    return kExitInput;
  } catch (const harness::InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace graded_lab::cli
