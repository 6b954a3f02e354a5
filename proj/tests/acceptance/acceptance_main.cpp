// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "graded_lab/harness/certificate.hpp"
#include "graded_lab/harness/claims.hpp"
#include "graded_lab/harness/instances.hpp"
#include "graded_lab/harness/report.hpp"
#include "graded_lab/harness/runner.hpp"
#include "graded_lab/integer_backend.hpp"
#include "graded_lab/localization.hpp"
#include "graded_lab/primality.hpp"

using namespace graded_lab;
using namespace graded_lab::harness;

namespace {

struct Outcome {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0: no time limit
  std::function<Outcome()> run;
};

GradedSubmodule zn_sub(std::size_t n, Elem g) {
  return submodule_generated_by(self_module(make_Zn(n)), std::vector<Elem>{g});
}

Outcome example_zero_in_z12() {
  Outcome o;
  auto v = classify(zn_sub(12, 0));
  o.require(v.gw.members.empty(), "GW(N) is not empty");
  o.require(v.is_weakly_primal, "N is not weakly primal");
  o.require(v.adjoint && v.adjoint->size() == 1 && v.adjoint->contains(0), "adjoint is not {0}");
  o.require(v.g.contains(3) && v.g.contains(4), "G(N) misses 3 or 4");
  o.require(!v.g.contains(1), "G(N) contains 1");
  o.require(!v.is_primal, "N is primal");
  auto e = evaluate_example(*find_claim("exm1.3"), library_ops(), default_budget());
  o.require(e.status == ClaimStatus::Confirmed, "example status " + std::string(to_string(e.status)));
  return o;
}

Outcome example_eight_in_z24() {
  Outcome o;
  auto v = classify(zn_sub(24, 8));
  o.require(v.gw.contains(2), "2 not in GW(N)");
  o.require(v.gw.contains(4), "4 not in GW(N)");
  o.require(!v.gw.contains(6), "6 in GW(N)");
  o.require(!v.is_weakly_primal, "N is weakly primal");
  auto e = evaluate_example(*find_claim("exm1.2"), library_ops(), default_budget());
  for (const auto& p : e.parts)
    if (p.statement.find("not graded weakly primal") != std::string::npos)
      o.require(p.agrees(), "conclusion not confirmed");
  return o;
}

Outcome examples_with_certificates() {
  Outcome o;
  RunOptions opt;
  opt.claims = {"exm1.1", "exm1.2", "exm1.3", "exm1.4"};
  opt.instances = std::vector<Json>{};
  RunResult run = run_claims(opt);
  o.require(run.results.size() == 4, "expected four example results");
  std::size_t certs = 0, good = 0;
  for (const auto& r : run.results) {
    if (!r.certificate) continue;
    ++certs;
    if (verify_certificate(*r.certificate).ok) ++good;
  }
  o.require(certs == 4, "examples without certificates");
  o.require(good == certs, std::to_string(certs - good) + " certificates fail verification");
  for (const auto& r : run.results)
    if (r.claim == "exm1.1" || r.claim == "exm1.4")
      o.require(r.certificate_verified.value_or(false), r.claim + " certificate not verified by the runner");
  const std::string text = examples_text(run);
  std::size_t blocks = 0;
  for (auto p = text.find("== exm1."); p != std::string::npos; p = text.find("== exm1.", p + 1)) ++blocks;
  o.require(blocks == 4, "side-by-side table has " + std::to_string(blocks) + " blocks");
  std::cout << text;
  return o;
}

Outcome characterization_cross_oracle() {
  Outcome o;
  std::vector<ModulePtr> modules;
  for (std::size_t n = 2; n <= 24; ++n) modules.push_back(self_module(make_Zn(n)));
  for (std::size_t n : {2u, 3u, 5u})
    for (std::size_t a = 0; a < n; ++a) {
      auto r = make_quadratic(n, a);
      modules.push_back(self_module(r));
      if (r->order() * r->order() <= 25) modules.push_back(free_module(r, 2));
    }
  std::size_t checked = 0, mismatches = 0;
  for (const auto& m : modules)
    for (const auto& n : enumerate_graded_submodules(m)) {
      auto v = classify(n);
      Subset p = v.gw.members;
      p.insert(m->ring()->zero());
      ++checked;
      if (characterization_check(n, p).holds != v.is_weakly_primal) ++mismatches;
    }
  std::cout << "  characterization: " << checked << " submodules, " << mismatches << " mismatches\n";
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  return o;
}

Outcome localization_suite(const RunResult& full) {
  Outcome o;
  std::size_t pairs = 0;
  for (const Json& doc : enumerate_instances(default_budget())) {
    Instance inst = build_instance(doc);
    if (inst.is_integer()) continue;
    auto subs = enumerate_graded_submodules(inst.module);
    for (const auto& s : enumerate_multiplicative_sets(inst.ring)) {
      ++pairs;
      auto lm = localize_module(inst.module, s);
      const auto& lr = *lm->localized_ring();
      const std::string where = inst.name + " S=" + std::to_string(s.size());
      o.require(lr.classes().equivalence.ok && lm->classes().equivalence.ok, "fraction relation on " + where);
      o.require(validate_ring(lr.ring()->tables()).ok(), "R_S does not revalidate on " + where);
      ModuleTables mt = lm->module()->tables();
      o.require(validate_module(mt).ok(), "M_S does not revalidate on " + where);
      o.require(check_phi(lr).ok && check_phi(*lm).ok, "phi on " + where);
      for (const auto& n : subs)
        o.require(n.members().is_subset_of(contract(*lm, extend_submodule(*lm, n)).members()),
                  "N not inside its saturation on " + where);
    }
  }
  std::size_t met = 0, refuted = 0, verified = 0;
  for (const auto& r : full.results) {
    if (r.claim != "thm7.2") continue;
    met += r.cases_met;
    if (r.status != ClaimStatus::Refuted) continue;
    ++refuted;
    if (r.certificate && verify_certificate(*r.certificate).ok) ++verified;
  }
  std::cout << "  localization: " << pairs << " (instance, S) pairs; saturation equality: " << met
            << " cases meeting the hypothesis, " << refuted << " refuted instances, " << verified
            << " certificates verified\n";
  o.require(verified == refuted, "saturation refutation without a valid certificate");
  return o;
}

Outcome backend_agreement() {
  Outcome o;
  std::size_t pairs = 0, disagreements = 0, surrogate_differs = 0;
  for (long n = 1; n <= 32; ++n)
    for (long d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      ++pairs;
      QuotientModel q(ZnQuotient{n, d});
      reference::ZnOracle z{n, d};
      for (long x = -4 * n; x <= 4 * n; ++x) {
        if (q.in_gw(x) != z.in_gw(x)) ++disagreements;
        if (q.in_g(x) != z.in_g(x)) ++disagreements;
        if (q.in_w(x) != z.in_w(x)) ++disagreements;
        if (q.in_colon(x) != z.in_colon(x)) ++disagreements;
      }
      if (q.is_weakly_primal() != z.weakly_primal()) ++disagreements;
      if (q.is_primal() != z.primal()) ++disagreements;
      if (d != 1 && q.is_weakly_prime() != z.weakly_prime()) ++disagreements;
      if (d != 1 && q.is_weakly_primary() != z.weakly_primary()) ++disagreements;
      if (q.residue_verdict().is_weakly_primal != q.is_weakly_primal()) ++surrogate_differs;
    }
  std::cout << "  backend: " << pairs << " (n, d) pairs, " << disagreements << " disagreements; weakly primal over Z_n"
            << " differs from over Z on " << surrogate_differs << " pairs\n";
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  return o;
}

Outcome full_run(RunResult& first) {
  Outcome o;
  RunOptions opt;
  first = run_claims(opt);
  RunResult second = run_claims(opt);
  const std::string a = report_json(first).dump(2), b = report_json(second).dump(2);
  o.require(a == b, "reports differ between runs");
  o.require(first.errors.empty(), first.errors.empty() ? "" : "instance error: " + first.errors.front());
  std::size_t certs = 0, good = 0;
  for (const auto& r : first.results) {
    if (!r.certificate) continue;
    ++certs;
    if (verify_certificate(*r.certificate).ok) ++good;
  }
  std::cout << "  full run: " << first.instance_names.size() << " instances, " << first.results.size()
            << " results, " << certs << " certificates, " << good << " verified\n";
  o.require(certs == first.certificates && good == certs, "certificate verification failed");
  for (const auto& r : first.results)
    if (r.status == ClaimStatus::Refuted) o.require(r.certificate.has_value(), r.claim + " refuted without certificate");
  return o;
}

Outcome factorization_soundness(const RunResult& full) {
  Outcome o;
  std::size_t valid = 0;
  for (const auto& f : full.factorizations)
    if (revalidate_independently(f.emitted).valid) ++valid;
  std::cout << "  factorizations: " << full.factorizations.size() << " emitted, " << valid << " revalidated\n";
  o.require(!full.factorizations.empty(), "no factorizations emitted");
  o.require(valid == full.factorizations.size(), std::to_string(full.factorizations.size() - valid) + " invalid");
  return o;
}

}  // namespace

int main() {
  RunResult full;
  bool have_full = false;
  std::vector<Criterion> criteria = {
      {1, "Z_12 zero submodule: weakly primal, not primal", 1.0, example_zero_in_z12},
      {2, "Z_24 with 8Z_24: 2, 4 in GW, 6 not, not weakly primal", 1.0, example_eight_in_z24},
      {3, "integer examples recorded with valid certificates", 0.0, examples_with_certificates},
      {4, "colon characterization matches weak primality", 60.0, characterization_cross_oracle},
      {7, "full claims run deterministic with verified certificates", 600.0,
       [&] {
         Outcome o = full_run(full);
         have_full = true;
         return o;
       }},
      {5, "localization suite", 0.0,
       [&] {
         Outcome o;
         if (!have_full) o.require(false, "full run unavailable");
         return o.ok ? localization_suite(full) : o;
       }},
      {6, "Z_n table model agrees with the windowed oracle", 0.0, backend_agreement},
      {8, "factorizations revalidate independently", 0.0,
       [&] {
         Outcome o;
         if (!have_full) o.require(false, "full run unavailable");
         return o.ok ? factorization_soundness(full) : o;
       }},
  };

  std::vector<std::string> lines(9);
  bool all = true;
  for (auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && s >= c.limit_s) o.require(false, "time limit exceeded");
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << std::fixed
         << std::setprecision(3) << s << " s";
    if (c.limit_s > 0) line << ", limit " << c.limit_s << " s";
    line << ")";
    if (!o.ok) line << " -- " << o.why;
    lines[static_cast<std::size_t>(c.id)] = line.str();
    all = all && o.ok;
  }
  for (std::size_t i = 1; i < lines.size(); ++i) std::cout << lines[i] << "\n";
  return all ? 0 : 1;
}
