#include "graded_lab/harness/runner.hpp"

#include <atomic>
#include <exception>
#include <thread>

#include "graded_lab/harness/instances.hpp"

namespace graded_lab::harness {

namespace {

struct InstanceOutput {
  std::vector<ClaimResult> results;
  std::vector<EmittedFactorization> factorizations;
  std::optional<std::string> error;
};

bool weakly_primal_ideal(const GradedRing& r, const Subset& p) {
  Subset a = reference::gw_ideal(r, p);
  a.insert(r.zero());
  return reference::is_ideal(r, a);
}

}  // namespace

FactorizationRecord revalidate_independently(const EmittedFactorization& e) {
  FactorizationRecord rec{e, false, {}};
  const Instance inst = build_instance(e.instance);
  const GradedRing& R = *inst.ring;
  const GradedModule& M = *inst.module;
  const Factorization& f = e.factorization;
  Subset product = R.all();
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const Subset& p = f.factors[i];
    if (!reference::is_ideal(R, p)) {
      rec.failure = "factor " + std::to_string(i) + " is not a graded ideal";
      return rec;
    }
    if (!weakly_primal_ideal(R, p)) {
      rec.failure = "factor " + std::to_string(i) + " is not weakly primal";
      return rec;
    }
    if (e.convention == FactorConvention::ProperIdeals && p.size() == R.order()) {
      rec.failure = "factor " + std::to_string(i) + " is the unit ideal";
      return rec;
    }
    product = reference::ideal_product(R, product, p);
  }
  if (e.module) {
    if (!f.tail) {
      rec.failure = "module factorization without a submodule factor";
      return rec;
    }
    if (!reference::is_submodule(M, *f.tail) || !reference::flags(M, *f.tail).weakly_primal) {
      rec.failure = "submodule factor is not weakly primal";
      return rec;
    }
    const Subset got = f.factors.empty() ? *f.tail : reference::ideal_times(M, product, *f.tail);
    if (got != f.target) {
      rec.failure = "product differs from the target";
      return rec;
    }
  } else {
    if (f.factors.empty() && e.convention == FactorConvention::AnyIdeal) {
      rec.failure = "empty product under the any-ideal convention";
      return rec;
    }
    if (product != f.target) {
      rec.failure = "product differs from the target";
      return rec;
    }
  }
  rec.valid = true;
  return rec;
}

RunResult run_claims(const RunOptions& opt) {
  const AlgebraOps& ops = opt.ops ? *opt.ops : library_ops();
  std::vector<const ClaimSpec*> claims;
  for (const auto& id : opt.claims) {
    if (!find_claim(id)) throw InputError("unknown claim '" + id + "'");
  }
  for (const auto& spec : registry()) {
    if (opt.claims.empty() || std::find(opt.claims.begin(), opt.claims.end(), spec.id) != opt.claims.end()) {
      claims.push_back(&spec);
    }
  }
  const std::vector<Json> docs = opt.instances ? *opt.instances : enumerate_instances(opt.budget);

  RunResult run;
  run.budget = opt.budget;
  std::vector<InstanceOutput> outputs(docs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < docs.size(); i = next++) {
      InstanceOutput& out = outputs[i];
      try {
        ClaimContext cx(build_instance(docs[i]), ops, opt.budget);
        for (const ClaimSpec* spec : claims) {
          if (applies(*spec, cx.instance())) out.results.push_back(evaluate_claim(*spec, cx));
        }
        out.factorizations = std::move(cx.factorizations());
      } catch (const std::exception& e) {
        out.error = describe(descriptor_of(docs[i])) + ": " + e.what();
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(opt.jobs, docs.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < docs.size(); ++i) {
    const Json d = descriptor_of(docs[i]);
    try {
      run.instance_names.push_back(build_instance(docs[i]).name);
    } catch (const std::exception&) {
      run.instance_names.push_back(describe(d));
    }
    if (outputs[i].error) run.errors.push_back(*outputs[i].error);
  }
  for (const ClaimSpec* spec : claims) {
    if (spec->scope == ClaimScope::Example) {
      try {
        run.results.push_back(evaluate_example(*spec, ops, opt.budget));
      } catch (const std::exception& e) {
        run.errors.push_back(spec->id + ": " + e.what());
      }
      continue;
    }
    for (auto& out : outputs) {
      for (auto& r : out.results) {
        if (r.claim == spec->id) run.results.push_back(std::move(r));
      }
    }
  }
  for (auto& out : outputs) {
    for (auto& f : out.factorizations) run.factorizations.push_back(FactorizationRecord{std::move(f), false, {}});
  }

  if (opt.verify) {
    for (auto& r : run.results) {
      if (!r.certificate) continue;
      ++run.certificates;
      try {
        const VerifyResult v = verify_certificate(*r.certificate);
        r.certificate_verified = v.ok;
      } catch (const std::exception&) {
        r.certificate_verified = false;
      }
      if (*r.certificate_verified) ++run.certificates_verified;
    }
    for (auto& rec : run.factorizations) {
      try {
        rec = revalidate_independently(rec.emitted);
      } catch (const std::exception& e) {
        rec.valid = false;
        rec.failure = e.what();
      }
      if (rec.valid) ++run.factorizations_valid;
    }
  } else {
    for (const auto& r : run.results) run.certificates += r.certificate ? 1 : 0;
  }
  return run;
}

}  // namespace graded_lab::harness
