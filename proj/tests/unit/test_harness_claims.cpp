#include <doctest.h>

#include <set>

#include "graded_lab/harness/certificate.hpp"
#include "graded_lab/harness/claims.hpp"
#include "graded_lab/harness/instances.hpp"
#include "graded_lab/harness/report.hpp"
#include "graded_lab/harness/runner.hpp"
#include "support/helpers.hpp"

using namespace graded_lab;
using namespace graded_lab::harness;
using testing_support::set_of;

namespace {

Json z24() { return Json::parse(R"({"name": "Z_24", "ring": {"kind": "Zn", "n": 24}, "module": {"kind": "self"}})"); }

Json ngwp_certificate(long x, long m) {
  CertificateBuilder b("exm1.2", z24());
  b.module_set("N", set_of(24, {0, 8, 16}));
  b.fact("ngwp_witness", Json{{"x", x}, {"m", m}, {"N", "N"}}, true);
  return b.build();
}

Budget tiny_budget() {
  Budget b;
  b.max_zn = 6;
  b.max_quadratic_n = 2;
  b.include_products = false;
  b.max_z_multiple = 4;
  b.max_zn_instance = 6;
  return b;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("NGWP certificate (x=2, m=4) verifies") {
  auto r = verify_certificate(ngwp_certificate(2, 4));
  CHECK(r.ok);
  CHECK(r.facts == 1);
  CHECK(r.failures.empty());
}

TEST_CASE("tampered certificate (x=6, m=4) is rejected") {
  auto r = verify_certificate(ngwp_certificate(6, 4));
  CHECK_FALSE(r.ok);
  CHECK(r.failures.size() == 1);
}

TEST_CASE("closure-failure certificate re-scans GWP status") {
  CertificateBuilder b("exm1.2", z24());
  b.module_set("N", set_of(24, {0, 8, 16}));
  b.fact("in_gw", Json{{"x", 2}, {"N", "N"}}, true);
  b.fact("in_gw", Json{{"x", 4}, {"N", "N"}}, true);
  b.fact("in_gw", Json{{"x", 6}, {"N", "N"}}, false);
  b.ring_set("GW0", set_of(24, {0, 2, 4, 8, 10, 14, 16, 20, 22}));
  b.fact("gw_union_zero_equals", Json{{"N", "N"}, {"S", "GW0"}}, true);
  b.fact("sum_in", Json{{"a", 2}, {"b", 4}, {"A", "GW0"}}, false);
  b.fact("is_graded_ideal", Json{{"S", "GW0"}}, false);
  auto r = verify_certificate(b.build());
  CHECK(r.ok);
  CHECK(r.facts == 6);

  CertificateBuilder lie("exm1.2", z24());
  lie.module_set("N", set_of(24, {0, 8, 16}));
  lie.fact("in_gw", Json{{"x", 6}, {"N", "N"}}, true);
  CHECK_FALSE(verify_certificate(lie.build()).ok);
}

TEST_CASE("stale descriptors and malformed facts") {
  Json c = ngwp_certificate(2, 4);
  c["instance"]["ring"]["kind"] = "Zq";
  CHECK_THROWS_AS(verify_certificate(c), StaleDescriptor);
  Json d = ngwp_certificate(2, 4);
  d["facts"][0]["pred"] = "no_such_predicate";
  CHECK_FALSE(verify_certificate(d).ok);
  Json e = ngwp_certificate(2, 4);
  e["facts"][0]["args"]["N"] = "undefined";
  CHECK_FALSE(verify_certificate(e).ok);
}

TEST_CASE("local and integer facts") {
  auto inst = build_instance(z24());
  auto view = library_ops().localize(inst.module, set_of(24, {1, 5}));
  CertificateBuilder b("thm7.2", z24());
  b.localize(set_of(24, {1, 5}), *view);
  b.fact("equivalence", Json::object(), true, "local");
  b.fact("phi_homomorphism", Json::object(), true, "local");
  b.module_set("N", set_of(24, {0, 8, 16}));
  b.local_module_set("NS", view->extend_module(set_of(24, {0, 8, 16})));
  b.fact("extend_equals", Json{{"N", "N"}, {"S", "NS"}}, true, "local");
  CHECK(verify_certificate(b.build()).ok);

  CertificateBuilder z("exm1.1", Json::parse(R"({"zinstance": {"m": 12}})"));
  z.fact("int_ngwp_witness", Json{{"x", 3}, {"y", 4}}, true, "integer");
  z.fact("int_in_gw", Json{{"x", 1}}, false, "integer");
  z.fact("int_weakly_primal", Json::object(), false, "integer");
  CHECK(verify_certificate(z.build()).ok);
}

TEST_CASE("registry") {
  const auto& reg = registry();
  CHECK(reg.size() == 27);
  std::set<std::string> ids;
  for (const auto& s : reg) {
    CHECK_FALSE(s.statement.empty());
    ids.insert(s.id);
  }
  CHECK(ids.size() == reg.size());
  CHECK(reg.front().id == "lem1");
  CHECK(reg.back().id == "thm8");
  CHECK(find_claim("thm6.2") != nullptr);
  CHECK(find_claim("thm9") == nullptr);
  for (const char* id : {"exm1.1", "exm1.2", "exm1.3", "exm1.4"}) {
    REQUIRE(find_claim(id) != nullptr);
    CHECK(find_claim(id)->scope == ClaimScope::Example);
    CHECK(find_claim(id)->instance.has_value());
  }
}

TEST_CASE("every claim is decidable on the zero module") {
  Json doc = Json::parse(R"({"name": "zero", "ring": {"kind": "Zn", "n": 4}, "module": {"kind": "zero"}})");
  Budget budget = default_budget();
  for (const auto& spec : registry()) {
    if (spec.scope == ClaimScope::Example) continue;
    ClaimContext ctx(build_instance(doc), library_ops(), budget);
    if (!applies(spec, ctx.instance())) continue;
    ClaimResult r = evaluate_claim(spec, ctx);
    CAPTURE(spec.id);
    CHECK(r.status != ClaimStatus::BudgetExceeded);
    if (r.status == ClaimStatus::Refuted) {
      REQUIRE(r.certificate.has_value());
      CHECK(verify_certificate(*r.certificate).ok);
    }
  }
}

TEST_CASE("worked examples") {
  Budget budget = default_budget();
  auto e3 = evaluate_example(*find_claim("exm1.3"), library_ops(), budget);
  CHECK(e3.status == ClaimStatus::Confirmed);
  auto e2 = evaluate_example(*find_claim("exm1.2"), library_ops(), budget);
  CHECK(e2.status == ClaimStatus::Confirmed);
  for (const char* id : {"exm1.1", "exm1.4"}) {
    auto e = evaluate_example(*find_claim(id), library_ops(), budget);
    CAPTURE(id);
    CHECK(e.status == ClaimStatus::Refuted);
    REQUIRE(e.certificate.has_value());
    CHECK(verify_certificate(*e.certificate).ok);
    bool disagreement = false;
    for (const auto& p : e.parts) disagreement = disagreement || !p.agrees();
    CHECK(disagreement);
  }
}

TEST_CASE("lem1 is refuted on Z_24 with a verifiable certificate") {
  RunOptions opt;
  opt.claims = {"lem1"};
  opt.instances = std::vector<Json>{z24()};
  auto run = run_claims(opt);
  REQUIRE(run.results.size() == 1);
  CHECK(run.results[0].status == ClaimStatus::Refuted);
  REQUIRE(run.results[0].certificate.has_value());
  CHECK(verify_certificate(*run.results[0].certificate).ok);
  CHECK(run.certificates_verified == run.certificates);
}

TEST_CASE("thm6.2 hypothesis guard") {
  RunOptions opt;
  opt.claims = {"thm6.2"};
  opt.instances = std::vector<Json>{
      Json::parse(R"({"name": "Z_24", "ring": {"kind": "Zn", "n": 24}, "module": {"kind": "self"},
                      "submodules": [{"gen": [8]}], "s_sets": [[1, 5]]})")};
  auto run = run_claims(opt);
  REQUIRE(run.results.size() == 1);
  CHECK(run.results[0].status == ClaimStatus::HypothesisUnmet);
}

TEST_CASE("instance stream") {
  Budget minimal;
  minimal.max_zn = 2;
  minimal.max_quadratic_n = 0;
  minimal.include_products = false;
  minimal.max_z_multiple = 0;
  minimal.max_zn_instance = 0;
  auto docs = enumerate_instances(minimal);
  REQUIRE(docs.size() == 1);
  Instance only = build_instance(docs[0]);
  CHECK(only.ring->order() == 2);
  CHECK(library_ops().submodules(only.module).size() == 2);

  auto a = enumerate_instances(default_budget());
  auto b = enumerate_instances(default_budget());
  CHECK(a.size() == 175);
  CHECK(a == b);
  for (const auto& d : a) CHECK_NOTHROW(build_instance(d));

  Budget small = default_budget();
  small.max_order = 8;
  for (const auto& d : enumerate_instances(small)) {
    Instance i = build_instance(d);
    if (!i.is_integer()) CHECK(i.module->order() <= 8);
  }
}

TEST_CASE("runner output is deterministic and independent of job count") {
  RunOptions opt;
  opt.budget = tiny_budget();
  auto one = run_claims(opt);
  opt.jobs = 3;
  auto three = run_claims(opt);
  CHECK(report_json(one).dump() == report_json(three).dump());
  CHECK(one.errors.empty());
  CHECK(one.certificates == one.certificates_verified);
  CHECK(one.factorizations_valid == one.factorizations.size());
  Json j = report_json(one);
  CHECK(j.contains("meta"));
  CHECK(j["claims"].size() == registry().size());
  CHECK(j.contains("discrepancies"));
  CHECK_FALSE(report_text(one).empty());
  CHECK(examples_text(one).find("exm1.3") != std::string::npos);

  RunOptions bad;
  bad.claims = {"nope"};
  CHECK_THROWS_AS(run_claims(bad), InputError);
}

TEST_CASE("Confirmed survives the naive reference implementation") {
  RunOptions lib;
  lib.budget = tiny_budget();
  lib.verify = false;
  RunOptions ref = lib;
  ref.ops = &reference_ops();
  auto a = run_claims(lib);
  auto b = run_claims(ref);
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    CAPTURE(a.results[i].claim);
    CAPTURE(a.results[i].instance_name);
    CHECK(a.results[i].claim == b.results[i].claim);
    if (a.results[i].status == ClaimStatus::Confirmed) CHECK(b.results[i].status == ClaimStatus::Confirmed);
    CHECK(a.results[i].status == b.results[i].status);
  }
}

}  // TEST_SUITE
