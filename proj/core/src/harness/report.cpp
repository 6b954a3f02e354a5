#include "graded_lab/harness/report.hpp"

#include <array>
#include <iomanip>
#include <map>
#include <sstream>
#include <tuple>

namespace graded_lab::harness {

namespace {

constexpr std::array<ClaimStatus, 4> kStatuses = {ClaimStatus::Confirmed, ClaimStatus::Refuted,
                                                  ClaimStatus::HypothesisUnmet, ClaimStatus::BudgetExceeded};

Json result_json(const ClaimResult& r) {
  Json j;
  j["instance"] = r.instance_name;
  j["descriptor"] = r.instance;
  j["status"] = std::string(to_string(r.status));
  j["cases"] = r.cases;
  j["cases_met"] = r.cases_met;
  j["cases_refuted"] = r.cases_refuted;
  j["detail"] = r.detail;
  if (!r.parts.empty()) {
    Json parts = Json::array();
    for (const auto& p : r.parts) {
      parts.push_back({{"statement", p.statement},
                       {"asserted", p.asserted},
                       {"computed", p.computed},
                       {"verdict", p.agrees() ? "Confirmed" : "Discrepancy"}});
    }
    j["parts"] = std::move(parts);
  }
  if (r.certificate) {
    j["certificate"] = *r.certificate;
    if (r.certificate_verified) j["certificate_verified"] = *r.certificate_verified;
  }
  return j;
}

}  // namespace

Json report_json(const RunResult& run) {
  Json meta;
  meta["version"] = kVersion;
  meta["budget"] = to_json(run.budget);
  meta["instance_count"] = run.instance_names.size();
  meta["instances"] = run.instance_names;
  meta["results"] = run.results.size();
  meta["certificates"] = {{"emitted", run.certificates}, {"verified", run.certificates_verified}};
  meta["factorizations"] = {{"emitted", run.factorizations.size()}, {"revalidated", run.factorizations_valid}};
  meta["errors"] = run.errors;

  Json claims = Json::array();
  Json discrepancies = Json::array();
  for (const auto& spec : registry()) {
    Json c;
    c["id"] = spec.id;
    c["statement"] = spec.statement;
    if (!spec.interpretation.empty()) c["interpretation"] = spec.interpretation;
    Json tallies = Json::object();
    for (ClaimStatus s : kStatuses) tallies[std::string(to_string(s))] = 0;
    Json results = Json::array();
    bool any = false;
    for (const auto& r : run.results) {
      if (r.claim != spec.id) continue;
      any = true;
      auto& t = tallies[std::string(to_string(r.status))];
      t = t.get<std::size_t>() + 1;
      results.push_back(result_json(r));
      if (r.status == ClaimStatus::Refuted) {
        discrepancies.push_back({{"claim", r.claim}, {"instance", r.instance_name}, {"detail", r.detail}});
      }
    }
    if (!any) continue;
    c["tallies"] = std::move(tallies);
    c["results"] = std::move(results);
    claims.push_back(std::move(c));
  }

  std::map<std::tuple<std::string, bool, std::string>, std::pair<std::size_t, std::size_t>> groups;
  std::vector<std::tuple<std::string, bool, std::string>> order;
  Json invalid = Json::array();
  for (const auto& rec : run.factorizations) {
    auto key = std::make_tuple(rec.emitted.instance_name, rec.emitted.module,
                               std::string(to_string(rec.emitted.convention)));
    auto [it, fresh] = groups.try_emplace(key, 0, 0);
    if (fresh) order.push_back(key);
    ++it->second.first;
    if (rec.valid) {
      ++it->second.second;
    } else {
      invalid.push_back({{"instance", rec.emitted.instance_name}, {"failure", rec.failure}});
    }
  }
  Json fact = Json::array();
  for (const auto& key : order) {
    const auto& [count, valid] = groups.at(key);
    fact.push_back({{"instance", std::get<0>(key)},
                    {"target", std::get<1>(key) ? "submodules" : "ideals"},
                    {"convention", std::get<2>(key)},
                    {"count", count},
                    {"revalidated", valid}});
  }

  Json out;
  out["meta"] = std::move(meta);
  out["claims"] = std::move(claims);
  out["discrepancies"] = std::move(discrepancies);
  out["factorizations"] = {{"groups", std::move(fact)}, {"invalid", std::move(invalid)}};
  return out;
}

std::string report_text(const RunResult& run) {
  std::ostringstream o;
  o << "graded-lab " << kVersion << ": " << run.instance_names.size() << " instances, " << run.results.size()
    << " results\n";
  o << "certificates verified: " << run.certificates_verified << "/" << run.certificates << "\n";
  o << "factorizations revalidated: " << run.factorizations_valid << "/" << run.factorizations.size() << "\n\n";
  o << std::left << std::setw(9) << "claim" << std::right << std::setw(10) << "Confirmed" << std::setw(9) << "Refuted"
    << std::setw(16) << "HypothesisUnmet" << std::setw(15) << "BudgetExceeded" << "\n";
  for (const auto& spec : registry()) {
    std::array<std::size_t, 4> t{};
    bool any = false;
    for (const auto& r : run.results) {
      if (r.claim != spec.id) continue;
      any = true;
      ++t[static_cast<std::size_t>(r.status)];
    }
    if (!any) continue;
    o << std::left << std::setw(9) << spec.id << std::right << std::setw(10) << t[0] << std::setw(9) << t[1]
      << std::setw(16) << t[2] << std::setw(15) << t[3] << "\n";
  }
  o << "\ndiscrepancies:\n";
  for (const auto& r : run.results) {
    if (r.status != ClaimStatus::Refuted) continue;
    o << "  " << r.claim << " on " << r.instance_name << ": " << r.detail << "\n";
  }
  for (const auto& e : run.errors) o << "error: " << e << "\n";
  return o.str();
}

std::string examples_text(const RunResult& run) {
  std::ostringstream o;
  for (const auto& r : run.results) {
    if (r.parts.empty()) continue;
    o << "== " << r.claim << " on " << r.instance_name << " ==\n";
    o << "  " << std::left << std::setw(66) << "statement" << std::setw(9) << "asserted" << std::setw(9) << "computed"
      << "verdict\n";
    for (const auto& p : r.parts) {
      o << "  " << std::left << std::setw(66) << p.statement << std::setw(9) << (p.asserted ? "true" : "false")
        << std::setw(9) << (p.computed ? "true" : "false") << (p.agrees() ? "Confirmed" : "Discrepancy") << "\n";
    }
    o << "  certificate: "
      << (r.certificate_verified ? (*r.certificate_verified ? "verified" : "FAILED verification") : "not checked")
      << "\n\n";
  }
  return o.str();
}

}  // namespace graded_lab::harness
