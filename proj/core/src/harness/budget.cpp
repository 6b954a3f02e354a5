#include "graded_lab/harness/budget.hpp"

#include <cstdlib>

namespace graded_lab::harness {

Budget default_budget() { return Budget{}; }

Json to_json(const Budget& b) {
  Json j;
  j["max_zn"] = b.max_zn;
  j["max_quadratic_n"] = b.max_quadratic_n;
  j["include_products"] = b.include_products;
  j["max_order"] = b.max_order;
  j["max_z_multiple"] = b.max_z_multiple;
  j["max_zn_instance"] = b.max_zn_instance;
  j["max_factor_len"] = b.max_factor_len;
  return j;
}

Budget budget_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("budget must be an object");
  Budget b;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "max_zn") b.max_zn = value.get<std::size_t>();
      else if (key == "max_quadratic_n") b.max_quadratic_n = value.get<std::size_t>();
      else if (key == "include_products") b.include_products = value.get<bool>();
      else if (key == "max_order") b.max_order = value.get<std::size_t>();
      else if (key == "max_z_multiple") b.max_z_multiple = value.get<long>();
      else if (key == "max_zn_instance") b.max_zn_instance = value.get<long>();
      else if (key == "max_factor_len") b.max_factor_len = value.get<std::size_t>();
      else throw InputError("unknown budget key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed budget: ") + e.what());
  }
  return b;
}

Budget load_budget(const std::optional<std::string>& path) {
  if (path) return budget_from_json(load_json_file(*path));
  if (const char* env = std::getenv(kBudgetEnvVar); env && *env) return budget_from_json(load_json_file(env));
  return default_budget();
}

}  // namespace graded_lab::harness
