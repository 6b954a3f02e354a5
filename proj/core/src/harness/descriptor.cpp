#include "graded_lab/harness/descriptor.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace graded_lab::harness {

namespace {

std::vector<Elem> flatten_table(const Json& rows, const char* what) {
  if (!rows.is_array()) throw InputError(std::string(what) + " must be an array of rows");
  std::vector<Elem> out;
  for (const auto& row : rows) {
    if (!row.is_array()) throw InputError(std::string(what) + " rows must be arrays");
    for (const auto& v : row) out.push_back(v.get<Elem>());
  }
  return out;
}

Degree degree_from_json(const GradingGroup& group, const Json& d) {
  if (d.is_number_unsigned()) return d.get<Degree>();
  if (d.is_array()) {
    std::vector<int> coords = d.get<std::vector<int>>();
    if (coords.size() != group.cyclic_orders().size()) throw InputError("degree has the wrong number of coordinates");
    return group.from_tuple(coords);
  }
  throw InputError("degree must be an index or a coordinate array");
}

std::vector<std::vector<Elem>> components_from_json(const GradingGroup& group, const Json& grading) {
  std::vector<std::vector<Elem>> comps(group.size());
  if (!grading.contains("components")) return comps;
  for (const auto& c : grading.at("components")) {
    const Degree g = degree_from_json(group, c.at("degree"));
    if (g >= group.size()) throw InputError("degree outside the grading group");
    comps[g] = c.at("members").get<std::vector<Elem>>();
  }
  return comps;
}

RingPtr build_table_ring(const Json& j) {
  RingTables t;
  t.add = flatten_table(j.at("add"), "add");
  t.mul = flatten_table(j.at("mul"), "mul");
  t.order = j.at("add").size();
  if (j.contains("zero")) t.zero = j.at("zero").get<Elem>();
  if (j.contains("one")) t.one = j.at("one").get<Elem>();
  if (j.contains("grading")) {
    const auto& g = j.at("grading");
    t.group = GradingGroup(g.value("group", std::vector<int>{}));
    t.components = components_from_json(t.group, g);
  } else {
    t.components.push_back({});
    for (Elem x = 0; x < t.order; ++x) t.components[0].push_back(x);
  }
  if (j.contains("labels")) t.labels = j.at("labels").get<std::vector<std::string>>();
  return make_ring(t);
}

ModulePtr build_table_module(const Json& j, const RingPtr& ring) {
  ModuleTables t;
  t.ring = ring;
  t.add = flatten_table(j.at("add"), "add");
  t.order = j.at("add").size();
  t.action = flatten_table(j.at("action"), "action");
  if (j.contains("zero")) t.zero = j.at("zero").get<Elem>();
  if (j.contains("grading")) {
    t.components = components_from_json(ring->group(), j.at("grading"));
  } else {
    t.components.assign(ring->group().size(), {});
    for (Elem x = 0; x < t.order; ++x) t.components[0].push_back(x);
  }
  if (j.contains("labels")) t.labels = j.at("labels").get<std::vector<std::string>>();
  return make_module(t);
}

std::size_t positive(const Json& j, const char* key) {
  const long v = j.at(key).get<long>();
  if (v < 1) throw InputError(std::string(key) + " must be positive");
  return static_cast<std::size_t>(v);
}

Subset members_in(std::size_t universe, const std::vector<Elem>& elems) {
  Subset s(universe);
  for (Elem e : elems) {
    if (e >= universe) throw InputError("element " + std::to_string(e) + " out of range");
    s.insert(e);
  }
  return s;
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed structure: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

}  // namespace

RingPtr build_ring(const Json& j) {
  return guarded([&]() -> RingPtr {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Zn") return make_Zn(positive(j, "n"));
    if (kind == "quadratic") return make_quadratic(positive(j, "n"), j.at("a").get<std::size_t>());
    if (kind == "product") {
      const auto& f = j.at("factors");
      if (!f.is_array() || f.empty()) throw InputError("product needs factors");
      RingPtr acc = build_ring(f.at(0));
      for (std::size_t i = 1; i < f.size(); ++i) acc = make_product(*acc, *build_ring(f.at(i)));
      return acc;
    }
    if (kind == "tables") return build_table_ring(j);
    throw InputError("unknown ring kind '" + kind + "'");
  });
}

ModulePtr build_module(const Json& j, const RingPtr& ring) {
  return guarded([&]() -> ModulePtr {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "self") return self_module(ring);
    if (kind == "free") return free_module(ring, j.at("rank").get<std::size_t>());
    if (kind == "zero") return zero_module(ring);
    if (kind == "quotient") {
      ModulePtr base = j.contains("of") ? build_module(j.at("of"), ring) : self_module(ring);
      return quotient_module(submodule_from_json(base, j.at("by"))).module;
    }
    if (kind == "tables") return build_table_module(j, ring);
    throw InputError("unknown module kind '" + kind + "'");
  });
}

Json descriptor_of(const Json& doc) {
  Json d = Json::object();
  for (const char* key : {"name", "ring", "module", "zinstance"}) {
    if (doc.contains(key)) d[key] = doc.at(key);
  }
  return d;
}

std::string describe(const Json& descriptor) {
  if (descriptor.contains("name")) return descriptor.at("name").get<std::string>();
  return descriptor.dump();
}

Instance build_instance(const Json& doc) {
  return guarded([&]() -> Instance {
    if (!doc.is_object()) throw InputError("structure file must be an object");
    Instance inst;
    inst.descriptor = descriptor_of(doc);
    if (doc.contains("zinstance")) {
      const auto& z = doc.at("zinstance");
      if (z.contains("m")) {
        const long m = z.at("m").get<long>();
        check_zinstance(ZMultiples{m});
        IntegerModel model(m);
        inst.integer_modulus = m;
        inst.ring = model.surrogate().ring;
        inst.module = model.surrogate().module;
        inst.surrogate_note = model.surrogate().surrogate_note;
        inst.name = zinstance_name(ZMultiples{m});
      } else {
        const ZnQuotient q{z.at("n").get<long>(), z.at("d").get<long>()};
        check_zinstance(q);
        TableModel model = zinstance_to_table(q);
        inst.ring = model.ring;
        inst.module = model.module;
        inst.fixed_submodule = model.submodule.members();
        inst.surrogate_note = model.surrogate_note;
        inst.name = zinstance_name(q);
      }
    } else {
      inst.ring = build_ring(doc.at("ring"));
      inst.module = doc.contains("module") ? build_module(doc.at("module"), inst.ring) : self_module(inst.ring);
      inst.name = doc.value("name", std::string("instance"));
    }
    if (doc.contains("name")) inst.name = doc.at("name").get<std::string>();
    if (doc.contains("submodules")) {
      for (const auto& s : doc.at("submodules")) inst.submodules.push_back(submodule_from_json(inst.module, s));
    }
    if (doc.contains("ideals")) {
      for (const auto& s : doc.at("ideals")) inst.ideals.push_back(ideal_from_json(inst.ring, s));
    }
    if (doc.contains("s_sets")) {
      for (const auto& s : doc.at("s_sets")) {
        inst.s_sets.push_back(
            MultiplicativeSet::from_members(inst.ring, members_in(inst.ring->order(), s.get<std::vector<Elem>>())));
      }
    }
    return inst;
  });
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<Elem> parse_elements(const std::string& text) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    if (!std::all_of(item.begin(), item.end(), ::isdigit)) throw InputError("not an element: '" + item + "'");
    out.push_back(static_cast<Elem>(std::stoul(item)));
  }
  return out;
}

GradedSubmodule submodule_from_json(const ModulePtr& module, const Json& j) {
  return guarded([&]() -> GradedSubmodule {
    if (j.contains("gen")) {
      const Subset gens = members_in(module->order(), j.at("gen").get<std::vector<Elem>>());
      return submodule_generated_by(module, gens);
    }
    if (j.contains("members")) {
      return GradedSubmodule::from_members(module, members_in(module->order(), j.at("members").get<std::vector<Elem>>()));
    }
    if (j.contains("index")) {
      auto all = enumerate_graded_submodules(module);
      const std::size_t k = j.at("index").get<std::size_t>();
      if (k >= all.size()) throw InputError("submodule index out of range");
      return all[k];
    }
    throw InputError("submodule selector needs gen, members or index");
  });
}

GradedIdeal ideal_from_json(const RingPtr& ring, const Json& j) {
  return guarded([&]() -> GradedIdeal {
    if (j.contains("gen")) return ideal_generated_by(ring, members_in(ring->order(), j.at("gen").get<std::vector<Elem>>()));
    if (j.contains("members")) {
      return GradedIdeal::from_members(ring, members_in(ring->order(), j.at("members").get<std::vector<Elem>>()));
    }
    if (j.contains("index")) {
      auto all = enumerate_graded_ideals(ring);
      const std::size_t k = j.at("index").get<std::size_t>();
      if (k >= all.size()) throw InputError("ideal index out of range");
      return all[k];
    }
    throw InputError("ideal selector needs gen, members or index");
  });
}

GradedSubmodule select_submodule(const ModulePtr& module, const std::string& selector) {
  const auto colon = selector.find(':');
  if (colon == std::string::npos) throw InputError("selector must look like gen:..., members:... or index:k");
  const std::string kind = selector.substr(0, colon);
  const std::vector<Elem> elems = parse_elements(selector.substr(colon + 1));
  Json j;
  if (kind == "gen" || kind == "members") {
    j[kind] = elems;
  } else if (kind == "index") {
    if (elems.size() != 1) throw InputError("index selector takes one number");
    j["index"] = elems[0];
  } else {
    throw InputError("unknown selector kind '" + kind + "'");
  }
  return submodule_from_json(module, j);
}

}  // namespace graded_lab::harness
