#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "graded_lab/integer_backend.hpp"
#include "graded_lab/submodule.hpp"

namespace graded_lab::harness {

using Json = nlohmann::ordered_json;

/// Malformed structure file, selector or budget.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certificate whose instance descriptor no longer rebuilds.
class StaleDescriptor : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structure built from a descriptor: either a finite table instance (ring, module and
/// optional designated submodules) or the integer instance (Z, mZ).
struct Instance {
  Json descriptor;
  std::string name;
  RingPtr ring;
  ModulePtr module;
  std::optional<long> integer_modulus;
  /// Set for (Z_n, dZ_n): claims about a single submodule only look at this one.
  std::optional<Subset> fixed_submodule;
  std::string surrogate_note;

  std::vector<GradedSubmodule> submodules;
  std::vector<GradedIdeal> ideals;
  std::vector<MultiplicativeSet> s_sets;

  bool is_integer() const { return integer_modulus.has_value(); }
};

RingPtr build_ring(const Json& j);
ModulePtr build_module(const Json& j, const RingPtr& ring);

/// Rebuilds the structure and the selections. Throws InputError on malformed input and
/// ValidationError when the tables break an axiom.
Instance build_instance(const Json& doc);

/// The structural part of a document (ring, module, zinstance, name), used as the identity of
/// an instance in reports and certificates.
Json descriptor_of(const Json& doc);
std::string describe(const Json& descriptor);

Json load_json_file(const std::string& path);

/// "gen:8,16", "members:0,8,16" or "index:k" (position in the sorted enumeration).
GradedSubmodule select_submodule(const ModulePtr& module, const std::string& selector);
GradedSubmodule submodule_from_json(const ModulePtr& module, const Json& j);
GradedIdeal ideal_from_json(const RingPtr& ring, const Json& j);

/// Comma separated non-negative integers.
std::vector<Elem> parse_elements(const std::string& text);

}  // namespace graded_lab::harness
