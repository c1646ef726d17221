#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>

#include "bredon/equivariant.hpp"

namespace bredon::io {

using json = nlohmann::ordered_json;

// matrices travel as arrays of rows of decimal integer strings
json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

json invariants_to_json(const AbelianGroupInvariants& inv);
AbelianGroupInvariants invariants_from_json(const json& j);

json presentation_to_json(const FPAbelianGroup& g);
FPAbelianGroup presentation_from_json(const json& j);

/// {"order", "table", "labels"?} or permutation form {"degree", "generators"}
GroupPtr group_from_json(const json& j);
/// {"subgroups": [[element indices]], "close_conjugation": bool}
Family family_from_json(const json& j, const GroupPtr& g);

/// everything a manifest names, validated on load
struct Workspace {
  GroupPtr group;
  CategoryPtr cat;
  std::optional<GammaComplex> complex;
  std::vector<std::vector<int>> simplices;  // manifest order, for stage ids
  std::optional<Filtration> filtration;
  std::map<std::string, ModulePtr> modules;
  std::string coefficients;  // default module name, may be empty
};

/// Throws ManifestError (parse / cross-reference problems, with path
/// context) or the core validation errors.
Workspace load_manifest(const std::string& path);
Workspace workspace_from_json(const json& j, const std::string& context);

}  // namespace bredon::io
