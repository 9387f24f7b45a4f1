#pragma once

#include <string>

#include "json.hpp"
#include "matevo/groupoid.hpp"

namespace matevo::groupoid {

// Interchange format (see README):
//
//   {
//     "objects": ["x", "y"],
//     "arrows": [{"id": "x>y:r1", "src": "x", "tgt": "y"}, ...],
//     "compose": [["g", "h", "gh"], ...],
//     "identity": {"x": "x>x:e", ...},
//     "inverse": {"x>y:r1": "y>x:r2", ...}
//   }
//
// A subgroupoid file references arrow ids of its parent:
//
//   {"base": ["x", "y"], "arrows": ["x>x:e", ...]}
//
// Loading checks id consistency and throws FormatError on unknown ids or
// missing fields; the groupoid axioms are checked separately by
// validate_groupoid.

nlohmann::ordered_json groupoid_to_json(const FiniteGroupoid& g);
FiniteGroupoid groupoid_from_json(const nlohmann::json& j);

nlohmann::ordered_json subgroupoid_to_json(const FiniteGroupoid& parent,
                                           const FiniteSubgroupoid& sub);
FiniteSubgroupoid subgroupoid_from_json(const FiniteGroupoid& parent,
                                        const nlohmann::json& j);

FiniteGroupoid load_groupoid(const std::string& path);
void save_groupoid(const FiniteGroupoid& g, const std::string& path);

FiniteSubgroupoid load_subgroupoid(const FiniteGroupoid& parent,
                                   const std::string& path);
void save_subgroupoid(const FiniteGroupoid& parent,
                      const FiniteSubgroupoid& sub, const std::string& path);

}  // namespace matevo::groupoid
