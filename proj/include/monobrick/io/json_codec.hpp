#pragma once

#include <json.hpp>

#include "monobrick/diagram.hpp"
#include "monobrick/linked_partition.hpp"

namespace monobrick::io {

using Json = nlohmann::json;

/// {"n":3,"algebra":"B","arcs":[[1,1],[2,3]]}; n is the algebra index.
[[nodiscard]] Json diagram_to_json(const ArcDiagram& d);
/// Extra keys are ignored. Throws std::invalid_argument on a malformed object
/// and InvalidInput on an arc illegal for the algebra.
[[nodiscard]] ArcDiagram diagram_from_json(const Json& j);

/// {"n":4,"blocks":[[1,2,4],[2,3]]}
[[nodiscard]] Json partition_to_json(const NclPartition& p);
[[nodiscard]] NclPartition partition_from_json(const Json& j);

[[nodiscard]] Json arc_to_json(const Arc& a);

}  // namespace monobrick::io
