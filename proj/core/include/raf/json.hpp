#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "raf/pims.hpp"
#include "raf/raf_partition.hpp"
#include "raf/reduce.hpp"

namespace raf {

/// {"components": [[labels...]...], "kind": "RAF"|"AF", "size": k}
nlohmann::json partition_to_json(const RafPartition& p, const std::vector<std::string>& labels);

/// Inverse of partition_to_json. Throws ParseError on unknown labels or bad
/// shape; NotAPartition when the components do not partition the labels.
RafPartition partition_from_json(const nlohmann::json& j, const std::vector<std::string>& labels);

/// {"steps": [{"cherry": [a, b], "merged": "a+b"}...], "expansion_map": {"a+b": [a, b]...}}
nlohmann::json reduction_to_json(const ReductionTrace& trace, const std::vector<std::string>& labels);

/// {"classes": [{"direction": "increasing", "positions": [1-based...], "values": [...]}...], "size": k}
nlohmann::json monotone_partition_to_json(const Permutation& pi, const MonotonePartition& m);

}  // namespace raf
