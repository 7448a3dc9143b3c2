#pragma once

#include <json.hpp>

#include "zappa/automorphism.hpp"
#include "zappa/families.hpp"
#include "zappa/group.hpp"
#include "zappa/matched_pair.hpp"
#include "zappa/report.hpp"

namespace zappa {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// {"n": .., "mul": [[..]], "labels": [..]}
Json group_to_json(const GroupTable& g);
/// Also accepts {"cyclic": n}. Malformed input throws kParse.
GroupTable group_from_json(const Json& j, GroupTable::CheckAssociativity check = GroupTable::CheckAssociativity::kNo);

/// {"schema": "1", "H": .., "K": .., "sigma": [[..]], "theta": [[..]]}
Json pair_to_json(const MatchedPair& mp);
MatchedPair pair_from_json(const Json& j);

/// {"schema": "1", "kind": "zs-group", "order": .., "pair": .., "group": ..}
Json zs_group_to_json(const ZSGroup& g);
/// Accepts a group file or a bare pair. A stored table must match the one
/// rebuilt from the pair (kParse otherwise).
ZSGroup zs_group_from_json(const Json& j);

Json report_to_json(const ConditionReport& r);
Json decomposition_to_json(const DecompositionReport& r);
Json matrix_to_json(const AutMatrix& m);

/// Reads a JSON file; I/O and syntax errors throw kParse.
Json read_json_file(const std::string& path);

}  // namespace zappa
