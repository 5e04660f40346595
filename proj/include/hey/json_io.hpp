#pragma once

#include <string>

#include "json.hpp"

#include "hey/algebra.hpp"
#include "hey/poset.hpp"

namespace hey {

using Json = nlohmann::json;

// {"elements": ["a","b",...], "covers": [["a","b"],...]}, cover lower-first.
Json poset_to_json(const Poset& p);
Poset poset_from_json(const Json& j);

// {"n": int, "bot": i, "top": i, "meet": [[...]], "join": [[...]], "imp": [[...]]}
Json algebra_to_json(const HeytingAlgebra& a);
HeytingAlgebra algebra_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

// Hasse diagram of an algebra's order as DOT.
std::string algebra_to_dot(const HeytingAlgebra& a);

}  // namespace hey
