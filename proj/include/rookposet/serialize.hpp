#pragma once

#include <json.hpp>

#include "rookposet/cover_moves.hpp"
#include "rookposet/order.hpp"
#include "rookposet/poset.hpp"
#include "rookposet/roots.hpp"

namespace rookposet {

// {"n": int, "roots": [[i,j], ...]} in canonical order.
nlohmann::json to_json(const RookPlacement& d);
// Throws ParseError on a malformed document, and the validate_placement
// errors on an invalid placement.
RookPlacement placement_from_json(const nlohmann::json& j);

// One-line notation array.
nlohmann::json to_json(const Permutation& w);
// Row-major array of arrays.
nlohmann::json to_json(const RankMatrix& m);
// {"kind", "source", "target", "result"}; placements in text format.
nlohmann::json to_json(const CoverMove& move);

// {"n", "kind", "elements": [...], "hasse": [[from, to], ...], "ranks": [...]}
// with elements in text format and ranks null when the poset is not graded.
nlohmann::json to_json(const Poset& p);

}  // namespace rookposet
