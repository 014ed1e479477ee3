#include "rookposet/serialize.hpp"

#include "rookposet/errors.hpp"

namespace rookposet {

namespace {

std::string format_roots(const std::vector<Root>& roots) {
  std::string out;
  for (const Root& r : roots) {
    if (!out.empty()) out += ';';
    out += std::to_string(r.row) + "," + std::to_string(r.col);
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const RookPlacement& d) {
  nlohmann::json roots = nlohmann::json::array();
  for (const Root& r : d.roots()) roots.push_back({r.row, r.col});
  return {{"n", d.n()}, {"roots", roots}};
}

RookPlacement placement_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("roots") ||
      !j["n"].is_number_integer() || !j["roots"].is_array()) {
    throw ParseError("placement JSON needs integer \"n\" and array \"roots\"");
  }
  std::vector<Root> roots;
  for (const auto& pair : j["roots"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw ParseError("root entry " + pair.dump() + " is not [i,j]");
    }
    roots.push_back(make_root(pair[0].get<int>(), pair[1].get<int>()));
  }
  return validate_placement(std::move(roots), j["n"].get<int>());
}

nlohmann::json to_json(const Permutation& w) { return w.one_line(); }

nlohmann::json to_json(const RankMatrix& m) { return m.rows(); }

nlohmann::json to_json(const CoverMove& move) {
  return {{"kind", to_string(move.kind)},
          {"source", format_roots(move.source)},
          {"target", format_roots(move.target)},
          {"result", format_placement(move.result)}};
}

nlohmann::json to_json(const Poset& p) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& d : p.elements()) elements.push_back(format_placement(d));
  nlohmann::json hasse = nlohmann::json::array();
  for (const auto& [lower, upper] : p.hasse()) hasse.push_back({lower, upper});
  const GradedReport report = check_graded(p);
  nlohmann::json ranks = nullptr;
  if (report.is_graded) ranks = report.rank_of;
  return {{"n", p.n()},
          {"kind", to_string(p.kind())},
          {"elements", elements},
          {"hasse", hasse},
          {"ranks", ranks}};
}

}  // namespace rookposet
