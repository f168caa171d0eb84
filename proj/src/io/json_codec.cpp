#include "monobrick/io/json_codec.hpp"

#include <stdexcept>

namespace monobrick::io {

namespace {

AlgebraSpec spec_from(const std::string& kind, int n) {
  if (kind == "A") return AlgebraSpec::linear_a(n);
  if (kind == "B") return AlgebraSpec::cyclic_b(n);
  throw std::invalid_argument("algebra must be \"A\" or \"B\", got \"" + kind + "\"");
}

}  // namespace

Json arc_to_json(const Arc& a) { return Json::array({a.start, a.end}); }

Json diagram_to_json(const ArcDiagram& d) {
  Json arcs = Json::array();
  for (const auto& a : d.arcs()) arcs.push_back(arc_to_json(a));
  const bool linear = d.spec().kind() == AlgebraKind::LinearA;
  return Json{{"n", d.spec().index()}, {"algebra", linear ? "A" : "B"}, {"arcs", std::move(arcs)}};
}

ArcDiagram diagram_from_json(const Json& j) {
  try {
    AlgebraSpec spec = spec_from(j.at("algebra").get<std::string>(), j.at("n").get<int>());
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) {
      if (!a.is_array() || a.size() != 2) throw std::invalid_argument("arcs are [start,end] pairs");
      arcs.push_back(Arc{a[0].get<int>(), a[1].get<int>()});
    }
    return ArcDiagram(spec, std::move(arcs));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad diagram JSON: ") + e.what());
  }
}

Json partition_to_json(const NclPartition& p) {
  return Json{{"n", p.n()}, {"blocks", p.blocks()}};
}

NclPartition partition_from_json(const Json& j) {
  try {
    return NclPartition(j.at("n").get<int>(), j.at("blocks").get<std::vector<std::vector<int>>>());
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad partition JSON: ") + e.what());
  }
}

}  // namespace monobrick::io
