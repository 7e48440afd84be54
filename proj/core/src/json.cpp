#include "raf/json.hpp"

#include <unordered_map>

#include "raf/error.hpp"

namespace raf {

using nlohmann::json;

json partition_to_json(const RafPartition& p, const std::vector<std::string>& labels) {
  json comps = json::array();
  for (const auto& c : p.components) {
    json names = json::array();
    c.for_each([&](TaxonId t) { names.push_back(labels[static_cast<std::size_t>(t)]); });
    comps.push_back(std::move(names));
  }
  return json{{"kind", to_string(p.kind)}, {"size", p.size()}, {"components", std::move(comps)}};
}

RafPartition partition_from_json(const json& j, const std::vector<std::string>& labels) {
  std::unordered_map<std::string, TaxonId> index;
  for (std::size_t t = 0; t < labels.size(); ++t) index.emplace(labels[t], static_cast<TaxonId>(t));

  const json* comps = &j;
  if (j.is_object()) {
    if (!j.contains("components")) throw ParseError("partition JSON needs a \"components\" array");
    comps = &j.at("components");
  }
  if (!comps->is_array()) throw ParseError("components must be an array of label arrays");

  RafPartition out;
  if (j.is_object() && j.contains("kind") && j.at("kind") == "AF") out.kind = ForestKind::Af;
  for (const auto& c : *comps) {
    if (!c.is_array()) throw ParseError("each component must be an array of labels");
    TaxonSet s(labels.size());
    for (const auto& name : c) {
      if (!name.is_string()) throw ParseError("labels must be strings");
      auto it = index.find(name.get<std::string>());
      if (it == index.end()) throw ParseError("unknown label '" + name.get<std::string>() + "'");
      if (s.contains(it->second)) throw NotAPartition("label '" + it->first + "' repeated in a component");
      s.insert(it->second);
    }
    out.components.push_back(std::move(s));
  }
  require_partition(out, labels.size());
  return out;
}

json reduction_to_json(const ReductionTrace& trace, const std::vector<std::string>& labels) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"cherry", {s.first, s.second}}, {"merged", s.merged}});
  }
  json expansion = json::object();
  for (std::size_t t = 0; t < trace.expansion_map.size(); ++t) {
    if (trace.expansion_map[t].count() < 2) continue;
    json names = json::array();
    trace.expansion_map[t].for_each([&](TaxonId o) { names.push_back(labels[static_cast<std::size_t>(o)]); });
    expansion[trace.reduced1.label(static_cast<TaxonId>(t))] = std::move(names);
  }
  return json{{"steps", std::move(steps)}, {"expansion_map", std::move(expansion)}};
}

json monotone_partition_to_json(const Permutation& pi, const MonotonePartition& m) {
  json classes = json::array();
  for (const auto& c : m.classes) {
    json positions = json::array(), values = json::array();
    for (std::size_t p : c.positions) {
      positions.push_back(p + 1);
      values.push_back(pi.value(p));
    }
    classes.push_back({{"direction", c.direction == Direction::Increasing ? "increasing" : "decreasing"},
                       {"positions", std::move(positions)},
                       {"values", std::move(values)}});
  }
  return json{{"size", m.size()}, {"classes", std::move(classes)}};
}

}  // namespace raf
