// JSON and plain-text formats.  All documents carry "format": 1.
#pragma once

#include <json.hpp>
#include <sstream>

#include "minorlab/color_assignment.hpp"
#include "minorlab/constraint.hpp"
#include "minorlab/corpus.hpp"
#include "minorlab/graph.hpp"
#include "minorlab/planar_color.hpp"
#include "minorlab/reduction.hpp"
#include "minorlab/wing.hpp"
#include "minorlab/witness.hpp"

namespace minorlab {

using nlohmann::json;

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.vertex_count()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph json: bad edge entry");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(n, edges);
}

// Plain-text reader: "u v" per line makes an edge, a lone integer declares a
// vertex, everything else (dot punctuation included) is ignored.
inline Graph graph_from_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int max_v = -1;
  std::string line;
  while (std::getline(in, line)) {
    for (char& c : line)
      if (!isdigit(static_cast<unsigned char>(c))) c = ' ';
    std::istringstream ls(line);
    std::vector<long> nums;
    long x;
    while (ls >> x) nums.push_back(x);
    if (nums.size() == 2 && nums[0] >= 0 && nums[1] >= 0) {
      edges.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
      max_v = std::max({max_v, static_cast<int>(nums[0]), static_cast<int>(nums[1])});
    } else if (nums.size() == 1 && nums[0] >= 0) {
      max_v = std::max(max_v, static_cast<int>(nums[0]));
    }
  }
  return Graph(max_v + 1, edges);
}

inline json coloring_to_json(const ColorAssignment& cl) {
  json colors = json::object();
  for (size_t v = 0; v < cl.colors.size(); ++v)
    if (cl.colors[v] != 0) colors[std::to_string(v)] = cl.colors[v];
  return json{{"palette", cl.palette}, {"colors", colors}};
}

inline ColorAssignment coloring_from_json(const json& j, int n) {
  ColorAssignment cl(j.at("palette").get<int>(), std::vector<int>(static_cast<size_t>(n), 0));
  for (auto& [k, v] : j.at("colors").items()) cl.colors.at(static_cast<size_t>(std::stoi(k))) = v.get<int>();
  return cl;
}

inline json witness_to_json(const MinorWitness& w) {
  json bs = json::array(), me = json::array();
  for (const auto& b : w.branch_sets) bs.push_back(b);
  for (auto [i, j2] : w.model_edges) me.push_back({i, j2});
  return json{{"branch_sets", bs}, {"model_edges", me}};
}

inline MinorWitness witness_from_json(const json& j) {
  MinorWitness w;
  for (const auto& b : j.at("branch_sets")) w.branch_sets.push_back(b.get<VertexSet>());
  for (const auto& e : j.at("model_edges")) w.model_edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  return w;
}

inline json embedding_to_json(const WingEmbedding& w) {
  return json{{"order", w.order}, {"graph", graph_to_json(w.graph)}};
}

inline WingEmbedding embedding_from_json(const json& j) {
  return WingEmbedding{j.at("order").get<std::vector<int>>(), graph_from_json(j.at("graph"))};
}

inline json system_to_json(const ConstraintSystem& cs) {
  json clusters = json::array(), relations = json::array(), divisions = json::array();
  for (const auto& c : cs.clusters) clusters.push_back(c.vertices);
  for (const auto& [i, j2, r] : cs.relations)
    relations.push_back({i, j2, r == Rel::eq ? "eq" : "neq"});
  for (const auto& d : cs.divisions) divisions.push_back(d);
  return json{{"mode", cs.mode == ConstraintSystem::Mode::p3a2 ? "p3a2" : "p4a3"},
              {"clusters", clusters},
              {"relations", relations},
              {"divisions", divisions}};
}

inline ConstraintSystem system_from_json(const json& j) {
  ConstraintSystem cs;
  cs.mode = j.at("mode").get<std::string>() == "p3a2" ? ConstraintSystem::Mode::p3a2
                                                      : ConstraintSystem::Mode::p4a3;
  for (const auto& c : j.at("clusters")) cs.clusters.push_back(Cluster{c.get<std::vector<int>>()});
  for (const auto& r : j.at("relations"))
    cs.relations.emplace_back(r[0].get<int>(), r[1].get<int>(),
                              r[2].get<std::string>() == "eq" ? Rel::eq : Rel::neq);
  for (const auto& d : j.at("divisions")) cs.divisions.push_back(d.get<std::vector<int>>());
  return cs;
}

inline json failure_to_json(const FailureTrace& f) {
  return json{{"format", 1},
              {"peel_sequence", f.peel_sequence},
              {"level", f.level},
              {"stage", f.stage},
              {"detail", f.detail},
              {"rule5_reading", std::string(1, f.rule5_reading)}};
}

inline const char* action_kind_name(MinorAction::Kind k) {
  switch (k) {
    case MinorAction::Kind::delete_vertex: return "delete-vertex";
    case MinorAction::Kind::delete_edge: return "delete-edge";
    case MinorAction::Kind::contract_edge: return "contract-edge";
  }
  return "?";
}

inline json outcome_to_json(const ReductionOutcome& out) {
  json j{{"format", 1}};
  switch (out.kind) {
    case ReductionOutcome::Kind::reduced: {
      j["kind"] = "reduced";
      j["graph"] = graph_to_json(out.graph);
      json actions = json::array();
      for (const auto& a : out.actions)
        actions.push_back(json{{"kind", action_kind_name(a.kind)}, {"u", a.u}, {"v", a.v}});
      j["actions"] = actions;
      break;
    }
    case ReductionOutcome::Kind::clique_minor:
      j["kind"] = "clique_minor";
      j["witness"] = witness_to_json(out.witness);
      break;
    case ReductionOutcome::Kind::irreducible:
      j["kind"] = "irreducible";
      j["min_degree"] = out.min_degree;
      j["connectivity"] = out.connectivity;
      break;
  }
  return j;
}

inline json item_to_json(const CorpusItem& item) {
  json j{{"format", 1},
         {"graph", graph_to_json(item.graph)},
         {"generator", item.generator},
         {"seed", item.seed},
         {"index", item.index}};
  if (item.wing_order) j["wing_order"] = *item.wing_order;
  if (item.boundary_walk) j["boundary_walk"] = *item.boundary_walk;
  if (item.known_chromatic) j["chromatic"] = *item.known_chromatic;
  return j;
}

inline CorpusItem item_from_json(const json& j) {
  CorpusItem item;
  item.graph = graph_from_json(j.at("graph"));
  item.generator = j.value("generator", "");
  item.seed = j.value("seed", uint64_t{0});
  item.index = j.value("index", 0L);
  if (j.contains("wing_order")) item.wing_order = j["wing_order"].get<std::vector<int>>();
  if (j.contains("boundary_walk")) item.boundary_walk = j["boundary_walk"].get<std::vector<int>>();
  if (j.contains("chromatic")) item.known_chromatic = j["chromatic"].get<int>();
  return item;
}

}  // namespace minorlab
