#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "gridwalk/enumerate.hpp"
#include "gridwalk/existence.hpp"
#include "gridwalk/grid.hpp"
#include "gridwalk/rectifiable.hpp"

namespace gridwalk {

using json = nlohmann::ordered_json;

inline const char* moves_name(MoveSet m) {
  return m == MoveSet::Rook ? "rook" : "king";
}

inline std::optional<MoveSet> parse_moves(const std::string& s) {
  if (s == "rook") return MoveSet::Rook;
  if (s == "king") return MoveSet::King;
  return std::nullopt;
}

// {"n": 5, "moves": "rook", "cells": [[1,1],[1,2],...]}
inline json walk_to_json(const Walk& w) {
  json j;
  j["n"] = w.grid.n;
  j["moves"] = moves_name(w.grid.moves);
  json cells = json::array();
  for (Cell c : w.cells) cells.push_back(json::array({c.row, c.col}));
  j["cells"] = std::move(cells);
  return j;
}

inline Walk walk_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("moves") ||
      !j.contains("cells"))
    throw std::invalid_argument(
        "walk JSON needs the fields n, moves and cells");
  if (!j["n"].is_number_integer())
    throw std::invalid_argument("walk JSON field n must be an integer");
  auto moves = parse_moves(j["moves"].get<std::string>());
  if (!moves)
    throw std::invalid_argument("walk JSON field moves must be rook or king");
  GridSpec g(j["n"].get<int>(), *moves);
  Walk w{g, {}};
  if (!j["cells"].is_array())
    throw std::invalid_argument("walk JSON field cells must be an array");
  for (const auto& item : j["cells"]) {
    if (!item.is_array() || item.size() != 2 ||
        !item[0].is_number_integer() || !item[1].is_number_integer())
      throw std::invalid_argument("each cell must be a [row, col] pair");
    w.cells.push_back({item[0].get<int>(), item[1].get<int>()});
  }
  return w;
}

inline json cell_to_json(Cell c) { return json::array({c.row, c.col}); }

inline json enumeration_to_json(const GridSpec& g, std::optional<Cell> start,
                                std::optional<Cell> end,
                                const EnumerationResult& r,
                                bool include_paths) {
  json j;
  if (start) j["start"] = cell_to_json(*start);
  if (end) j["end"] = cell_to_json(*end);
  j["moves"] = moves_name(g.moves);
  j["n"] = g.n;
  j["max_steps"] = r.max_steps;
  j["count"] = r.count_max_walks;
  j["nodes_expanded"] = r.nodes_expanded;
  if (include_paths) {
    json paths = json::array();
    for (const Walk& w : r.paths) paths.push_back(walk_to_json(w));
    j["paths"] = std::move(paths);
  }
  return j;
}

inline json claim_to_json(const PairClaim& claim) {
  json j;
  j["kind"] = claim_name(claim.kind);
  if (claim.theorem) j["theorem"] = theorem_name(*claim.theorem);
  return j;
}

inline json audit_to_json(const AuditVerdict& v) {
  json j;
  j["pair"] = {{"n", v.claim.grid.n},
               {"a", cell_to_json(v.claim.a)},
               {"b", cell_to_json(v.claim.b)}};
  j["claim"] = claim_to_json(v.claim);
  j["oracle_max"] = v.oracle_max_steps;
  j["oracle_says_max_walk"] = v.oracle_says_max_walk;
  j["agreement"] = agreement_name(v.agreement);
  return j;
}

inline json polyline_to_json(const Polyline& p) {
  json knots = json::array();
  for (const Point& k : p.knots) knots.push_back(json::array({k.x, k.y}));
  return knots;
}

inline json chain_result_to_json(const ChainResult& r) {
  json j;
  j["length"] = path_length(r.polyline);
  j["knots"] = polyline_to_json(r.polyline);
  j["junctions"] = r.junction_count;
  json visits = json::array();
  for (const auto& [cell, count] : r.visit_counts)
    visits.push_back({{"cell", cell_to_json(cell)}, {"count", count}});
  j["visits"] = std::move(visits);
  return j;
}

}  // namespace gridwalk
