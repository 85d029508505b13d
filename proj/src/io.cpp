#include "flagtoric/io.hpp"

#include <sstream>
#include <stdexcept>

namespace flagtoric {

json polytope_json(const LatticePolytope& p) {
  json j;
  j["ambient_dim"] = p.ambient_dim();
  j["vertices"] = json::array();
  for (const auto& v : p.vertices()) j["vertices"].push_back(v);
  if (!p.labels().empty()) j["labels"] = p.labels();
  return j;
}

LatticePolytope polytope_from_json(const json& j) {
  std::vector<IntVec> verts;
  for (const auto& v : j.at("vertices")) verts.push_back(v.get<IntVec>());
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return LatticePolytope(std::move(verts), std::move(labels));
}

json fan_json(const Fan& f) {
  json j;
  j["rank"] = f.rank;
  j["rays"] = json::array();
  for (const auto& r : f.rays) j["rays"].push_back(r);
  j["cones"] = f.cones;
  return j;
}

Fan fan_from_json(const json& j) {
  Fan f;
  f.rank = j.at("rank").get<int>();
  for (const auto& r : j.at("rays")) f.rays.push_back(r.get<IntVec>());
  f.cones = j.at("cones").get<std::vector<std::vector<int>>>();
  return f;
}

json matroid_json(const CoxeterSubset& m) {
  json j;
  j["n"] = m.n();
  j["elements"] = json::array();
  for (const auto& p : m.elements()) j["elements"].push_back(p.str());
  return j;
}

CoxeterSubset matroid_from_json(const json& j) {
  std::vector<Perm> elems;
  for (const auto& s : j.at("elements")) elems.push_back(Perm::parse(s.get<std::string>()));
  return CoxeterSubset(std::move(elems));
}

json triangulation_json(const Triangulation& t) {
  json j;
  j["n"] = t.n();
  j["diagonals"] = json::array();
  for (const auto& [a, b] : t.diagonals()) j["diagonals"].push_back(std::vector<int>{a, b});
  return j;
}

Triangulation triangulation_from_json(const json& j) {
  std::vector<std::pair<int, int>> diags;
  for (const auto& d : j.at("diagonals")) diags.emplace_back(d[0].get<int>(), d[1].get<int>());
  return Triangulation(j.at("n").get<int>(), std::move(diags));
}

json forest_json(const SignedForest& f) {
  json parents = json::object(), signs = json::object();
  for (int v = 1; v <= f.n; ++v) {
    if (f.parent[v] == 0) continue;
    parents[std::to_string(v)] = f.parent[v];
    signs[std::to_string(v)] = f.sign[v] > 0 ? "+" : "-";
  }
  return json{{"n", f.n}, {"parents", parents}, {"signs", signs}};
}

SignedForest forest_from_json(const json& j) {
  int n = 0;
  if (j.contains("n")) n = j["n"].get<int>();
  else
    for (const auto& [k, v] : j.at("parents").items())
      n = std::max({n, std::stoi(k), v.get<int>()});
  std::vector<int> parent(n + 1, 0), sign(n + 1, 0);
  for (const auto& [k, v] : j.at("parents").items()) parent[std::stoi(k)] = v.get<int>();
  for (const auto& [k, v] : j.at("signs").items())
    sign[std::stoi(k)] = v.get<std::string>() == "+" ? 1 : -1;
  return SignedForest(n, std::move(parent), std::move(sign));
}

FlagMatrix flag_matrix_from_csv(const std::string& text) {
  std::vector<RatVec> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    RatVec row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      // trim blanks
      cell.erase(0, cell.find_first_not_of(" \t\r"));
      cell.erase(cell.find_last_not_of(" \t\r") + 1);
      if (!cell.empty()) row.push_back(parse_rat(cell));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return FlagMatrix(std::move(rows));
}

std::string retraction_table_csv(const std::map<Perm, Perm>& table) {
  std::string out = "u,r(u)\n";
  for (const auto& [u, r] : table) out += u.str() + "," + r.str() + "\n";
  return out;
}

}  // namespace flagtoric
