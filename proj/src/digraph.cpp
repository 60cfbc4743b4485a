#include "whirl/digraph.hpp"

#include <stdexcept>

#include "json.hpp"

namespace whirl {

std::string to_string(Cell c) { return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")"; }

WhirlDigraph::WhirlDigraph(int n) : geom_(n), index_(static_cast<std::size_t>(n) * n, -1) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Cell c{i, j};
      if (geom_.is_centre(c)) continue;
      index_[i * n + j] = static_cast<int>(vertices_.size());
      vertices_.push_back(c);
    }
  }
  out_adj_.resize(vertices_.size());
  in_adj_.resize(vertices_.size());

  for (const Cell& u : vertices_) {
    for (const KnightStep& s : knight_steps()) {
      const Cell v{u.i + s.di, u.j + s.dj};
      if (!has_vertex(v) || !is_ccw(geom_, u, v)) continue;
      const int id = static_cast<int>(arcs_.size());
      arcs_.push_back(Arc{id, u, v, ray_crossing(geom_, u, v, Ray::north)});
      out_adj_[index_of(u)].push_back(id);
      in_adj_[index_of(v)].push_back(id);
    }
  }
}

bool WhirlDigraph::has_vertex(Cell c) const {
  return geom_.on_board(c) && index_[c.i * n() + c.j] >= 0;
}

int WhirlDigraph::index_of(Cell c) const {
  if (!has_vertex(c)) throw std::out_of_range("not a vertex: " + to_string(c));
  return index_[c.i * n() + c.j];
}

std::vector<Arc> WhirlDigraph::out_arcs(Cell v) const {
  std::vector<Arc> result;
  for (int id : out_ids(index_of(v))) result.push_back(arcs_[id]);
  return result;
}

std::vector<Arc> WhirlDigraph::in_arcs(Cell v) const {
  std::vector<Arc> result;
  for (int id : in_ids(index_of(v))) result.push_back(arcs_[id]);
  return result;
}

int WhirlDigraph::find_arc(Cell u, Cell v) const {
  if (!has_vertex(u)) return -1;
  for (int id : out_ids(index_of(u))) {
    if (arcs_[id].head == v) return id;
  }
  return -1;
}

std::vector<int> WhirlDigraph::coil_weight_vector() const {
  std::vector<int> w;
  w.reserve(arcs_.size());
  for (const Arc& a : arcs_) w.push_back(a.w);
  return w;
}

WhirlDigraph build_digraph(int n) { return WhirlDigraph(n); }

nlohmann::json digraph_to_json(const WhirlDigraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const Cell& c : g.vertices()) vertices.push_back({c.i, c.j});
  nlohmann::json arcs = nlohmann::json::array();
  for (const Arc& a : g.arcs()) {
    arcs.push_back({{"u", {a.tail.i, a.tail.j}}, {"v", {a.head.i, a.head.j}}, {"w", a.w}});
  }
  return {{"n", g.n()}, {"vertices", vertices}, {"arcs", arcs}};
}

WhirlDigraph digraph_from_json(const nlohmann::json& j) {
  try {
    WhirlDigraph g(j.at("n").get<int>());
    const auto& vertices = j.at("vertices");
    const auto& arcs = j.at("arcs");
    if (vertices.size() != static_cast<std::size_t>(g.vertex_count())) {
      throw std::invalid_argument("vertex count mismatch");
    }
    for (int k = 0; k < g.vertex_count(); ++k) {
      const Cell c{vertices[k].at(0).get<int>(), vertices[k].at(1).get<int>()};
      if (c != g.vertex(k)) throw std::invalid_argument("vertex " + std::to_string(k) + " mismatch");
    }
    if (arcs.size() != static_cast<std::size_t>(g.arc_count())) {
      throw std::invalid_argument("arc count mismatch");
    }
    for (int k = 0; k < g.arc_count(); ++k) {
      const auto& a = arcs[k];
      const Cell u{a.at("u").at(0).get<int>(), a.at("u").at(1).get<int>()};
      const Cell v{a.at("v").at(0).get<int>(), a.at("v").at(1).get<int>()};
      const Arc& ref = g.arcs()[k];
      if (u != ref.tail || v != ref.head || a.at("w").get<int>() != ref.w) {
        throw std::invalid_argument("arc " + std::to_string(k) + " mismatch");
      }
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed digraph JSON: ") + e.what());
  }
}

}  // namespace whirl
