#pragma once

#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "whirl/geometry.hpp"

namespace whirl {

struct Arc {
  int id = 0;
  Cell tail;  // u
  Cell head;  // v
  int w = 0;  // 1 iff the arc crosses the north plumb-line
};

/// The whirling-knight digraph: every knight move that is CCW about the
/// pivot. For odd n the centre cell is dropped. Immutable once built.
///
/// Arc ids are dense: tails in row-major order, then `knight_steps()` order.
class WhirlDigraph {
 public:
  explicit WhirlDigraph(int n);

  int n() const { return geom_.n(); }
  const BoardGeometry& geometry() const { return geom_; }

  std::span<const Cell> vertices() const { return vertices_; }
  std::span<const Arc> arcs() const { return arcs_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  bool has_vertex(Cell c) const;
  /// Dense index of a vertex; throws std::out_of_range for non-vertices.
  int index_of(Cell c) const;
  const Cell& vertex(int index) const { return vertices_.at(index); }

  /// Arc ids leaving / entering the vertex with the given index.
  std::span<const int> out_ids(int v) const { return out_adj_.at(v); }
  std::span<const int> in_ids(int v) const { return in_adj_.at(v); }

  std::vector<Arc> out_arcs(Cell v) const;
  std::vector<Arc> in_arcs(Cell v) const;

  /// Arc id for u -> v, or -1.
  int find_arc(Cell u, Cell v) const;

  /// w_e for every arc, aligned with arc ids.
  std::vector<int> coil_weight_vector() const;

 private:
  BoardGeometry geom_;
  std::vector<Cell> vertices_;
  std::vector<int> index_;  // n*n, -1 for the excluded centre
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_adj_;
  std::vector<std::vector<int>> in_adj_;
};

WhirlDigraph build_digraph(int n);

nlohmann::json digraph_to_json(const WhirlDigraph& g);
/// Parses the export format and checks it against a freshly built digraph.
/// Throws std::invalid_argument if anything disagrees.
WhirlDigraph digraph_from_json(const nlohmann::json& j);

std::string to_string(Cell c);

}  // namespace whirl
