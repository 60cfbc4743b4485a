#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "whirl/digraph.hpp"
#include "whirl/polytope.hpp"

namespace whirl {

/// Hamiltonian cycle of the whirling digraph, as a cyclic cell sequence.
struct Tour {
  std::vector<Cell> cells;
  int coil = 0;
};

/// Checks that `cells` visits every vertex once and that each consecutive
/// pair (cyclically) is an arc; computes the coil count. Throws
/// std::invalid_argument naming the first offending pair or cell.
Tour verify_tour(const WhirlDigraph& g, const std::vector<Cell>& cells);

/// Crossings of the tour with an open axis-aligned ray from the pivot. Every
/// arc turns CCW, so each crossing is a +1 contribution to the winding number.
/// Odd boards only support the north ray.
int winding_by_ray(const WhirlDigraph& g, const Tour& tour, Ray ray);
int winding_by_ray(const WhirlDigraph& g, const CycleCover& cover, Ray ray);

struct SearchOptions {
  std::optional<int> coil_target;
  std::uint64_t budget = 1'000'000;  // node expansions
  std::uint64_t seed = 0;
  int threads = 1;
  /// Called every `progress_interval` expansions with (nodes, depth).
  std::function<void(std::uint64_t, int)> progress;
  std::uint64_t progress_interval = 1u << 20;
};

struct SearchResult {
  std::optional<Tour> tour;
  std::uint64_t nodes = 0;
  bool exhausted_budget = false;
  /// Set when a coil target was rejected up front by the exact coil interval.
  bool target_outside_interval = false;
};

/// Budgeted depth-first search for a whirling tour. A missing tour means
/// "not found within budget" unless `target_outside_interval` is set.
SearchResult search_tour(const WhirlDigraph& g, const SearchOptions& options);

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All cycle covers by DFS over successor choices. Throws CapExceeded when
/// more than `cap` covers exist.
std::vector<CycleCover> enumerate_cycle_covers(const WhirlDigraph& g, std::size_t cap);

nlohmann::json tour_to_json(const WhirlDigraph& g, const Tour& tour);
/// Parses and verifies. Throws std::invalid_argument on malformed or invalid input.
Tour tour_from_json(const WhirlDigraph& g, const nlohmann::json& j);

}  // namespace whirl
