#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "whirl/digraph.hpp"

namespace whirl {

struct Tour;

/// Thrown when the digraph admits no cycle cover at all.
class NoCycleCover : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A permutation of the vertices along arcs: `succ[v]` is the vertex index
/// following vertex index `v`.
struct CycleCover {
  std::vector<int> succ;

  friend bool operator==(const CycleCover&, const CycleCover&) = default;
};

/// Range of the coil functional sum(w_e x_e) over the assignment polytope.
/// The polytope is integral, so both ends are attained at cycle covers.
struct CoilInterval {
  int min_coil = 0;
  int max_coil = 0;
  CycleCover argmin;
  CycleCover argmax;
};

/// x_e for every arc id, exact.
struct FractionalAssignment {
  std::vector<Rational> x;
};

struct LpDecision {
  int c = 0;
  bool feasible = false;
  CoilInterval interval;
  std::optional<FractionalAssignment> witness;
};

/// Minimum-cost perfect matching between out-copies and in-copies of the
/// vertices, one edge per arc with the given nonnegative integer cost.
/// Returns the chosen arc id for each tail vertex index. Throws NoCycleCover
/// if no perfect matching exists.
std::vector<int> min_cost_cover(const WhirlDigraph& g, const std::vector<int>& arc_cost);

CoilInterval coil_interval(const WhirlDigraph& g);

/// Feasibility of the cycle-cover LP with coil row sum(w_e x_e) = c.
LpDecision lp_feasible(const WhirlDigraph& g, int c);

/// Throws std::invalid_argument unless `cover` is a permutation along arcs.
void validate_cover(const WhirlDigraph& g, const CycleCover& cover);
int coil_of_cover(const WhirlDigraph& g, const CycleCover& cover);

/// Number of disjoint cycles in the cover.
int cycle_count(const CycleCover& cover);

/// 0/1 indicator vector of a cover, aligned with arc ids.
FractionalAssignment indicator_of(const WhirlDigraph& g, const CycleCover& cover);

/// Exact residual check of every LP row: in/out degree sums equal 1, box
/// bounds, and sum(w_e x_e) = c.
bool satisfies_lp(const WhirlDigraph& g, const FractionalAssignment& x, int c);

/// Embeds a Hamiltonian tour as a 0/1 point and checks every LP row at the
/// tour's own coil count. Throws std::invalid_argument for non-Hamiltonian input.
bool check_reduction(const WhirlDigraph& g, const Tour& tour);

nlohmann::json cover_to_json(const WhirlDigraph& g, const CycleCover& cover);
CycleCover cover_from_json(const WhirlDigraph& g, const nlohmann::json& j);
nlohmann::json decision_to_json(const WhirlDigraph& g, const LpDecision& d);

}  // namespace whirl
