#include "whirl/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <tuple>

#include "whirl/tours.hpp"

namespace whirl {

// Kuhn-Munkres in successive-shortest-path form. Left nodes are tails
// (0..V-1), right nodes are heads (V..2V-1). Matched arcs are reversed in
// the residual graph and stay tight under the potentials, so Dijkstra on
// reduced costs finds each shortest augmenting path. All arithmetic is on
// int64 potentials.
std::vector<int> min_cost_cover(const WhirlDigraph& g, const std::vector<int>& arc_cost) {
  const int nv = g.vertex_count();
  if (static_cast<int>(arc_cost.size()) != g.arc_count()) {
    throw std::invalid_argument("arc cost vector does not match the digraph");
  }
  for (int c : arc_cost) {
    if (c < 0) throw std::invalid_argument("arc costs must be nonnegative");
  }
  for (int v = 0; v < nv; ++v) {
    if (g.out_ids(v).empty() || g.in_ids(v).empty()) {
      throw NoCycleCover("vertex " + to_string(g.vertex(v)) + " has no " +
                         (g.out_ids(v).empty() ? "out-arc" : "in-arc"));
    }
  }

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  const auto arcs = g.arcs();
  std::vector<int> match_left(nv, -1);   // arc id used by each tail
  std::vector<int> match_right(nv, -1);  // arc id used by each head
  std::vector<std::int64_t> pot(2 * nv, 0);
  std::vector<std::int64_t> dist(2 * nv);
  std::vector<int> parent_arc(2 * nv);
  std::vector<char> done(2 * nv);

  using Entry = std::pair<std::int64_t, int>;
  for (int source = 0; source < nv; ++source) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    std::fill(done.begin(), done.end(), 0);
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[source] = 0;
    queue.push({0, source});
    int sink = -1;
    std::int64_t sink_dist = kInf;

    while (!queue.empty()) {
      const auto [d, node] = queue.top();
      queue.pop();
      if (done[node] || d != dist[node]) continue;
      done[node] = 1;
      if (node >= nv) {
        const int head = node - nv;
        if (match_right[head] < 0) {
          sink = node;
          sink_dist = d;
          break;
        }
        const int tail = g.index_of(arcs[match_right[head]].tail);
        if (d < dist[tail]) {  // reversed matched arc, reduced cost 0
          dist[tail] = d;
          parent_arc[tail] = match_right[head];
          queue.push({d, tail});
        }
        continue;
      }
      for (int id : g.out_ids(node)) {
        if (id == match_left[node]) continue;
        const int right = nv + g.index_of(arcs[id].head);
        const std::int64_t nd = d + arc_cost[id] + pot[node] - pot[right];
        if (nd < dist[right]) {
          dist[right] = nd;
          parent_arc[right] = id;
          queue.push({nd, right});
        }
      }
    }
    if (sink < 0) {
      throw NoCycleCover("no perfect tail/head matching; stuck at " + to_string(g.vertex(source)));
    }

    for (int node = 0; node < 2 * nv; ++node) {
      if (done[node]) pot[node] += dist[node] - sink_dist;
    }
    // Flip the augmenting path.
    int node = sink;
    while (node != source) {
      const int id = parent_arc[node];
      const int tail = g.index_of(arcs[id].tail);
      const int head = g.index_of(arcs[id].head);
      if (node >= nv) {
        match_left[tail] = id;
        match_right[head] = id;
        node = tail;
      } else {
        // Reached this tail through its old matched arc; continue from the
        // right node that was matched to it before.
        node = nv + head;
      }
    }
  }
  return match_left;
}

namespace {

CycleCover cover_from_arcs(const WhirlDigraph& g, const std::vector<int>& arc_of_tail) {
  CycleCover cover;
  cover.succ.reserve(arc_of_tail.size());
  for (int id : arc_of_tail) cover.succ.push_back(g.index_of(g.arcs()[id].head));
  return cover;
}

}  // namespace

CoilInterval coil_interval(const WhirlDigraph& g) {
  const std::vector<int> w = g.coil_weight_vector();
  std::vector<int> inverted(w.size());
  std::transform(w.begin(), w.end(), inverted.begin(), [](int x) { return 1 - x; });

  CoilInterval interval;
  interval.argmin = cover_from_arcs(g, min_cost_cover(g, w));
  interval.argmax = cover_from_arcs(g, min_cost_cover(g, inverted));
  interval.min_coil = coil_of_cover(g, interval.argmin);
  interval.max_coil = coil_of_cover(g, interval.argmax);
  if (interval.min_coil > interval.max_coil) {
    throw std::logic_error("coil interval is empty; assignment solver is inconsistent");
  }
  return interval;
}

LpDecision lp_feasible(const WhirlDigraph& g, int c) {
  LpDecision d;
  d.c = c;
  d.interval = coil_interval(g);
  const int lo = d.interval.min_coil;
  const int hi = d.interval.max_coil;
  d.feasible = lo <= c && c <= hi;
  if (!d.feasible) return d;

  const FractionalAssignment xmin = indicator_of(g, d.interval.argmin);
  const FractionalAssignment xmax = indicator_of(g, d.interval.argmax);
  // x = lambda * xmin + (1 - lambda) * xmax has coil lambda*lo + (1-lambda)*hi = c.
  const Rational lambda = hi == lo ? Rational(1) : Rational(hi - c, hi - lo);
  FractionalAssignment x;
  x.x.reserve(xmin.x.size());
  for (std::size_t e = 0; e < xmin.x.size(); ++e) {
    x.x.push_back(lambda * xmin.x[e] + (Rational(1) - lambda) * xmax.x[e]);
  }
  if (!satisfies_lp(g, x, c)) throw std::logic_error("LP witness fails its own rows");
  d.witness = std::move(x);
  return d;
}

void validate_cover(const WhirlDigraph& g, const CycleCover& cover) {
  const int nv = g.vertex_count();
  if (static_cast<int>(cover.succ.size()) != nv) {
    throw std::invalid_argument("cover has " + std::to_string(cover.succ.size()) + " entries, expected " +
                                std::to_string(nv));
  }
  std::vector<char> hit(nv, 0);
  for (int v = 0; v < nv; ++v) {
    const int s = cover.succ[v];
    if (s < 0 || s >= nv) throw std::invalid_argument("cover successor out of range");
    if (hit[s]) throw std::invalid_argument("cover is not a permutation: " + to_string(g.vertex(s)) + " entered twice");
    hit[s] = 1;
    if (g.find_arc(g.vertex(v), g.vertex(s)) < 0) {
      throw std::invalid_argument("cover step is not an arc: " + to_string(g.vertex(v)) + "->" +
                                  to_string(g.vertex(s)));
    }
  }
}

int coil_of_cover(const WhirlDigraph& g, const CycleCover& cover) {
  validate_cover(g, cover);
  int coil = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    coil += g.arcs()[g.find_arc(g.vertex(v), g.vertex(cover.succ[v]))].w;
  }
  return coil;
}

int cycle_count(const CycleCover& cover) {
  std::vector<char> seen(cover.succ.size(), 0);
  int cycles = 0;
  for (std::size_t v = 0; v < cover.succ.size(); ++v) {
    if (seen[v]) continue;
    ++cycles;
    for (int x = static_cast<int>(v); !seen[x]; x = cover.succ[x]) seen[x] = 1;
  }
  return cycles;
}

FractionalAssignment indicator_of(const WhirlDigraph& g, const CycleCover& cover) {
  validate_cover(g, cover);
  FractionalAssignment x;
  x.x.assign(g.arc_count(), Rational(0));
  for (int v = 0; v < g.vertex_count(); ++v) {
    x.x[g.find_arc(g.vertex(v), g.vertex(cover.succ[v]))] = 1;
  }
  return x;
}

bool satisfies_lp(const WhirlDigraph& g, const FractionalAssignment& x, int c) {
  if (static_cast<int>(x.x.size()) != g.arc_count()) return false;
  for (const Rational& value : x.x) {
    if (value < 0 || value > 1) return false;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    Rational in_sum = 0;
    Rational out_sum = 0;
    for (int id : g.in_ids(v)) in_sum += x.x[id];
    for (int id : g.out_ids(v)) out_sum += x.x[id];
    if (in_sum != 1 || out_sum != 1) return false;
  }
  Rational coil = 0;
  for (const Arc& e : g.arcs()) coil += x.x[e.id] * e.w;
  return coil == c;
}

bool check_reduction(const WhirlDigraph& g, const Tour& tour) {
  const Tour checked = verify_tour(g, tour.cells);
  CycleCover cover;
  cover.succ.assign(g.vertex_count(), -1);
  for (std::size_t k = 0; k < checked.cells.size(); ++k) {
    const Cell& next = checked.cells[(k + 1) % checked.cells.size()];
    cover.succ[g.index_of(checked.cells[k])] = g.index_of(next);
  }
  return checked.coil == tour.coil && satisfies_lp(g, indicator_of(g, cover), checked.coil);
}

nlohmann::json cover_to_json(const WhirlDigraph& g, const CycleCover& cover) {
  validate_cover(g, cover);
  nlohmann::json succ = nlohmann::json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Cell& a = g.vertex(v);
    const Cell& b = g.vertex(cover.succ[v]);
    succ.push_back({a.i, a.j, b.i, b.j});
  }
  return {{"n", g.n()}, {"succ", succ}};
}

CycleCover cover_from_json(const WhirlDigraph& g, const nlohmann::json& j) {
  try {
    if (j.at("n").get<int>() != g.n()) throw std::invalid_argument("cover board size mismatch");
    CycleCover cover;
    cover.succ.assign(g.vertex_count(), -1);
    for (const auto& e : j.at("succ")) {
      const Cell a{e.at(0).get<int>(), e.at(1).get<int>()};
      const Cell b{e.at(2).get<int>(), e.at(3).get<int>()};
      cover.succ.at(g.index_of(a)) = g.index_of(b);
    }
    validate_cover(g, cover);
    return cover;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed cover JSON: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(e.what());
  }
}

nlohmann::json decision_to_json(const WhirlDigraph& g, const LpDecision& d) {
  return {{"n", g.n()},
          {"c", d.c},
          {"feasible", d.feasible},
          {"min_coil", d.interval.min_coil},
          {"max_coil", d.interval.max_coil}};
}

}  // namespace whirl
