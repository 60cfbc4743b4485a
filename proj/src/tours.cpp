#include "whirl/tours.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <random>
#include <string>
#include <thread>

namespace whirl {

Tour verify_tour(const WhirlDigraph& g, const std::vector<Cell>& cells) {
  const int nv = g.vertex_count();
  std::vector<char> seen(nv, 0);
  for (const Cell& c : cells) {
    if (!g.has_vertex(c)) throw std::invalid_argument("tour cell is not a vertex: " + to_string(c));
    const int v = g.index_of(c);
    if (seen[v]) throw std::invalid_argument("tour repeats vertex " + to_string(c));
    seen[v] = 1;
  }
  if (static_cast<int>(cells.size()) != nv) {
    for (int v = 0; v < nv; ++v) {
      if (!seen[v]) {
        throw std::invalid_argument("tour misses vertex " + to_string(g.vertex(v)) + " (" +
                                    std::to_string(cells.size()) + " of " + std::to_string(nv) + " cells)");
      }
    }
  }
  Tour tour{cells, 0};
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const Cell& u = cells[k];
    const Cell& v = cells[(k + 1) % cells.size()];
    const int id = g.find_arc(u, v);
    if (id < 0) throw std::invalid_argument("tour step " + to_string(u) + "->" + to_string(v) + " is not an arc");
    tour.coil += g.arcs()[id].w;
  }
  return tour;
}

namespace {

void require_ray_supported(const WhirlDigraph& g, Ray ray) {
  if (!g.geometry().even() && ray != Ray::north) {
    throw std::invalid_argument("odd boards only support the north ray");
  }
}

}  // namespace

int winding_by_ray(const WhirlDigraph& g, const Tour& tour, Ray ray) {
  require_ray_supported(g, ray);
  const Tour checked = verify_tour(g, tour.cells);
  int count = 0;
  for (std::size_t k = 0; k < checked.cells.size(); ++k) {
    count += ray_crossing(g.geometry(), checked.cells[k], checked.cells[(k + 1) % checked.cells.size()], ray);
  }
  return count;
}

int winding_by_ray(const WhirlDigraph& g, const CycleCover& cover, Ray ray) {
  require_ray_supported(g, ray);
  validate_cover(g, cover);
  int count = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    count += ray_crossing(g.geometry(), g.vertex(v), g.vertex(cover.succ[v]), ray);
  }
  return count;
}

namespace {

// Path-extension DFS from vertex 0. For every vertex still needing an in-arc
// (unvisited vertices and the start) we track how many candidate in-arcs
// remain and how many of those cross the plumb-line; for every unvisited
// vertex, how many candidate out-arcs remain. Candidates are arcs whose
// other end is unvisited, the current path end (for in-arcs) or the start
// (for out-arcs).
class Searcher {
 public:
  Searcher(const WhirlDigraph& g, const SearchOptions& options, std::atomic<std::uint64_t>& nodes,
           std::atomic<bool>& stop)
      : g_(g),
        opt_(options),
        nodes_(nodes),
        stop_(stop),
        nv_(g.vertex_count()),
        visited_(nv_, 0),
        in_count_(nv_, 0),
        in_cross_(nv_, 0),
        out_count_(nv_, 0) {
    for (const Arc& e : g_.arcs()) {
      const int u = g_.index_of(e.tail);
      const int v = g_.index_of(e.head);
      ++in_count_[v];
      in_cross_[v] += e.w;
      ++out_count_[u];
    }
    for (int v = 0; v < nv_; ++v) add_bounds(v, +1);
    if (opt_.seed != 0) rng_.seed(opt_.seed);
  }

  // Moves from the start vertex, in search order.
  std::vector<int> root_moves() {
    enter(0, -1);
    return ordered_moves();
  }

  // Explores the subtree below the given first arc. Returns true when a tour is found.
  bool explore_from(int arc_id) {
    return step(arc_id);
  }

  const std::vector<int>& path() const { return path_; }
  int coil() const { return coil_; }

 private:
  int tail(int id) const { return g_.index_of(g_.arcs()[id].tail); }
  int head(int id) const { return g_.index_of(g_.arcs()[id].head); }
  int weight(int id) const { return g_.arcs()[id].w; }

  // Lower/upper bound contributions of a vertex that still needs an in-arc.
  int lb_of(int v) const { return in_count_[v] > 0 && in_cross_[v] == in_count_[v] ? 1 : 0; }
  int ub_of(int v) const { return in_cross_[v] > 0 ? 1 : 0; }
  void add_bounds(int v, int sign) {
    lb_ += sign * lb_of(v);
    ub_ += sign * ub_of(v);
  }
  void dec_in(int v, int w) {
    if (needs_in(v)) add_bounds(v, -1);
    --in_count_[v];
    in_cross_[v] -= w;
    if (needs_in(v)) add_bounds(v, +1);
  }
  void inc_in(int v, int w) {
    if (needs_in(v)) add_bounds(v, -1);
    ++in_count_[v];
    in_cross_[v] += w;
    if (needs_in(v)) add_bounds(v, +1);
  }
  bool needs_in(int v) const { return !visited_[v] || (v == 0 && !closed_); }

  // Marks v visited and makes it the path end. `via` is the arc used, or -1
  // for the start vertex.
  void enter(int v, int via) {
    const int prev = path_.empty() ? -1 : path_.back();
    if (via >= 0) {
      add_bounds(v, -1);  // v's in-arc is now fixed
      coil_ += weight(via);
      // prev is interior now: its other out-arcs are gone.
      for (int id : g_.out_ids(prev)) {
        if (id != via && needs_in(head(id))) dec_in(head(id), weight(id));
      }
    }
    visited_[v] = 1;
    // Arcs into v from unvisited vertices are no longer out-candidates. The
    // start keeps its in-arcs as candidates for closing the cycle.
    if (v != 0) {
      for (int id : g_.in_ids(v)) {
        const int x = tail(id);
        if (!visited_[x]) --out_count_[x];
      }
    }
    path_.push_back(v);
  }

  void leave(int via) {
    const int v = path_.back();
    path_.pop_back();
    for (int id : g_.in_ids(v)) {
      const int x = tail(id);
      if (!visited_[x]) ++out_count_[x];
    }
    visited_[v] = 0;
    if (via >= 0) {
      const int prev = path_.back();
      for (int id : g_.out_ids(prev)) {
        if (id != via && needs_in(head(id))) inc_in(head(id), weight(id));
      }
      coil_ -= weight(via);
      add_bounds(v, +1);
    }
  }

  bool coil_ok() const {
    if (!opt_.coil_target) return true;
    const int target = *opt_.coil_target;
    return coil_ + lb_ <= target && coil_ + ub_ >= target;
  }

  // Dead-vertex test after a move. Returns false if some vertex can no longer
  // be entered or left.
  bool alive() const {
    const int cur = path_.back();
    const int remaining = nv_ - static_cast<int>(path_.size());
    if (remaining > 0 && in_count_[0] == 1) {
      // If the only arc left into the start comes from the path end, the
      // cycle would have to close now.
      for (int id : g_.out_ids(cur)) {
        if (head(id) == 0) return false;
      }
    }
    if (in_count_[0] == 0) return false;
    for (int id : g_.out_ids(cur)) {
      const int y = head(id);
      if (!visited_[y] && out_count_[y] == 0) return false;
    }
    return true;
  }

  bool dead_neighbourhood(int prev) const {
    // Vertices whose counts changed in the last move: out-neighbours of prev
    // (in_count) and in-neighbours of the new end (out_count).
    for (int id : g_.out_ids(prev)) {
      const int y = head(id);
      if (!visited_[y] && in_count_[y] == 0) return true;
    }
    for (int id : g_.in_ids(path_.back())) {
      const int x = tail(id);
      if (!visited_[x] && out_count_[x] == 0) return true;
    }
    return false;
  }

  std::vector<int> ordered_moves() {
    const int cur = path_.back();
    const int remaining = nv_ - static_cast<int>(path_.size());
    std::vector<int> moves;
    if (remaining == 0) {
      for (int id : g_.out_ids(cur)) {
        if (head(id) == 0) moves.push_back(id);
      }
      return moves;
    }
    // A vertex whose only remaining in-arc comes from the path end forces the move.
    int forced = -1;
    for (int id : g_.out_ids(cur)) {
      const int y = head(id);
      if (visited_[y] || in_count_[y] != 1) continue;
      if (forced >= 0) return {};
      forced = id;
    }
    if (forced >= 0) return {forced};

    for (int id : g_.out_ids(cur)) {
      if (!visited_[head(id)]) moves.push_back(id);
    }
    if (opt_.seed != 0) std::shuffle(moves.begin(), moves.end(), rng_);
    std::stable_sort(moves.begin(), moves.end(),
                     [&](int a, int b) { return out_count_[head(a)] < out_count_[head(b)]; });
    return moves;
  }

  bool step(int via) {
    if (stop_.load(std::memory_order_relaxed)) return false;
    const std::uint64_t count = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (count > opt_.budget) {
      stop_.store(true, std::memory_order_relaxed);
      return false;
    }
    if (opt_.progress && count % opt_.progress_interval == 0) {
      opt_.progress(count, static_cast<int>(path_.size()));
    }

    const int v = head(via);
    if (v == 0) {
      // Closing arc.
      closed_ = true;
      add_bounds(0, -1);
      coil_ += weight(via);
      const bool ok = !opt_.coil_target || coil_ == *opt_.coil_target;
      if (ok) {
        stop_.store(true, std::memory_order_relaxed);
        return true;
      }
      coil_ -= weight(via);
      add_bounds(0, +1);
      closed_ = false;
      return false;
    }

    const int prev = path_.back();
    enter(v, via);
    bool found = false;
    if (!dead_neighbourhood(prev) && alive() && coil_ok()) {
      for (int next : ordered_moves()) {
        if (step(next)) {
          found = true;
          break;
        }
        if (stop_.load(std::memory_order_relaxed)) break;
      }
    }
    if (found) return true;
    leave(via);
    return false;
  }

  const WhirlDigraph& g_;
  const SearchOptions& opt_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& stop_;
  int nv_;
  std::vector<char> visited_;
  std::vector<int> in_count_;
  std::vector<int> in_cross_;
  std::vector<int> out_count_;
  std::vector<int> path_;
  int coil_ = 0;
  int lb_ = 0;
  int ub_ = 0;
  bool closed_ = false;
  std::mt19937_64 rng_;
};

Tour tour_from_path(const WhirlDigraph& g, const std::vector<int>& path) {
  std::vector<Cell> cells;
  cells.reserve(path.size());
  for (int v : path) cells.push_back(g.vertex(v));
  return verify_tour(g, cells);
}

}  // namespace

SearchResult search_tour(const WhirlDigraph& g, const SearchOptions& options) {
  if (options.budget < 1) throw std::invalid_argument("search budget must be at least 1");
  SearchResult result;
  if (options.coil_target) {
    try {
      const CoilInterval interval = coil_interval(g);
      if (*options.coil_target < interval.min_coil || *options.coil_target > interval.max_coil) {
        result.target_outside_interval = true;
        return result;
      }
    } catch (const NoCycleCover&) {
      result.target_outside_interval = true;
      return result;
    }
  }

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::vector<int> roots = Searcher(g, options, nodes, stop).root_moves();

  std::mutex mutex;
  std::atomic<std::size_t> next_root{0};
  auto worker = [&] {
    Searcher searcher(g, options, nodes, stop);
    searcher.root_moves();
    for (std::size_t k = next_root.fetch_add(1); k < roots.size(); k = next_root.fetch_add(1)) {
      if (stop.load()) break;
      if (searcher.explore_from(roots[k])) {
        std::lock_guard lock(mutex);
        if (!result.tour) result.tour = tour_from_path(g, searcher.path());
        break;
      }
    }
  };

  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(roots.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  result.nodes = std::min(nodes.load(), options.budget);
  result.exhausted_budget = !result.tour && nodes.load() > options.budget;
  return result;
}

std::vector<CycleCover> enumerate_cycle_covers(const WhirlDigraph& g, std::size_t cap) {
  const int nv = g.vertex_count();
  std::vector<CycleCover> covers;
  CycleCover current;
  current.succ.assign(nv, -1);
  std::vector<char> used(nv, 0);

  std::function<void(int)> dfs = [&](int v) {
    if (v == nv) {
      if (covers.size() >= cap) {
        throw CapExceeded("more than " + std::to_string(cap) + " cycle covers");
      }
      covers.push_back(current);
      return;
    }
    for (int id : g.out_ids(v)) {
      const int h = g.index_of(g.arcs()[id].head);
      if (used[h]) continue;
      used[h] = 1;
      current.succ[v] = h;
      dfs(v + 1);
      used[h] = 0;
    }
    current.succ[v] = -1;
  };
  dfs(0);
  return covers;
}

nlohmann::json tour_to_json(const WhirlDigraph& g, const Tour& tour) {
  nlohmann::json cells = nlohmann::json::array();
  for (const Cell& c : tour.cells) cells.push_back({c.i, c.j});
  return {{"n", g.n()}, {"cells", cells}, {"coil", tour.coil}};
}

Tour tour_from_json(const WhirlDigraph& g, const nlohmann::json& j) {
  try {
    if (j.at("n").get<int>() != g.n()) throw std::invalid_argument("tour board size mismatch");
    std::vector<Cell> cells;
    for (const auto& c : j.at("cells")) cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    Tour tour = verify_tour(g, cells);
    if (j.contains("coil") && j.at("coil").get<int>() != tour.coil) {
      throw std::invalid_argument("stored coil " + std::to_string(j.at("coil").get<int>()) +
                                  " does not match recomputed coil " + std::to_string(tour.coil));
    }
    return tour;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed tour JSON: ") + e.what());
  }
}

}  // namespace whirl
