#include "bicyc/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "bicyc/certificate.hpp"
#include "bicyc/structure.hpp"

namespace bicyc {
namespace {

using Clock = std::chrono::steady_clock;

struct FlatGraph {
  int n{0};
  std::vector<std::vector<int>> adj;       // sorted neighbor ids
  std::vector<std::vector<EdgeKind>> kind; // kind[v][i] classifies adj[v][i]

  static FlatGraph build(const BicirculantParams& p,
                         const CycleConstraints& constraints) {
    FlatGraph g;
    g.n = p.vertex_count();
    g.adj.resize(g.n);
    g.kind.resize(g.n);
    for (int id = 0; id < g.n; ++id) {
      Vertex v = p.vertex_of(id);
      for (const Vertex& w : p.neighbors(v)) {
        EdgeKind k = p.classify_edge(v, w);
        if (constraints.forbidden.count(k)) continue;
        g.adj[id].push_back(p.vertex_id(w));
        g.kind[id].push_back(k);
      }
    }
    return g;
  }
};

class Searcher {
 public:
  Searcher(const BicirculantParams& p, FlatGraph g,
           const CycleConstraints& constraints, const SearchBudget& budget,
           bool cycle_mode, int start, int goal,
           const std::vector<char>& active)
      : p_(p),
        g_(std::move(g)),
        cons_(constraints),
        budget_(budget),
        cycle_mode_(cycle_mode),
        start_(start),
        goal_(goal),
        active_(active),
        deadline_(Clock::now() + std::chrono::milliseconds(budget.max_millis)) {
    active_count_ = 0;
    for (char a : active_) active_count_ += a;
    visited_.assign(g_.n, 0);
    avail_deg_.assign(g_.n, 0);
    for (int v = 0; v < g_.n; ++v) {
      if (!active_[v]) continue;
      for (int w : g_.adj[v])
        if (active_[w]) ++avail_deg_[v];
    }
    path_.reserve(active_count_);
  }

  SearchResult run() {
    SearchResult res;
    visit(start_);
    bool complete = extend();
    res.nodes = nodes_;
    if (found_) {
      res.status = SearchStatus::Found;
      std::vector<Vertex> seq;
      seq.reserve(path_.size());
      for (int id : path_) seq.push_back(p_.vertex_of(id));
      res.sequence = std::move(seq);
    } else {
      res.status =
          complete ? SearchStatus::ExhaustedNone : SearchStatus::BudgetExceeded;
    }
    return res;
  }

 private:
  void visit(int v) {
    visited_[v] = 1;
    path_.push_back(v);
    for (int w : g_.adj[v])
      if (active_[w]) --avail_deg_[w];
  }

  void unvisit() {
    int v = path_.back();
    path_.pop_back();
    visited_[v] = 0;
    for (int w : g_.adj[v])
      if (active_[w]) ++avail_deg_[w];
  }

  bool budget_ok() {
    if (nodes_ >= budget_.max_nodes) return false;
    if ((nodes_ & 0x3ff) == 0 && Clock::now() > deadline_) return false;
    return true;
  }

  // Every unvisited vertex still needs two usable edge ends; the
  // remaining territory must be reachable from the path head.
  bool prune() {
    const int head = path_.back();
    const size_t remaining = active_count_ - path_.size();
    if (remaining == 0) return false;
    for (int v = 0; v < g_.n; ++v) {
      if (!active_[v] || visited_[v]) continue;
      int d = avail_deg_[v];  // unvisited neighbors (goal included)
      if (is_adj(v, head)) ++d;
      if (cycle_mode_) {
        if (is_adj(v, start_)) ++d;
        if (d < 2) return true;
      } else {
        if (d < (v == goal_ ? 1 : 2)) return true;
      }
    }
    // BFS over unvisited vertices from the head
    bfs_mark_.assign(g_.n, 0);
    std::vector<int> queue{head};
    bfs_mark_[head] = 1;
    size_t reached = 0;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int w : g_.adj[v]) {
        if (!active_[w] || visited_[w] || bfs_mark_[w]) continue;
        bfs_mark_[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
    return reached != remaining;
  }

  bool is_adj(int v, int w) const {
    return std::binary_search(g_.adj[v].begin(), g_.adj[v].end(), w);
  }

  bool class_counts_feasible() const {
    const int steps_left =
        static_cast<int>(active_count_ - path_.size()) + 1;
    return used_[0] + steps_left >= cons_.min_outer &&
           used_[1] + steps_left >= cons_.min_inner &&
           used_[2] + steps_left >= cons_.min_spoke;
  }

  // Returns true when the subtree was searched completely.
  bool extend() {
    if (found_) return true;
    ++nodes_;
    if (!budget_ok()) return false;

    const int head = path_.back();
    if (path_.size() == active_count_) {
      if (cycle_mode_) {
        if (!is_adj(head, start_)) return true;
        // canonical direction: second vertex below last
        if (path_.size() > 2 && path_[1] > path_.back()) return true;
        EdgeKind k = p_.classify_edge(p_.vertex_of(head), p_.vertex_of(start_));
        int cls = static_cast<int>(k.cls);
        used_[cls]++;
        bool ok = used_[0] >= cons_.min_outer && used_[1] >= cons_.min_inner &&
                  used_[2] >= cons_.min_spoke;
        used_[cls]--;
        if (ok) found_ = true;
        return true;
      }
      if (head == goal_) found_ = true;
      return true;
    }

    if (!class_counts_feasible()) return true;
    if (prune()) return true;

    // most-constrained neighbor first, index order breaking ties
    struct Cand {
      int deg;
      int w;
      int idx;
    };
    std::vector<Cand> cands;
    const auto& nb = g_.adj[head];
    for (size_t i = 0; i < nb.size(); ++i) {
      int w = nb[i];
      if (!active_[w] || visited_[w]) continue;
      if (!cycle_mode_ && w == goal_ && path_.size() + 1 != active_count_)
        continue;  // the goal is only ever the final vertex
      cands.push_back({avail_deg_[w], w, static_cast<int>(i)});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.deg != b.deg ? a.deg < b.deg : a.w < b.w;
    });

    bool complete = true;
    for (const Cand& c : cands) {
      int cls = static_cast<int>(g_.kind[head][c.idx].cls);
      used_[cls]++;
      visit(c.w);
      complete = extend() && complete;
      if (found_) return complete;
      unvisit();
      used_[cls]--;
      if (!complete && nodes_ >= budget_.max_nodes) break;
    }
    return complete;
  }

  const BicirculantParams& p_;
  FlatGraph g_;
  CycleConstraints cons_;
  SearchBudget budget_;
  bool cycle_mode_;
  int start_;
  int goal_;
  std::vector<char> active_;
  size_t active_count_{0};
  Clock::time_point deadline_;

  std::vector<char> visited_;
  std::vector<int> avail_deg_;
  std::vector<char> bfs_mark_;
  std::vector<int> path_;
  int used_[3] = {0, 0, 0};
  std::uint64_t nodes_{0};
  bool found_{false};
};

std::vector<char> component_mask(const FlatGraph& g, int from) {
  std::vector<char> mask(g.n, 0);
  std::vector<int> queue{from};
  mask[from] = 1;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int w : g.adj[v]) {
      if (!mask[w]) {
        mask[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return mask;
}

}  // namespace

SearchResult find_cycle_exact(const BicirculantParams& p,
                              const CycleConstraints& constraints,
                              const SearchBudget& budget) {
  if (p.vertex_count() < 3 || !is_connected(p))
    return SearchResult{SearchStatus::ExhaustedNone, std::nullopt, 0};
  FlatGraph g = FlatGraph::build(p, constraints);
  std::vector<char> active(g.n, 1);
  Searcher s(p, std::move(g), constraints, budget, /*cycle=*/true,
             /*start=*/0, /*goal=*/-1, active);
  return s.run();
}

SearchResult find_path_between(const BicirculantParams& p, Vertex x, Vertex y,
                               const SearchBudget& budget) {
  if (x == y) fail(Errc::PathInvalid, "endpoints coincide");
  if (!p.valid_vertex(x) || !p.valid_vertex(y))
    fail(Errc::PathInvalid, "endpoint out of range");
  FlatGraph g = FlatGraph::build(p, {});
  const int sx = p.vertex_id(x);
  const int sy = p.vertex_id(y);
  auto mask = component_mask(g, sx);
  if (!mask[sy])
    fail(Errc::DifferentComponents, to_string(x) + " / " + to_string(y));
  Searcher s(p, std::move(g), {}, budget, /*cycle=*/false, sx, sy, mask);
  return s.run();
}

std::optional<std::vector<Vertex>> find_cycle_heuristic(
    const BicirculantParams& p, const SearchBudget& budget) {
  const int n = p.vertex_count();
  if (n < 3 || !is_connected(p)) return std::nullopt;
  FlatGraph g = FlatGraph::build(p, {});

  std::mt19937_64 rng(budget.seed);
  const auto deadline =
      Clock::now() + std::chrono::milliseconds(budget.max_millis);
  std::uint64_t steps = 0;

  std::vector<int> pos(n);   // position in path, -1 when absent
  std::vector<int> path;
  path.reserve(n);

  auto restart = [&]() {
    std::fill(pos.begin(), pos.end(), -1);
    path.clear();
    int v = static_cast<int>(rng() % n);
    path.push_back(v);
    pos[v] = 0;
  };

  restart();
  int stall = 0;
  while (steps < budget.max_nodes) {
    if ((steps++ & 0xfff) == 0 && Clock::now() > deadline) break;
    int head = path.back();

    // extend with a random unused neighbor if possible
    int choices = 0, pick = -1;
    for (int w : g.adj[head]) {
      if (pos[w] < 0 && static_cast<int>(rng() % ++choices) == 0) pick = w;
    }
    if (pick >= 0) {
      pos[pick] = static_cast<int>(path.size());
      path.push_back(pick);
      stall = 0;
      continue;
    }

    if (static_cast<int>(path.size()) == n) {
      // close if the endpoints are adjacent
      if (std::binary_search(g.adj[head].begin(), g.adj[head].end(),
                             path[0])) {
        std::vector<Vertex> cycle;
        cycle.reserve(n);
        for (int id : path) cycle.push_back(p.vertex_of(id));
        verify_certificate(p, cycle);  // soundness gate
        return cycle;
      }
    }

    // rotate: pivot on a random path neighbor of the head
    choices = 0;
    int pivot = -1;
    for (int w : g.adj[head]) {
      if (pos[w] >= 0 && pos[w] + 1 < static_cast<int>(path.size()) &&
          static_cast<int>(rng() % ++choices) == 0)
        pivot = w;
    }
    if (pivot < 0) {
      restart();
      continue;
    }
    int i = pos[pivot] + 1;
    std::reverse(path.begin() + i, path.end());
    for (int k = i; k < static_cast<int>(path.size()); ++k) pos[path[k]] = k;

    // occasionally flip the whole path so both ends get worked on,
    // and restart after long stalls
    if ((rng() & 0x3) == 0) {
      std::reverse(path.begin(), path.end());
      for (int k = 0; k < static_cast<int>(path.size()); ++k) pos[path[k]] = k;
    }
    if (++stall > 40 * n) restart(), stall = 0;
  }
  return std::nullopt;
}

}  // namespace bicyc
