#include "srr/matching.hpp"

#include "srr/errors.hpp"
#include "srr/lp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace srr {

RationalVector Matching::indicator(std::size_t edge_count) const {
  RationalVector x(edge_count, Rational(0));
  for (std::size_t e : edges) x.at(e) = 1;
  return x;
}

Rational FractionalMatching::total() const {
  return std::accumulate(values.begin(), values.end(), Rational(0));
}

namespace {

constexpr int kNone = -1;

/// Edmonds' blossom algorithm on a simple adjacency structure.
class Blossom {
 public:
  explicit Blossom(const ServiceGraph& g)
      : n_(static_cast<int>(g.vertex_count())), adj_(g.vertex_count()), match_(g.vertex_count(), kNone) {
    for (const auto& e : g.edges()) {
      adj_[e.u].push_back(static_cast<int>(e.v));
      adj_[e.v].push_back(static_cast<int>(e.u));
    }
    // Greedy start in edge order.
    for (const auto& e : g.edges()) {
      if (match_[e.u] == kNone && match_[e.v] == kNone) {
        match_[e.u] = static_cast<int>(e.v);
        match_[e.v] = static_cast<int>(e.u);
      }
    }
  }

  const std::vector<int>& run() {
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != kNone) continue;
      int v = find_augmenting_path(root);
      while (v != kNone) {
        const int pv = parent_[v];
        const int next = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = next;
      }
    }
    return match_;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    used_.assign(n_, false);
    parent_.assign(n_, kNone);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          // Odd cycle: contract the blossom.
          const int cur = lowest_common_base(v, to);
          in_blossom_.assign(n_, false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          const int next = match_[to];
          used_[next] = true;
          queue.push_back(next);
        }
      }
    }
    return kNone;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

/// Kuhn's augmenting-path matching on a bipartite graph given as left adjacency.
std::size_t bipartite_matching_size(const std::vector<std::vector<std::size_t>>& left_adj,
                                    std::size_t right_count) {
  std::vector<std::size_t> match_right(right_count, SIZE_MAX);
  std::size_t size = 0;
  for (std::size_t u = 0; u < left_adj.size(); ++u) {
    std::vector<bool> visited(right_count, false);
    std::function<bool(std::size_t)> augment = [&](std::size_t a) {
      for (std::size_t b : left_adj[a]) {
        if (visited[b]) continue;
        visited[b] = true;
        if (match_right[b] == SIZE_MAX || augment(match_right[b])) {
          match_right[b] = a;
          return true;
        }
      }
      return false;
    };
    if (augment(u)) ++size;
  }
  return size;
}

VertexCover konig_cover(const ServiceGraph& g, const Bipartition& parts, const Matching& m) {
  const std::size_t nv = g.vertex_count();
  std::vector<bool> in_a(nv, false);
  for (std::size_t v : parts.side_a) in_a[v] = true;
  std::vector<std::size_t> mate_edge(nv, SIZE_MAX);
  for (std::size_t e : m.edges) {
    mate_edge[g.edge(e).u] = e;
    mate_edge[g.edge(e).v] = e;
  }

  // Alternating reachability from unmatched A vertices: non-matching edges A->B,
  // matching edges B->A.
  std::vector<bool> reached(nv, false);
  std::deque<std::size_t> queue;
  for (std::size_t v : parts.side_a) {
    if (mate_edge[v] == SIZE_MAX) {
      reached[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : g.incident(v)) {
      const std::size_t w = g.edge(e).other(v);
      const bool matched_edge = mate_edge[v] == e;
      if (reached[w]) continue;
      if (in_a[v] != matched_edge) {
        reached[w] = true;
        queue.push_back(w);
      }
    }
  }

  VertexCover cover;
  for (std::size_t v = 0; v < nv; ++v) {
    if (in_a[v] ? !reached[v] : reached[v]) cover.vertices.push_back(v);
  }
  return cover;
}

class CoverSearch {
 public:
  explicit CoverSearch(const ServiceGraph& g) {
    for (const auto& e : g.edges()) edges_.push_back((std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v));
    // Both endpoints of a maximal matching always cover.
    std::uint64_t cover = 0;
    for (std::uint64_t e : edges_) {
      if ((e & cover) == 0) cover |= e;
    }
    best_ = cover;
  }

  std::uint64_t run() {
    search(0);
    return best_;
  }

 private:
  /// Size of a greedy maximal matching among uncovered edges; a lower bound on
  /// the vertices still needed.
  int matching_bound(std::uint64_t chosen) const {
    std::uint64_t used = 0;
    int count = 0;
    for (std::uint64_t e : edges_) {
      if ((e & chosen) == 0 && (e & used) == 0) {
        used |= e;
        ++count;
      }
    }
    return count;
  }

  void search(std::uint64_t chosen) {
    const int size = std::popcount(chosen);
    if (size + matching_bound(chosen) >= std::popcount(best_)) return;
    const auto uncovered =
        std::find_if(edges_.begin(), edges_.end(), [chosen](std::uint64_t e) { return (e & chosen) == 0; });
    if (uncovered == edges_.end()) {
      best_ = chosen;
      return;
    }
    const std::uint64_t low = *uncovered & (~*uncovered + 1);
    search(chosen | low);
    search(chosen | (*uncovered ^ low));
  }

  std::vector<std::uint64_t> edges_;
  std::uint64_t best_ = 0;
};

}  // namespace

Matching max_matching(const ServiceGraph& g) {
  const std::vector<int> mate = Blossom(g).run();
  Matching m;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (mate[ed.u] != static_cast<int>(ed.v)) continue;
    const bool first = std::none_of(m.edges.begin(), m.edges.end(), [&](std::size_t f) {
      return g.edge(f).u == ed.u || g.edge(f).v == ed.u || g.edge(f).u == ed.v || g.edge(f).v == ed.v;
    });
    if (first) m.edges.push_back(e);
  }
  return m;
}

std::pair<Rational, FractionalMatching> fractional_matching_number(const ServiceGraph& g) {
  if (!g.unit_capacities()) {
    throw std::invalid_argument("fractional matching number requires unit capacities");
  }
  const std::size_t m = g.edge_count();
  RationalProgram lp(m);
  lp.set_objective(RationalVector(m, Rational(1)));
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.incident(v).empty()) continue;
    RationalVector row(m, Rational(0));
    for (std::size_t e : g.incident(v)) row[e] = 1;
    lp.add_constraint(std::move(row), Relation::LessEqual, Rational(1));
  }
  for (std::size_t e = 0; e < m; ++e) lp.set_upper_bound(e, Rational(1));
  auto outcome = solve_max(lp);
  if (outcome.status != LPStatus::Optimal) {
    throw std::logic_error("fractional matching LP is bounded and feasible; solver disagreed");
  }
  return {outcome.value, FractionalMatching{std::move(outcome.assignment)}};
}

Rational fractional_matching_oracle(const ServiceGraph& g) {
  // Double cover: left copy u', right copy u''; edge (u,v) -> (u',v'') and (v',u'').
  std::vector<std::vector<std::size_t>> left(g.vertex_count());
  for (const auto& e : g.edges()) {
    left[e.u].push_back(e.v);
    left[e.v].push_back(e.u);
  }
  return Rational(bipartite_matching_size(left, g.vertex_count())) / 2;
}

VertexCover min_vertex_cover(const ServiceGraph& g) {
  if (const auto parts = is_bipartite(g)) return konig_cover(g, *parts, max_matching(g));
  if (g.vertex_count() > 64) {
    throw GuardError("exact cover too large: " + std::to_string(g.vertex_count()) +
                     " vertices on a non-bipartite graph (limit 64)");
  }
  const std::uint64_t best = CoverSearch(g).run();
  VertexCover cover;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if ((best >> v) & 1U) cover.vertices.push_back(v);
  }
  return cover;
}

bool is_matching(const ServiceGraph& g, const Matching& m) {
  std::vector<bool> used(g.vertex_count(), false);
  for (std::size_t e : m.edges) {
    if (e >= g.edge_count()) return false;
    const auto& ed = g.edge(e);
    if (used[ed.u] || used[ed.v]) return false;
    used[ed.u] = used[ed.v] = true;
  }
  return true;
}

bool is_fractional_matching(const ServiceGraph& g, const FractionalMatching& x) {
  if (x.values.size() != g.edge_count()) return false;
  for (const auto& v : x.values) {
    if (v < 0 || v > 1) return false;
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    Rational sum(0);
    for (std::size_t e : g.incident(v)) sum += x.values[e];
    if (sum > g.vertex(v).capacity) return false;
  }
  return true;
}

bool is_vertex_cover(const ServiceGraph& g, const VertexCover& c) {
  std::vector<bool> in(g.vertex_count(), false);
  for (std::size_t v : c.vertices) {
    if (v >= g.vertex_count()) return false;
    in[v] = true;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const ServiceEdge& e) { return in[e.u] || in[e.v]; });
}

}  // namespace srr
