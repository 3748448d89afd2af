#include "srr/graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace srr {

ServiceGraph::ServiceGraph(std::vector<ServiceVertex> vertices, std::vector<ServiceEdge> edges,
                           std::size_t files)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), files_(files) {
  incident_.resize(vertices_.size());
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& ed = edges_[e];
    if (ed.u >= vertices_.size() || ed.v >= vertices_.size()) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (ed.u == ed.v) throw std::invalid_argument("self-loop in service graph");
    if (ed.file >= files_) throw std::invalid_argument("edge color out of range");
    if (!seen.emplace(ed.file, std::min(ed.u, ed.v), std::max(ed.u, ed.v)).second) {
      throw std::invalid_argument("parallel edges within one color");
    }
    incident_[ed.u].push_back(e);
    incident_[ed.v].push_back(e);
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].capacity < 0) throw std::invalid_argument("negative vertex capacity");
    if (vertices_[v].dummy && incident_[v].size() != 1) {
      throw std::invalid_argument("dummy vertex must have degree 1");
    }
  }
}

std::size_t ServiceGraph::real_vertex_count() const {
  return static_cast<std::size_t>(std::count_if(vertices_.begin(), vertices_.end(),
                                                [](const auto& v) { return !v.dummy; }));
}

std::size_t ServiceGraph::edges_of_color(std::size_t file) const {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [file](const auto& e) { return e.file == file; }));
}

bool ServiceGraph::unit_capacities() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const auto& v) { return v.capacity == 1; });
}

ServiceGraph ServiceGraph::color_subgraph(std::size_t file) const {
  // Dummies of other colors would become isolated, which the degree-1 invariant
  // forbids, so they are dropped and the remaining ids compacted.
  std::vector<std::size_t> remap(vertices_.size(), SIZE_MAX);
  std::vector<ServiceVertex> verts;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const bool keep = !vertices_[v].dummy || edges_[incident_[v].front()].file == file;
    if (keep) {
      remap[v] = verts.size();
      verts.push_back(vertices_[v]);
    }
  }
  std::vector<ServiceEdge> kept;
  for (const auto& e : edges_) {
    if (e.file == file) kept.push_back({remap[e.u], remap[e.v], e.file, e.set});
  }
  return ServiceGraph(std::move(verts), std::move(kept), files_);
}

ServiceGraph build_graph(const RecoverySetCatalog& catalog, const RationalVector& mu) {
  const std::size_t n = catalog.servers();
  if (mu.size() != n) {
    throw std::invalid_argument("capacity vector has " + std::to_string(mu.size()) +
                                " entries, expected " + std::to_string(n));
  }
  std::vector<ServiceVertex> verts;
  for (std::size_t l = 0; l < n; ++l) {
    if (mu[l] < 0) throw std::invalid_argument("negative capacity for server " + std::to_string(l + 1));
    verts.push_back({l + 1, mu[l], false});
  }
  std::vector<ServiceEdge> edges;
  for (std::size_t i = 0; i < catalog.files(); ++i) {
    const auto& sets = catalog.sets(i);
    for (std::size_t j = 0; j < sets.size(); ++j) {
      const auto& s = sets[j].servers;
      if (s.size() == 1) {
        verts.push_back({0, mu[s[0]], true});
        edges.push_back({verts.size() - 1, s[0], i, j});
      } else {
        edges.push_back({s[0], s[1], i, j});
      }
    }
  }
  return ServiceGraph(std::move(verts), std::move(edges), catalog.files());
}

ServiceGraph build_graph(const RecoverySetCatalog& catalog) {
  return build_graph(catalog, RationalVector(catalog.servers(), Rational(1)));
}

std::optional<Bipartition> is_bipartite(const ServiceGraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (std::size_t root = 0; root < g.vertex_count(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t e : g.incident(v)) {
        const std::size_t w = g.edge(e).other(v);
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    (side[v] == 0 ? out.side_a : out.side_b).push_back(v);
  }
  return out;
}

namespace {

constexpr std::array<const char*, 10> kPalette = {
    "magenta", "green", "blue", "orange", "red", "cyan", "purple", "brown", "gold", "gray"};

std::string vertex_name(const ServiceGraph& g, std::size_t v) {
  return g.vertex(v).dummy ? "d" + std::to_string(v) : "s" + std::to_string(g.vertex(v).label);
}

}  // namespace

std::string export_dot(const ServiceGraph& g) {
  std::ostringstream os;
  os << "graph service {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& vx = g.vertex(v);
    os << "  " << vertex_name(g, v) << " [label=\"" << vx.label << "\"";
    if (vx.dummy) os << ", shape=box";
    os << "];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  " << vertex_name(g, e.u) << " -- " << vertex_name(g, e.v) << " [color="
       << kPalette[e.file % kPalette.size()] << ", label=\"f" << e.file + 1 << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json graph_to_json(const ServiceGraph& g) {
  nlohmann::ordered_json out;
  auto verts = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    verts.push_back({{"id", v}, {"label", g.vertex(v).label}, {"capacity", to_string(g.vertex(v).capacity)}});
  }
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"file", e.file + 1}});
  out["vertices"] = std::move(verts);
  out["edges"] = std::move(edges);
  return out;
}

}  // namespace srr
