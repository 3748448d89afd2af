#pragma once

#include "srr/code.hpp"
#include "srr/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace srr {

struct ServiceVertex {
  std::size_t label = 0;  // server label 1..n; 0 for dummy vertices
  Rational capacity{1};
  bool dummy = false;
};

/// One recovery set. `file` is the edge color and `set` indexes into the file's
/// catalog entries.
struct ServiceEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t file = 0;
  std::size_t set = 0;

  std::size_t other(std::size_t w) const { return w == u ? v : u; }
};

/// Edge-colored multigraph of a code's recovery sets. Vertices 0..n-1 are the
/// servers; each systematic recovery set gets its own dummy vertex after them.
/// Edge order matches catalog order, so edge ids double as allocation indices.
class ServiceGraph {
 public:
  /// Validates: no self-loops, endpoint pairs distinct within a color, dummies
  /// have degree one. Throws std::invalid_argument otherwise.
  ServiceGraph(std::vector<ServiceVertex> vertices, std::vector<ServiceEdge> edges,
               std::size_t files);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t files() const { return files_; }
  std::size_t real_vertex_count() const;
  const ServiceVertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const std::vector<ServiceVertex>& vertices() const { return vertices_; }
  const ServiceEdge& edge(std::size_t e) const { return edges_.at(e); }
  const std::vector<ServiceEdge>& edges() const { return edges_; }
  /// Edge ids incident to v, ascending.
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_.at(v); }
  std::size_t edges_of_color(std::size_t file) const;
  bool unit_capacities() const;

  /// Subgraph with the same vertices and only the edges of one color.
  ServiceGraph color_subgraph(std::size_t file) const;

 private:
  std::vector<ServiceVertex> vertices_;
  std::vector<ServiceEdge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::size_t files_;
};

struct Bipartition {
  std::vector<std::size_t> side_a;  // ascending vertex ids
  std::vector<std::size_t> side_b;
};

/// mu must have one nonnegative entry per server. Dummy capacity equals the
/// capacity of its real endpoint.
ServiceGraph build_graph(const RecoverySetCatalog& catalog, const RationalVector& mu);
ServiceGraph build_graph(const RecoverySetCatalog& catalog);  // mu = 1_n

/// BFS 2-coloring per component; the lowest-numbered vertex of each component
/// goes to side A. Empty optional when an odd cycle exists.
std::optional<Bipartition> is_bipartite(const ServiceGraph& g);

std::string export_dot(const ServiceGraph& g);
/// {vertices:[{id,label,capacity}], edges:[{u,v,file}]}, file 1-based.
nlohmann::ordered_json graph_to_json(const ServiceGraph& g);

}  // namespace srr
