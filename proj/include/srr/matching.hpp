#pragma once

#include "srr/graph.hpp"
#include "srr/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace srr {

/// Pairwise non-adjacent edges, as ascending edge ids.
struct Matching {
  std::vector<std::size_t> edges;

  std::size_t size() const { return edges.size(); }
  /// 0/1 value per edge of a graph with `edge_count` edges.
  RationalVector indicator(std::size_t edge_count) const;
};

/// One value per edge, each in [0, 1].
struct FractionalMatching {
  RationalVector values;

  Rational total() const;
};

/// Ascending vertex ids touching every edge.
struct VertexCover {
  std::vector<std::size_t> vertices;

  std::size_t size() const { return vertices.size(); }
};

/// Maximum-cardinality matching by Edmonds' blossom algorithm. Parallel edges are
/// distinct; the lowest edge id is reported for each matched vertex pair.
Matching max_matching(const ServiceGraph& g);

/// Exact optimum of max sum x_e subject to per-vertex incident sums <= 1, solved as
/// an LP. Requires unit capacities (std::invalid_argument otherwise). The returned
/// assignment is a vertex of the fractional matching polytope.
std::pair<Rational, FractionalMatching> fractional_matching_number(const ServiceGraph& g);

/// Half the maximum matching of the bipartite double cover. Independent of the LP
/// and of the blossom code; used to cross-check fractional_matching_number.
Rational fractional_matching_oracle(const ServiceGraph& g);

/// Minimum vertex cover. Bipartite graphs use the Konig construction from a
/// maximum matching; other graphs use exact branch and bound and throw GuardError
/// above 64 vertices.
VertexCover min_vertex_cover(const ServiceGraph& g);

bool is_matching(const ServiceGraph& g, const Matching& m);
/// Checks (5) against the graph's vertex capacities.
bool is_fractional_matching(const ServiceGraph& g, const FractionalMatching& x);
bool is_vertex_cover(const ServiceGraph& g, const VertexCover& c);

}  // namespace srr
