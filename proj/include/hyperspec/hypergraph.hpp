#ifndef HYPERSPEC_HYPERGRAPH_HPP
#define HYPERSPEC_HYPERGRAPH_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace hyperspec {

using VertexPair = std::pair<int, int>;

// r-uniform hypergraph on vertices 0..n-1. Edges are stored sorted, both
// within each edge and across the edge list, so equality of edge lists is
// structural equality. Duplicate edges collapse silently; an edge with a
// repeated vertex is rejected.
class UniformHypergraph {
 public:
  UniformHypergraph(int n, int r, std::vector<std::vector<int>> edges);

  static UniformHypergraph empty(int n, int r) {
    return UniformHypergraph(n, r, {});
  }

  int vertex_count() const { return n_; }
  int uniformity() const { return r_; }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  // e may be given in any order; membership is tested on the sorted form
  bool has_edge(std::vector<int> e) const;

  // number of hyperedges containing v
  int degree(int v) const;

  // hyperedges containing v, each sorted, in edge-list order
  std::vector<std::vector<int>> star(int v) const;

  bool operator==(const UniformHypergraph& o) const {
    return n_ == o.n_ && r_ == o.r_ && edges_ == o.edges_;
  }

 private:
  int n_;
  int r_;
  std::vector<std::vector<int>> edges_;
};

// Simple undirected graph with sorted adjacency lists. Loops are rejected,
// parallel edges collapse.
class ShadowGraph {
 public:
  ShadowGraph(int n, std::vector<VertexPair> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<VertexPair>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;

 private:
  int n_;
  std::vector<VertexPair> edges_;  // each (u, v) with u < v, sorted
  std::vector<std::vector<int>> adj_;
};

// BFS distances from a single source; unreachable vertices hold -1.
struct DistanceMap {
  static constexpr int kUnreachable = -1;
  int source = 0;
  std::vector<int> dist;

  bool reachable(int v) const { return dist[static_cast<std::size_t>(v)] >= 0; }
  int operator[](int v) const { return dist[static_cast<std::size_t>(v)]; }
};

// Far side of a graph edge as seen from a reference vertex: the components of
// G - {u, w} that do not contain v, their internal edges, plus the edges
// attaching them to u or w. Empty when the edge has no far side.
struct SubgraphView {
  std::vector<int> vertices;       // sorted
  std::vector<VertexPair> edges;   // internal + attachment, sorted
  VertexPair anchors{-1, -1};      // the removed pair, (min, max)

  bool empty() const { return vertices.empty(); }
};

// 2-section: u,w adjacent iff they share a hyperedge
ShadowGraph shadow(const UniformHypergraph& h);

// edges of the link of v: { e \ {v} : e in E(H), v in e }, sorted
std::vector<std::vector<int>> link(const UniformHypergraph& h, int v);

// completions of a shadow edge to a hyperedge: { w : e + {w} in E(H) }.
// Only meaningful at r = 3; other uniformities are rejected. Errors when e
// is not an edge of shadow(h).
std::vector<int> co_link(const UniformHypergraph& h, VertexPair e);

DistanceMap bfs_distances(const ShadowGraph& g, int source);

// (dist(u, v) + dist(w, v)) / 2 for edge e = {u, w}; half-integers are exact
// in double. Errors when e is not an edge or either endpoint is unreachable
// from v.
double edge_level(const ShadowGraph& g, VertexPair e, int v);

// Far-side view of edge e from vertex v. Requires g two-connected and v not
// an endpoint of e.
SubgraphView phi(const ShadowGraph& g, VertexPair e, int v);

// component label per vertex, labels are 0-based in order of first vertex
std::vector<int> component_labels(const ShadowGraph& g);

int component_count(const ShadowGraph& g);

bool is_connected(const ShadowGraph& g);

// maximal 2-connected pieces as edge lists; bridges appear as single-edge
// blocks, isolated vertices appear nowhere
std::vector<std::vector<VertexPair>> biconnected_blocks(const ShadowGraph& g);

bool is_biconnected(const ShadowGraph& g);

}  // namespace hyperspec

#endif  // HYPERSPEC_HYPERGRAPH_HPP
