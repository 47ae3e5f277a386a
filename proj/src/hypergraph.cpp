#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace hyperspec {

namespace {

std::string bad_vertex_msg(const char* what, int v, int n) {
  return std::string(what) + " vertex " + std::to_string(v) +
         " outside [0, " + std::to_string(n) + ")";
}

void check_vertex(int v, int n, const char* what) {
  if (v < 0 || v >= n) throw std::invalid_argument(bad_vertex_msg(what, v, n));
}

}  // namespace

UniformHypergraph::UniformHypergraph(int n, int r,
                                     std::vector<std::vector<int>> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
  if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
  if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
  for (auto& e : edges_) {
    if (static_cast<int>(e.size()) != r_) {
      throw std::invalid_argument("edge with " + std::to_string(e.size()) +
                                  " vertices in a " + std::to_string(r_) +
                                  "-uniform hypergraph");
    }
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
      check_vertex(e[i], n_, "edge");
      if (i > 0 && e[i] == e[i - 1]) {
        throw std::invalid_argument("edge repeats vertex " +
                                    std::to_string(e[i]));
      }
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool UniformHypergraph::has_edge(std::vector<int> e) const {
  std::sort(e.begin(), e.end());
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int UniformHypergraph::degree(int v) const {
  check_vertex(v, n_, "query");
  int d = 0;
  for (const auto& e : edges_) {
    if (std::binary_search(e.begin(), e.end(), v)) ++d;
  }
  return d;
}

std::vector<std::vector<int>> UniformHypergraph::star(int v) const {
  check_vertex(v, n_, "query");
  std::vector<std::vector<int>> out;
  for (const auto& e : edges_) {
    if (std::binary_search(e.begin(), e.end(), v)) out.push_back(e);
  }
  return out;
}

ShadowGraph::ShadowGraph(int n, std::vector<VertexPair> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
  for (auto& [u, v] : edges) {
    check_vertex(u, n_, "edge");
    check_vertex(v, n_, "edge");
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.assign(static_cast<std::size_t>(n_), {});
  for (const auto& [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

const std::vector<int>& ShadowGraph::neighbors(int v) const {
  check_vertex(v, n_, "query");
  return adj_[static_cast<std::size_t>(v)];
}

bool ShadowGraph::has_edge(int u, int v) const {
  check_vertex(u, n_, "query");
  check_vertex(v, n_, "query");
  if (u == v) return false;
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

ShadowGraph shadow(const UniformHypergraph& h) {
  std::vector<VertexPair> pairs;
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        pairs.emplace_back(e[i], e[j]);
      }
    }
  }
  return ShadowGraph(h.vertex_count(), std::move(pairs));
}

std::vector<std::vector<int>> link(const UniformHypergraph& h, int v) {
  check_vertex(v, h.vertex_count(), "query");
  std::vector<std::vector<int>> out;
  for (const auto& e : h.edges()) {
    if (!std::binary_search(e.begin(), e.end(), v)) continue;
    std::vector<int> rest;
    rest.reserve(e.size() - 1);
    for (int u : e) {
      if (u != v) rest.push_back(u);
    }
    out.push_back(std::move(rest));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> co_link(const UniformHypergraph& h, VertexPair e) {
  if (h.uniformity() != 3) {
    throw std::invalid_argument("co_link requires a 3-uniform hypergraph");
  }
  if (e.first > e.second) std::swap(e.first, e.second);
  check_vertex(e.first, h.vertex_count(), "query");
  check_vertex(e.second, h.vertex_count(), "query");
  std::vector<int> out;
  bool seen = false;
  for (const auto& he : h.edges()) {
    if (!std::binary_search(he.begin(), he.end(), e.first)) continue;
    if (!std::binary_search(he.begin(), he.end(), e.second)) continue;
    seen = true;
    for (int w : he) {
      if (w != e.first && w != e.second) out.push_back(w);
    }
  }
  if (!seen) {
    throw std::invalid_argument("pair {" + std::to_string(e.first) + ", " +
                                std::to_string(e.second) +
                                "} is not a shadow edge");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DistanceMap bfs_distances(const ShadowGraph& g, int source) {
  check_vertex(source, g.vertex_count(), "source");
  DistanceMap m;
  m.source = source;
  m.dist.assign(static_cast<std::size_t>(g.vertex_count()),
                DistanceMap::kUnreachable);
  std::queue<int> q;
  m.dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (m.dist[static_cast<std::size_t>(w)] < 0) {
        m.dist[static_cast<std::size_t>(w)] =
            m.dist[static_cast<std::size_t>(u)] + 1;
        q.push(w);
      }
    }
  }
  return m;
}

double edge_level(const ShadowGraph& g, VertexPair e, int v) {
  if (e.first > e.second) std::swap(e.first, e.second);
  if (!g.has_edge(e.first, e.second)) {
    throw std::invalid_argument("pair {" + std::to_string(e.first) + ", " +
                                std::to_string(e.second) + "} is not an edge");
  }
  check_vertex(v, g.vertex_count(), "reference");
  DistanceMap m = bfs_distances(g, v);
  if (!m.reachable(e.first) || !m.reachable(e.second)) {
    throw std::invalid_argument("edge endpoints unreachable from vertex " +
                                std::to_string(v));
  }
  return (m[e.first] + m[e.second]) / 2.0;
}

SubgraphView phi(const ShadowGraph& g, VertexPair e, int v) {
  if (e.first > e.second) std::swap(e.first, e.second);
  if (!g.has_edge(e.first, e.second)) {
    throw std::invalid_argument("pair {" + std::to_string(e.first) + ", " +
                                std::to_string(e.second) + "} is not an edge");
  }
  check_vertex(v, g.vertex_count(), "reference");
  if (v == e.first || v == e.second) {
    throw std::invalid_argument("reference vertex lies on the edge");
  }
  if (!is_biconnected(g)) {
    throw std::invalid_argument("far-side view requires a 2-connected graph");
  }
  const int n = g.vertex_count();
  const int u = e.first;
  const int w = e.second;

  // flood G - {u, w} from v; anything not reached is on the far side
  std::vector<char> blocked(static_cast<std::size_t>(n), 0);
  blocked[static_cast<std::size_t>(u)] = 1;
  blocked[static_cast<std::size_t>(w)] = 1;
  std::vector<char> near(static_cast<std::size_t>(n), 0);
  std::queue<int> q;
  near[static_cast<std::size_t>(v)] = 1;
  q.push(v);
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (int b : g.neighbors(a)) {
      if (!blocked[static_cast<std::size_t>(b)] &&
          !near[static_cast<std::size_t>(b)]) {
        near[static_cast<std::size_t>(b)] = 1;
        q.push(b);
      }
    }
  }

  SubgraphView view;
  view.anchors = {u, w};
  for (int a = 0; a < n; ++a) {
    if (!blocked[static_cast<std::size_t>(a)] &&
        !near[static_cast<std::size_t>(a)]) {
      view.vertices.push_back(a);
    }
  }
  for (const auto& [a, b] : g.edges()) {
    const bool a_far = std::binary_search(view.vertices.begin(),
                                          view.vertices.end(), a);
    const bool b_far = std::binary_search(view.vertices.begin(),
                                          view.vertices.end(), b);
    if (a_far && b_far) {
      view.edges.emplace_back(a, b);
    } else if ((a_far && (b == u || b == w)) ||
               (b_far && (a == u || a == w))) {
      view.edges.emplace_back(a, b);
    }
  }
  return view;
}

std::vector<int> component_labels(const ShadowGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    std::queue<int> q;
    label[static_cast<std::size_t>(s)] = next;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  return label;
}

int component_count(const ShadowGraph& g) {
  const auto labels = component_labels(g);
  int hi = -1;
  for (int l : labels) hi = std::max(hi, l);
  return hi + 1;
}

bool is_connected(const ShadowGraph& g) { return component_count(g) <= 1; }

std::vector<std::vector<VertexPair>> biconnected_blocks(const ShadowGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<VertexPair> edge_stack;
  std::vector<std::vector<VertexPair>> blocks;
  int timer = 0;

  // iterative DFS; each frame remembers its position in the adjacency list
  struct Frame {
    int v;
    int parent;
    std::size_t next_idx;
  };
  std::vector<Frame> stack;

  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    stack.push_back({root, -1, 0});
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] =
        timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = g.neighbors(f.v);
      bool descended = false;
      while (f.next_idx < nbrs.size()) {
        const int w = nbrs[f.next_idx++];
        if (disc[static_cast<std::size_t>(w)] < 0) {
          edge_stack.emplace_back(f.v, w);
          disc[static_cast<std::size_t>(w)] =
              low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, f.v, 0});
          descended = true;
          break;
        }
        if (w != f.parent &&
            disc[static_cast<std::size_t>(w)] <
                disc[static_cast<std::size_t>(f.v)]) {
          edge_stack.emplace_back(f.v, w);
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)],
                       disc[static_cast<std::size_t>(w)]);
        }
      }
      if (descended) continue;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& p = stack.back();
        low[static_cast<std::size_t>(p.v)] =
            std::min(low[static_cast<std::size_t>(p.v)],
                     low[static_cast<std::size_t>(f.v)]);
        if (low[static_cast<std::size_t>(f.v)] >=
            disc[static_cast<std::size_t>(p.v)]) {
          // pop one block, delimited by the tree edge (p.v, f.v)
          std::vector<VertexPair> block;
          while (!edge_stack.empty()) {
            VertexPair pe = edge_stack.back();
            edge_stack.pop_back();
            if (pe.first > pe.second) std::swap(pe.first, pe.second);
            block.push_back(pe);
            if ((pe.first == std::min(p.v, f.v)) &&
                (pe.second == std::max(p.v, f.v))) {
              break;
            }
          }
          std::sort(block.begin(), block.end());
          block.erase(std::unique(block.begin(), block.end()), block.end());
          blocks.push_back(std::move(block));
        }
      }
    }
  }
  return blocks;
}

bool is_biconnected(const ShadowGraph& g) {
  if (g.vertex_count() < 3) return false;
  auto blocks = biconnected_blocks(g);
  if (blocks.size() != 1) return false;
  std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& [u, v] : blocks[0]) {
    covered[static_cast<std::size_t>(u)] = 1;
    covered[static_cast<std::size_t>(v)] = 1;
  }
  for (char c : covered) {
    if (!c) return false;
  }
  return true;
}

}  // namespace hyperspec
