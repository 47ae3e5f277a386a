#include "hyperspec/triangulation.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hyperspec {

namespace {

std::string pair_str(VertexPair p) {
  return "{" + std::to_string(p.first) + ", " + std::to_string(p.second) + "}";
}

bool is_polygon_side(int n, VertexPair p) {
  return p.second - p.first == 1 || (p.first == 0 && p.second == n - 1);
}

VertexPair normalized(VertexPair p) {
  if (p.first > p.second) std::swap(p.first, p.second);
  return p;
}

}  // namespace

bool diagonals_cross(int n, VertexPair a, VertexPair b) {
  a = normalized(a);
  b = normalized(b);
  (void)n;
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

Triangulation make_triangulation(int n, std::vector<VertexPair> diagonals) {
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  for (auto& d : diagonals) {
    d = normalized(d);
    if (d.first < 0 || d.second >= n) {
      throw std::invalid_argument("diagonal " + pair_str(d) +
                                  " outside polygon 0.." + std::to_string(n - 1));
    }
    if (d.first == d.second || is_polygon_side(n, d)) {
      throw std::invalid_argument("pair " + pair_str(d) +
                                  " is not a polygon diagonal");
    }
  }
  std::sort(diagonals.begin(), diagonals.end());
  for (std::size_t i = 1; i < diagonals.size(); ++i) {
    if (diagonals[i] == diagonals[i - 1]) {
      throw std::invalid_argument("duplicate diagonal " + pair_str(diagonals[i]));
    }
  }
  if (static_cast<int>(diagonals.size()) != n - 3) {
    throw std::invalid_argument(
        "expected " + std::to_string(n - 3) + " diagonals, got " +
        std::to_string(diagonals.size()));
  }
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonals.size(); ++j) {
      if (diagonals_cross(n, diagonals[i], diagonals[j])) {
        throw std::invalid_argument("diagonals " + pair_str(diagonals[i]) +
                                    " and " + pair_str(diagonals[j]) +
                                    " cross");
      }
    }
  }
  return Triangulation{n, std::move(diagonals)};
}

UniformHypergraph fan(int n) {
  if (n < 3) throw std::invalid_argument("fan needs at least 3 vertices");
  std::vector<std::vector<int>> edges;
  edges.reserve(static_cast<std::size_t>(n - 2));
  for (int i = 1; i + 1 < n; ++i) {
    edges.push_back({0, i, i + 1});
  }
  return UniformHypergraph(n, 3, std::move(edges));
}

Triangulation fan_triangulation(int n) {
  if (n < 3) throw std::invalid_argument("fan needs at least 3 vertices");
  std::vector<VertexPair> diags;
  for (int i = 2; i + 1 < n; ++i) diags.emplace_back(0, i);
  return make_triangulation(n, std::move(diags));
}

std::vector<std::array<int, 3>> triangles_of(const Triangulation& t) {
  const int n = t.n;
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
  std::vector<VertexPair> edges;
  auto add_edge = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    nbr[static_cast<std::size_t>(a)].push_back(b);
    nbr[static_cast<std::size_t>(b)].push_back(a);
    edges.emplace_back(a, b);
  };
  for (int i = 0; i + 1 < n; ++i) add_edge(i, i + 1);
  add_edge(0, n - 1);
  for (const auto& [a, b] : t.diagonals) add_edge(a, b);
  for (auto& a : nbr) std::sort(a.begin(), a.end());

  // every 3-clique of a polygon triangulation bounds an empty region, so the
  // cliques are exactly the triangles; count each at its least edge
  std::vector<std::array<int, 3>> tris;
  for (const auto& [u, v] : edges) {
    const auto& nu = nbr[static_cast<std::size_t>(u)];
    const auto& nv = nbr[static_cast<std::size_t>(v)];
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i] < nv[j]) {
        ++i;
      } else if (nu[i] > nv[j]) {
        ++j;
      } else {
        if (nu[i] > v) tris.push_back({u, v, nu[i]});
        ++i;
        ++j;
      }
    }
  }
  std::sort(tris.begin(), tris.end());
  if (static_cast<int>(tris.size()) != n - 2) {
    throw std::logic_error("triangle extraction found " +
                           std::to_string(tris.size()) + " triangles for n = " +
                           std::to_string(n));
  }
  return tris;
}

UniformHypergraph to_hypergraph(const Triangulation& t) {
  std::vector<std::vector<int>> edges;
  for (const auto& tri : triangles_of(t)) {
    edges.push_back({tri[0], tri[1], tri[2]});
  }
  return UniformHypergraph(t.n, 3, std::move(edges));
}

DualTree dual_tree(const Triangulation& t) {
  DualTree d;
  d.triangles = triangles_of(t);
  for (const auto& diag : t.diagonals) {
    int first = -1;
    for (std::size_t i = 0; i < d.triangles.size(); ++i) {
      const auto& tri = d.triangles[i];
      const bool has_a = tri[0] == diag.first || tri[1] == diag.first ||
                         tri[2] == diag.first;
      const bool has_b = tri[0] == diag.second || tri[1] == diag.second ||
                         tri[2] == diag.second;
      if (has_a && has_b) {
        if (first < 0) {
          first = static_cast<int>(i);
        } else {
          d.links.emplace_back(first, static_cast<int>(i));
          first = -2;
        }
      }
    }
    if (first != -2) {
      throw std::logic_error("diagonal " + pair_str(diag) +
                             " does not separate two triangles");
    }
  }
  std::sort(d.links.begin(), d.links.end());
  return d;
}

Triangulation canonical_form(const Triangulation& t) {
  const int n = t.n;
  std::vector<VertexPair> best = t.diagonals;
  std::vector<VertexPair> mapped(t.diagonals.size());
  auto consider = [&](auto&& f) {
    for (std::size_t i = 0; i < t.diagonals.size(); ++i) {
      mapped[i] = normalized({f(t.diagonals[i].first), f(t.diagonals[i].second)});
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped < best) best = mapped;
  };
  for (int s = 0; s < n; ++s) {
    consider([&](int x) { return (x + s) % n; });
    consider([&](int x) { return ((s - x) % n + n) % n; });
  }
  return Triangulation{n, std::move(best)};
}

namespace {

// Recursively split the range lo..hi of the polygon boundary by choosing the
// triangle that sits on the chord (lo, hi).
void enum_ranges(int n, std::vector<VertexPair>& pending,
                 std::vector<VertexPair>& diags,
                 const std::function<void(const Triangulation&)>& emit) {
  if (pending.empty()) {
    std::vector<VertexPair> sorted = diags;
    std::sort(sorted.begin(), sorted.end());
    emit(Triangulation{n, std::move(sorted)});
    return;
  }
  const VertexPair range = pending.back();
  pending.pop_back();
  const int lo = range.first;
  const int hi = range.second;
  for (int m = lo + 1; m < hi; ++m) {
    std::size_t added = 0;
    auto maybe_diag = [&](int a, int b) {
      if (b - a >= 2 && !(a == 0 && b == n - 1)) {
        diags.emplace_back(a, b);
        ++added;
      }
    };
    maybe_diag(lo, m);
    maybe_diag(m, hi);
    std::size_t pushed = 0;
    if (m - lo >= 2) {
      pending.emplace_back(lo, m);
      ++pushed;
    }
    if (hi - m >= 2) {
      pending.emplace_back(m, hi);
      ++pushed;
    }
    enum_ranges(n, pending, diags, emit);
    pending.resize(pending.size() - pushed);
    diags.resize(diags.size() - added);
  }
  pending.push_back(range);
}

}  // namespace

void enumerate_triangulations(
    int n, bool dedupe, const std::function<void(const Triangulation&)>& yield) {
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  std::set<std::vector<VertexPair>> seen;
  std::vector<VertexPair> pending;
  std::vector<VertexPair> diags;
  pending.emplace_back(0, n - 1);
  enum_ranges(n, pending, diags, [&](const Triangulation& t) {
    if (!dedupe) {
      yield(t);
      return;
    }
    Triangulation canon = canonical_form(t);
    if (seen.insert(canon.diagonals).second) yield(canon);
  });
}

std::vector<Triangulation> all_triangulations(int n, bool dedupe) {
  std::vector<Triangulation> out;
  enumerate_triangulations(n, dedupe,
                           [&](const Triangulation& t) { out.push_back(t); });
  return out;
}

Triangulation random_triangulation(int n, Rng& rng) {
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  std::vector<VertexPair> diags;
  std::vector<VertexPair> pending;
  pending.emplace_back(0, n - 1);
  while (!pending.empty()) {
    const auto [lo, hi] = pending.back();
    pending.pop_back();
    const int m = lo + 1 + rng.bounded_int(hi - lo - 1);
    auto maybe_diag = [&](int a, int b) {
      if (b - a >= 2 && !(a == 0 && b == n - 1)) diags.emplace_back(a, b);
    };
    maybe_diag(lo, m);
    maybe_diag(m, hi);
    if (m - lo >= 2) pending.emplace_back(lo, m);
    if (hi - m >= 2) pending.emplace_back(m, hi);
  }
  std::sort(diags.begin(), diags.end());
  return Triangulation{n, std::move(diags)};
}

std::string to_text(const Triangulation& t) {
  std::string out = std::to_string(t.n) + ";";
  for (std::size_t i = 0; i < t.diagonals.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += std::to_string(t.diagonals[i].first) + "-" +
           std::to_string(t.diagonals[i].second);
  }
  return out;
}

Triangulation triangulation_from_text(const std::string& text) {
  const std::size_t semi = text.find(';');
  if (semi == std::string::npos) {
    throw std::invalid_argument("triangulation text needs 'n; diagonals'");
  }
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(text.substr(0, semi), &used);
    while (used < semi && std::isspace(static_cast<unsigned char>(text[used]))) {
      ++used;
    }
    if (used != semi) throw std::invalid_argument("trailing junk");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad vertex count in triangulation text: '" +
                                text.substr(0, semi) + "'");
  }
  std::vector<VertexPair> diags;
  std::string rest = text.substr(semi + 1);
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) {
      if (diags.empty() && ss.eof()) break;  // "3;" with nothing after
      throw std::invalid_argument("empty diagonal entry in triangulation text");
    }
    std::size_t b = item.find_last_not_of(" \t\r\n");
    std::string tok = item.substr(a, b - a + 1);
    const std::size_t dash = tok.find('-', 1);
    if (dash == std::string::npos) {
      throw std::invalid_argument("diagonal entry '" + tok +
                                  "' is not of the form a-b");
    }
    try {
      std::size_t ua = 0, ub = 0;
      const int da = std::stoi(tok.substr(0, dash), &ua);
      const int db = std::stoi(tok.substr(dash + 1), &ub);
      if (ua != dash || ub != tok.size() - dash - 1) {
        throw std::invalid_argument("trailing junk");
      }
      diags.emplace_back(da, db);
    } catch (const std::exception&) {
      throw std::invalid_argument("diagonal entry '" + tok +
                                  "' is not of the form a-b");
    }
  }
  return make_triangulation(n, std::move(diags));
}

namespace {

struct BlockFaces {
  bool ok = false;
  std::string detail;
  std::vector<int> outer_cycle;                // global ids, cyclic order
  std::vector<std::array<int, 3>> face_triples;  // global ids, each sorted
};

// Boundary-cycle extraction for one 2-connected block: repeatedly smooth
// degree-2 vertices until a triangle remains, then rebuild the Hamiltonian
// boundary by reinserting them, and finally read the interior faces off the
// rotation system induced by the boundary order. Acceptance is certified by
// the rebuilt cycle plus an Euler count, so a wrong guess can only reject.
BlockFaces block_faces(const std::vector<VertexPair>& block_edges) {
  BlockFaces out;

  std::vector<int> verts;
  for (const auto& [u, v] : block_edges) {
    verts.push_back(u);
    verts.push_back(v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const int k = static_cast<int>(verts.size());
  if (k == 2) {
    out.ok = true;  // bridge, no faces
    return out;
  }

  std::unordered_map<int, int> local;
  local.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) local[verts[static_cast<std::size_t>(i)]] = i;

  std::vector<std::set<int>> adj(static_cast<std::size_t>(k));
  for (const auto& [gu, gv] : block_edges) {
    const int u = local[gu];
    const int v = local[gv];
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }
  const std::vector<std::set<int>> original_adj = adj;

  std::vector<char> active(static_cast<std::size_t>(k), 1);
  std::deque<int> deg2;
  for (int v = 0; v < k; ++v) {
    if (adj[static_cast<std::size_t>(v)].size() == 2) deg2.push_back(v);
  }

  struct Removal {
    int v, u, w;
  };
  std::vector<Removal> removals;
  int m = k;
  while (m > 3) {
    int v = -1;
    while (!deg2.empty()) {
      const int cand = deg2.front();
      deg2.pop_front();
      if (active[static_cast<std::size_t>(cand)] &&
          adj[static_cast<std::size_t>(cand)].size() == 2) {
        v = cand;
        break;
      }
    }
    if (v < 0) {
      out.detail = "no boundary ear available, block is not outerplanar";
      return out;
    }
    auto it = adj[static_cast<std::size_t>(v)].begin();
    const int u = *it++;
    const int w = *it;
    removals.push_back({v, u, w});
    active[static_cast<std::size_t>(v)] = 0;
    adj[static_cast<std::size_t>(u)].erase(v);
    adj[static_cast<std::size_t>(w)].erase(v);
    adj[static_cast<std::size_t>(v)].clear();
    adj[static_cast<std::size_t>(u)].insert(w);
    adj[static_cast<std::size_t>(w)].insert(u);
    --m;
    if (adj[static_cast<std::size_t>(u)].size() == 2) deg2.push_back(u);
    if (adj[static_cast<std::size_t>(w)].size() == 2) deg2.push_back(w);
  }

  std::vector<int> tri;
  for (int v = 0; v < k; ++v) {
    if (active[static_cast<std::size_t>(v)]) tri.push_back(v);
  }
  for (int i = 0; i < 3; ++i) {
    const int a = tri[static_cast<std::size_t>(i)];
    const int b = tri[static_cast<std::size_t>((i + 1) % 3)];
    if (!adj[static_cast<std::size_t>(a)].count(b)) {
      out.detail = "reduction core is not a triangle, block is not outerplanar";
      return out;
    }
  }

  // rebuild the boundary as a circular doubly linked list
  std::vector<int> nxt(static_cast<std::size_t>(k), -1);
  std::vector<int> prv(static_cast<std::size_t>(k), -1);
  nxt[static_cast<std::size_t>(tri[0])] = tri[1];
  nxt[static_cast<std::size_t>(tri[1])] = tri[2];
  nxt[static_cast<std::size_t>(tri[2])] = tri[0];
  prv[static_cast<std::size_t>(tri[1])] = tri[0];
  prv[static_cast<std::size_t>(tri[2])] = tri[1];
  prv[static_cast<std::size_t>(tri[0])] = tri[2];
  for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
    const auto [v, u, w] = *it;
    if (nxt[static_cast<std::size_t>(u)] == w) {
      nxt[static_cast<std::size_t>(u)] = v;
      nxt[static_cast<std::size_t>(v)] = w;
      prv[static_cast<std::size_t>(w)] = v;
      prv[static_cast<std::size_t>(v)] = u;
    } else if (nxt[static_cast<std::size_t>(w)] == u) {
      nxt[static_cast<std::size_t>(w)] = v;
      nxt[static_cast<std::size_t>(v)] = u;
      prv[static_cast<std::size_t>(u)] = v;
      prv[static_cast<std::size_t>(v)] = w;
    } else {
      out.detail = "boundary reinsertion failed, block is not outerplanar";
      return out;
    }
  }

  std::vector<int> cycle;
  cycle.reserve(static_cast<std::size_t>(k));
  int at = 0;
  for (int i = 0; i < k; ++i) {
    cycle.push_back(at);
    at = nxt[static_cast<std::size_t>(at)];
  }
  if (at != 0) {
    out.detail = "boundary walk did not close, block is not outerplanar";
    return out;
  }
  for (int i = 0; i < k; ++i) {
    const int a = cycle[static_cast<std::size_t>(i)];
    const int b = cycle[static_cast<std::size_t>((i + 1) % k)];
    if (!original_adj[static_cast<std::size_t>(a)].count(b)) {
      out.detail = "candidate boundary uses a non-edge, block is not outerplanar";
      return out;
    }
  }

  // rotation at each vertex: neighbors ordered by circular position beyond it
  std::vector<int> pos(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)])] = i;
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(k));
  std::vector<std::unordered_map<int, int>> rot_index(static_cast<std::size_t>(k));
  std::size_t arc_count = 0;
  for (int v = 0; v < k; ++v) {
    auto& r = rot[static_cast<std::size_t>(v)];
    r.assign(original_adj[static_cast<std::size_t>(v)].begin(),
             original_adj[static_cast<std::size_t>(v)].end());
    std::sort(r.begin(), r.end(), [&](int a, int b) {
      const int pa = (pos[static_cast<std::size_t>(a)] - pos[static_cast<std::size_t>(v)] + k) % k;
      const int pb = (pos[static_cast<std::size_t>(b)] - pos[static_cast<std::size_t>(v)] + k) % k;
      return pa < pb;
    });
    for (std::size_t j = 0; j < r.size(); ++j) {
      rot_index[static_cast<std::size_t>(v)][r[j]] = static_cast<int>(j);
    }
    arc_count += r.size();
  }

  std::vector<std::vector<char>> arc_seen(static_cast<std::size_t>(k));
  for (int v = 0; v < k; ++v) {
    arc_seen[static_cast<std::size_t>(v)].assign(rot[static_cast<std::size_t>(v)].size(), 0);
  }
  // arc (u -> v) is identified by the slot of u in rot(v)
  auto walk_face = [&](int u0, int v0, std::vector<int>& face) {
    face.clear();
    int u = u0;
    int v = v0;
    while (true) {
      const int j = rot_index[static_cast<std::size_t>(v)].at(u);
      if (arc_seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)]) return false;
      arc_seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] = 1;
      face.push_back(v);
      const auto& r = rot[static_cast<std::size_t>(v)];
      const int w = r[(static_cast<std::size_t>(j) + 1) % r.size()];
      u = v;
      v = w;
      if (u == u0 && v == v0) return true;
    }
  };

  std::vector<int> face;
  if (!walk_face(cycle[0], cycle[1], face) || static_cast<int>(face.size()) != k) {
    out.detail = "outer boundary does not close a face, block is not outerplanar";
    return out;
  }
  std::size_t faces = 1;
  std::vector<std::vector<int>> interior;
  for (int v = 0; v < k; ++v) {
    const auto& r = rot[static_cast<std::size_t>(v)];
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (arc_seen[static_cast<std::size_t>(v)][j]) continue;
      if (!walk_face(r[j], v, face)) {
        out.detail = "face walk revisited an arc, block is not outerplanar";
        return out;
      }
      ++faces;
      interior.push_back(face);
    }
  }
  const std::size_t e = arc_count / 2;
  if (faces != e - static_cast<std::size_t>(k) + 2) {
    out.detail = "face count violates the planar relation, block is not outerplanar";
    return out;
  }

  out.ok = true;
  out.outer_cycle.reserve(static_cast<std::size_t>(k));
  for (int v : cycle) out.outer_cycle.push_back(verts[static_cast<std::size_t>(v)]);
  for (const auto& f : interior) {
    if (f.size() != 3) continue;
    std::array<int, 3> tri_face = {verts[static_cast<std::size_t>(f[0])],
                                   verts[static_cast<std::size_t>(f[1])],
                                   verts[static_cast<std::size_t>(f[2])]};
    std::sort(tri_face.begin(), tri_face.end());
    out.face_triples.push_back(tri_face);
  }
  return out;
}

}  // namespace

EmbeddingReport check_outerplanar(const UniformHypergraph& h) {
  if (h.uniformity() != 3) {
    throw std::invalid_argument("outerplanarity check requires 3-uniform input");
  }
  EmbeddingReport report;
  const ShadowGraph g = shadow(h);
  const auto blocks = biconnected_blocks(g);

  std::vector<std::array<int, 3>> face_triples;
  std::vector<std::vector<int>> block_cycles;
  for (const auto& block : blocks) {
    BlockFaces bf = block_faces(block);
    if (!bf.ok) {
      report.failure_reason = EmbeddingReport::Failure::shadow_not_outerplanar;
      report.detail = bf.detail;
      return report;
    }
    face_triples.insert(face_triples.end(), bf.face_triples.begin(),
                        bf.face_triples.end());
    block_cycles.push_back(std::move(bf.outer_cycle));
  }
  std::sort(face_triples.begin(), face_triples.end());

  for (const auto& e : h.edges()) {
    const std::array<int, 3> key = {e[0], e[1], e[2]};
    if (!std::binary_search(face_triples.begin(), face_triples.end(), key)) {
      report.failure_reason =
          EmbeddingReport::Failure::hyperedge_not_interior_face;
      report.detail = "hyperedge {" + std::to_string(e[0]) + ", " +
                      std::to_string(e[1]) + ", " + std::to_string(e[2]) +
                      "} is not an interior face";
      return report;
    }
  }

  report.ok = true;
  if (blocks.size() == 1 && !block_cycles[0].empty() &&
      static_cast<int>(block_cycles[0].size()) == g.vertex_count() &&
      is_connected(g)) {
    // canonical start: least vertex first, lesser neighbor second
    std::vector<int>& cyc = block_cycles[0];
    const int k = static_cast<int>(cyc.size());
    int start = 0;
    for (int i = 1; i < k; ++i) {
      if (cyc[static_cast<std::size_t>(i)] < cyc[static_cast<std::size_t>(start)]) start = i;
    }
    std::vector<int> rotated;
    rotated.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      rotated.push_back(cyc[static_cast<std::size_t>((start + i) % k)]);
    }
    if (k >= 3 && rotated[static_cast<std::size_t>(k - 1)] < rotated[1]) {
      std::reverse(rotated.begin() + 1, rotated.end());
    }
    report.outer_cycle = std::move(rotated);
  }
  return report;
}

}  // namespace hyperspec
