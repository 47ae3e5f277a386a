#ifndef HYPERSPEC_TRIANGULATION_HPP
#define HYPERSPEC_TRIANGULATION_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/rng.hpp"

namespace hyperspec {

// Triangulation of the convex n-gon with vertices 0..n-1 in circular order,
// identified by its diagonal set. Always holds exactly n-3 pairwise
// non-crossing diagonals; build through make_triangulation to keep that true.
struct Triangulation {
  int n = 0;
  std::vector<VertexPair> diagonals;  // each (a, b) with a < b, sorted

  bool operator==(const Triangulation& o) const {
    return n == o.n && diagonals == o.diagonals;
  }
};

// strict interiors of the chords (a,b), (c,d) intersect
bool diagonals_cross(int n, VertexPair a, VertexPair b);

// validates vertex ranges, chord-ness, count n-3, pairwise non-crossing
Triangulation make_triangulation(int n, std::vector<VertexPair> diagonals);

// hub 0 joined to the path 1..n-1: edges {0, i, i+1}
UniformHypergraph fan(int n);

// the triangulation whose triangle hypergraph is fan(n)
Triangulation fan_triangulation(int n);

// triangles of the triangulation, each sorted, sorted lexicographically
std::vector<std::array<int, 3>> triangles_of(const Triangulation& t);

// 3-uniform hypergraph whose edges are the triangles
UniformHypergraph to_hypergraph(const Triangulation& t);

// Triangles plus the pairs sharing a diagonal. For a valid triangulation the
// link graph is a tree on n-2 nodes.
struct DualTree {
  std::vector<std::array<int, 3>> triangles;
  std::vector<VertexPair> links;  // indices into triangles, (i, j) with i < j
};

DualTree dual_tree(const Triangulation& t);

// lexicographically least diagonal set over the 2n rotations/reflections of
// the polygon; idempotent
Triangulation canonical_form(const Triangulation& t);

// All triangulations of the fixed n-gon in a deterministic order
// (Catalan(n-2) many), or one representative per canonical class when dedupe
// is set. The callback form streams them without materializing the list.
void enumerate_triangulations(int n, bool dedupe,
                              const std::function<void(const Triangulation&)>& yield);
std::vector<Triangulation> all_triangulations(int n, bool dedupe);

// seeded random triangulation (uniform over ear choices, not over outcomes)
Triangulation random_triangulation(int n, Rng& rng);

// text form "n; a-b, c-d, ..." with the diagonals in sorted order; n=3 prints
// as "3;"
std::string to_text(const Triangulation& t);
Triangulation triangulation_from_text(const std::string& text);

// Outcome of the outerplanarity check on a 3-uniform hypergraph: the shadow
// must embed with every vertex on the outer face and every hyperedge must
// appear as an interior face of that embedding.
struct EmbeddingReport {
  enum class Failure {
    none,
    shadow_not_outerplanar,
    hyperedge_not_interior_face,
  };

  bool ok = false;
  Failure failure_reason = Failure::none;
  std::string detail;
  // Hamiltonian outer cycle, present when the shadow is connected and
  // 2-connected; starts at its least vertex, lesser cycle neighbor second
  std::vector<int> outer_cycle;
};

// requires r = 3
EmbeddingReport check_outerplanar(const UniformHypergraph& h);

inline bool is_outerplanar(const UniformHypergraph& h) {
  return check_outerplanar(h).ok;
}

}  // namespace hyperspec

#endif  // HYPERSPEC_TRIANGULATION_HPP
