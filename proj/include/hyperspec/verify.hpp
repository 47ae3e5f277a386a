#ifndef HYPERSPEC_VERIFY_HPP
#define HYPERSPEC_VERIFY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/triangulation.hpp"

namespace hyperspec {

// closed-form floor for the fan eigenvalue: cbrt(4(n-1)) * (1 - 1/(n-1))
double fan_lower_bound(int n);

struct BoundReport {
  int n = 0;
  double lambda_fan = 0.0;       // solved numerically
  double bound = 0.0;            // fan_lower_bound(n)
  double ratio_to_cbrt4n = 0.0;  // lambda_fan / cbrt(4n)
  bool ok = false;               // lambda_fan >= bound - 1e-9
  bool solved = true;            // false when the solver gave up on this row
};

BoundReport check_fan_bound(int n, const SolverConfig& config = {});

// one row per n; solver failures are recorded, not thrown
std::vector<BoundReport> asymptotic_table(const std::vector<int>& ns,
                                          const SolverConfig& config = {});

struct ScanRecord {
  int rank = 0;
  std::string triangulation;  // canonical text form
  double lambda = 0.0;
  double gap_to_fan = 0.0;    // lambda_fan - lambda
  double residual = 0.0;
  std::uint64_t iterations = 0;
  bool is_fan = false;
  bool solved = true;
};

// Eigenvalues of every triangulation of the n-gon, ranked descending.
// Rows closer than 1e-9 in lambda form a tie class and are ordered by their
// canonical text; ranks are still 1..k across the whole table.
struct ScanReport {
  int n = 0;
  bool dedupe = false;
  double lambda_fan = 0.0;
  std::vector<ScanRecord> records;
  int fan_rank = 0;             // best rank among fan rows
  bool fan_is_rank1 = false;
  double top_gap = 0.0;         // gap_to_fan of the rank-1 row
  bool violation = false;       // a non-fan row beats the fan by more than 1e-8
  std::size_t rank1_tie_size = 0;
};

// jobs = 0 picks a worker count from the hardware
ScanReport extremal_scan(int n, const SolverConfig& config, bool dedupe,
                         int jobs = 0);

// Triangle {v0, v1, v2} of t with v1 a boundary neighbor of v0 and v1-v2 a
// diagonal: every triangle on the far side of v1-v2 trades v2 for v0. The
// result is again a triangulation hypergraph; eigenvalue comparisons against
// the input are the caller's business.
UniformHypergraph flip_transform(const UniformHypergraph& h,
                                 const Triangulation& t, int v0, int v1,
                                 int v2);

// all (v0, v1, v2) accepted by flip_transform, in ascending order
struct FlipSite {
  int v0, v1, v2;
};
std::vector<FlipSite> flip_sites(const Triangulation& t);

// Detach the tip-w triangle {w, s, t} (a leaf of the dual tree) and attach
// {w, v0, v1} instead, where v1 has hypergraph degree 1, its unique triangle
// contains v0, and neither anchor lies in the leaf. The hub of a fan lies in
// every triangle, so it is never an admissible anchor.
UniformHypergraph leaf_reattach(const UniformHypergraph& h,
                                const Triangulation& t,
                                std::array<int, 3> leaf, int v0, int v1);

struct LeafSite {
  std::array<int, 3> leaf;
  int v0, v1;
};
std::vector<LeafSite> leaf_sites(const Triangulation& t);

// change in the edge-sum form when entries a and b of x are exchanged
double entry_swap_delta(const UniformHypergraph& h, const std::vector<double>& x,
                        int a, int b);

// CSV artifacts with the producing configuration in header comments
std::string scan_csv(const ScanReport& report, const SolverConfig& config);
std::string bound_csv(const std::vector<BoundReport>& rows,
                      const SolverConfig& config);

}  // namespace hyperspec

#endif  // HYPERSPEC_VERIFY_HPP
