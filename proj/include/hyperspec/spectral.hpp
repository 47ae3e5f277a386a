#ifndef HYPERSPEC_SPECTRAL_HPP
#define HYPERSPEC_SPECTRAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

struct SolverConfig {
  double tol = 1e-10;           // stop when bracket width <= tol
  std::uint64_t max_iter = 1'000'000;
  double shift = 1.0;           // diagonal shift keeping the iteration monotone
  std::uint64_t seed = 1;       // seeds the perturbed start vector
};

enum class Normalization {
  unit_r_norm,    // sum of r-th powers equals 1
  max_entry_one,  // largest entry equals 1
};

// Dominant H-eigenpair of the adjacency tensor. The vector is nonnegative
// with unit r-norm, supported on one component; lambda is the midpoint of the
// final Collatz-Wielandt bracket and residual/brackets certify it at that
// scaling.
struct PerronResult {
  double lambda = 0.0;
  std::vector<double> vector;
  double bracket_low = 0.0;
  double bracket_high = 0.0;
  double residual = 0.0;        // max_i |lambda * x_i^{r-1} - (A x^{r-1})_i|
  std::uint64_t iterations = 0;
  Normalization normalization = Normalization::unit_r_norm;
  bool zero_edges = false;      // no component had an edge; lambda is 0
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& msg, double low, double high,
                   std::uint64_t iterations)
      : std::runtime_error(msg),
        bracket_low(low),
        bracket_high(high),
        iterations(iterations) {}

  double bracket_low;
  double bracket_high;
  std::uint64_t iterations;
};

// (A x^{r-1})_i = sum over edges containing i of the product of the other
// entries; evaluated edge by edge, the tensor is never materialized
std::vector<double> apply_adjacency(const UniformHypergraph& h,
                                    const std::vector<double>& x);

// homogeneous edge-sum form: r * sum_e prod_{j in e} x_j
double poly_eval(const UniformHypergraph& h, const std::vector<double>& x);

// poly_eval at x scaled to unit r-norm; requires x nonnegative and nonzero
double rayleigh_quotient(const UniformHypergraph& h,
                         const std::vector<double>& x);

// max_i over the support of x of |lambda * x_i^{r-1} - (A x^{r-1})_i|
double eigen_residual(const UniformHypergraph& h, double lambda,
                      const std::vector<double>& x);

// Shifted power iteration with Collatz-Wielandt brackets, run per shadow
// component; the reported pair belongs to the component with the largest
// eigenvalue. Throws ConvergenceError when a component fails to close its
// bracket within max_iter.
PerronResult spectral_radius(const UniformHypergraph& h,
                             const SolverConfig& config = {});

// rescale the eigenvector so its largest entry is 1; certificate fields keep
// referring to the unit-r-norm representative
PerronResult to_max_entry_one(PerronResult result);

// Derivative-free check value: maximizes the edge-sum form on the nonnegative
// unit-r-norm shell by projected gradient ascent with restarts. Slow and
// independent of the power iteration; used to cross-check lambda.
double brute_force_lambda(const UniformHypergraph& h, int restarts = 6,
                          int steps = 4000);

}  // namespace hyperspec

#endif  // HYPERSPEC_SPECTRAL_HPP
