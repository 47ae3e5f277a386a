#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperspec/spectral.hpp"
#include "hyperspec/triangulation.hpp"
#include "test_util.hpp"

using namespace hyperspec;

namespace {

constexpr double kCbrt4 = 1.5874010519681994748;       // 2^(2/3)
constexpr double kCbrtThird = 0.69336127435063470484;  // 3^(-1/3)
constexpr double kCbrtSixth = 0.55032120814910444964;  // 6^(-1/3)

double norm_r(const std::vector<double>& x, int r) {
  double s = 0.0;
  for (double v : x) s += std::pow(v, r);
  return s;
}

}  // namespace

TEST_CASE("adjacency application and polynomial on the 4-vertex fan") {
  const UniformHypergraph h = fan(4);
  CHECK(apply_adjacency(h, {1, 1, 1, 1}) == std::vector<double>{2, 1, 2, 1});
  CHECK(poly_eval(h, {1, 1, 1, 1}) == 6.0);
  CHECK(apply_adjacency(h, {1, 2, 3, 4}) == std::vector<double>{18, 3, 6, 3});
  CHECK(poly_eval(h, {1, 2, 3, 4}) == 54.0);
  CHECK_THROWS_AS(apply_adjacency(h, {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(poly_eval(h, {1, 1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("adjacency application for larger uniformity") {
  const UniformHypergraph h(4, 4, {{0, 1, 2, 3}});
  CHECK(apply_adjacency(h, {1, 2, 3, 4}) == std::vector<double>{24, 12, 8, 6});
  CHECK(poly_eval(h, {1, 2, 3, 4}) == 96.0);
}

TEST_CASE("rayleigh quotient rescales to the unit shell") {
  const UniformHypergraph h(3, 3, {{0, 1, 2}});
  // any positive multiple of the uniform vector gives the eigenvalue
  CHECK(rayleigh_quotient(h, {2, 2, 2}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rayleigh_quotient(h, {1, 1, 1}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(rayleigh_quotient(h, {0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(rayleigh_quotient(h, {1, -1, 1}), std::invalid_argument);
}

TEST_CASE("rayleigh quotient never exceeds the spectral radius") {
  const UniformHypergraph h = fan(7);
  const double lambda = spectral_radius(h).lambda;
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto x = testutil::random_positive_vector(7, rng, 0.01);
    CHECK(rayleigh_quotient(h, x) <= lambda + 1e-9);
  }
}

TEST_CASE("single hyperedge solves exactly") {
  const PerronResult r = spectral_radius(UniformHypergraph(3, 3, {{0, 1, 2}}));
  CHECK(r.lambda == doctest::Approx(1.0).epsilon(1e-10));
  for (double v : r.vector) {
    CHECK(std::abs(v - kCbrtThird) < 1e-8);
  }
  CHECK(r.normalization == Normalization::unit_r_norm);
  CHECK_FALSE(r.zero_edges);
  CHECK(r.iterations > 0);
}

TEST_CASE("fan on four vertices matches the closed form") {
  const PerronResult r = spectral_radius(fan(4));
  CHECK(std::abs(r.lambda - kCbrt4) < 1e-10);
  CHECK(std::abs(r.vector[0] - kCbrtThird) < 1e-8);
  CHECK(std::abs(r.vector[1] - kCbrtSixth) < 1e-8);
  CHECK(std::abs(r.vector[2] - kCbrtThird) < 1e-8);
  CHECK(std::abs(r.vector[3] - kCbrtSixth) < 1e-8);
  CHECK(norm_r(r.vector, 3) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("certificate fields are consistent") {
  const SolverConfig cfg;
  const PerronResult r = spectral_radius(fan(9), cfg);
  CHECK(r.bracket_low <= r.lambda);
  CHECK(r.lambda <= r.bracket_high);
  CHECK(r.bracket_high - r.bracket_low <= cfg.tol);
  CHECK(r.residual < 1e-9);
  CHECK(eigen_residual(fan(9), r.lambda, r.vector) < 1e-9);
  CHECK(rayleigh_quotient(fan(9), r.vector) ==
        doctest::Approx(r.lambda).epsilon(1e-9));
}

TEST_CASE("graph case matches matrix eigenvalues") {
  // path on three vertices: eigenvalue sqrt(2), vector (1/2, sqrt(2)/2, 1/2)
  const PerronResult p3 = spectral_radius(UniformHypergraph(3, 2, {{0, 1}, {1, 2}}));
  CHECK(std::abs(p3.lambda - std::sqrt(2.0)) < 1e-9);
  CHECK(std::abs(p3.vector[0] - 0.5) < 1e-8);
  CHECK(std::abs(p3.vector[1] - std::sqrt(0.5)) < 1e-8);
  CHECK(std::abs(p3.vector[2] - 0.5) < 1e-8);
  // 4-cycle: eigenvalue 2
  const PerronResult c4 = spectral_radius(
      UniformHypergraph(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  CHECK(std::abs(c4.lambda - 2.0) < 1e-9);
}

TEST_CASE("complete 4-uniform hypergraph on five vertices") {
  const UniformHypergraph k5(
      5, 4, {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}});
  const PerronResult r = spectral_radius(k5);
  CHECK(std::abs(r.lambda - 4.0) < 1e-9);
  const double want = std::pow(5.0, -0.25);
  for (double v : r.vector) CHECK(std::abs(v - want) < 1e-8);
}

TEST_CASE("no edges solves to zero") {
  const PerronResult r = spectral_radius(UniformHypergraph::empty(5, 3));
  CHECK(r.zero_edges);
  CHECK(r.lambda == 0.0);
  CHECK(r.vector == std::vector<double>(5, 0.0));
  CHECK(r.iterations == 0);
  CHECK(r.residual == 0.0);
}

TEST_CASE("isolated vertices stay at zero") {
  const PerronResult r = spectral_radius(UniformHypergraph(5, 3, {{0, 1, 3}}));
  CHECK(std::abs(r.lambda - 1.0) < 1e-9);
  CHECK(r.vector[2] == 0.0);
  CHECK(r.vector[4] == 0.0);
  CHECK(r.vector[0] > 0.5);
}

TEST_CASE("the strongest component wins") {
  // triangle on 3..6 side is a fan(4) relabeled; lone triangle on 0..2 loses
  const UniformHypergraph h(
      7, 3, {{0, 1, 2}, {3, 4, 5}, {3, 5, 6}});
  const PerronResult r = spectral_radius(h);
  CHECK(std::abs(r.lambda - kCbrt4) < 1e-9);
  CHECK(r.vector[0] == 0.0);
  CHECK(r.vector[3] > 0.0);
}

TEST_CASE("equal components break ties toward lower vertex labels") {
  const UniformHypergraph h(7, 3, {{3, 4, 5}, {0, 1, 2}});
  const PerronResult r = spectral_radius(h);
  CHECK(std::abs(r.lambda - 1.0) < 1e-9);
  CHECK(r.vector[0] > 0.5);
  CHECK(r.vector[3] == 0.0);
  CHECK(r.vector[6] == 0.0);
}

TEST_CASE("results are bitwise deterministic for a fixed config") {
  const PerronResult a = spectral_radius(fan(7));
  const PerronResult b = spectral_radius(fan(7));
  CHECK(a.lambda == b.lambda);
  CHECK(a.vector == b.vector);
  CHECK(a.iterations == b.iterations);
  CHECK(a.bracket_low == b.bracket_low);
  CHECK(a.bracket_high == b.bracket_high);
}

TEST_CASE("the eigenvalue does not depend on seed or shift") {
  SolverConfig base;
  const double lambda = spectral_radius(fan(8), base).lambda;
  SolverConfig other = base;
  other.seed = 997;
  CHECK(std::abs(spectral_radius(fan(8), other).lambda - lambda) < 1e-9);
  other = base;
  other.shift = 0.25;
  CHECK(std::abs(spectral_radius(fan(8), other).lambda - lambda) < 1e-9);
  other = base;
  other.tol = 1e-6;
  CHECK(std::abs(spectral_radius(fan(8), other).lambda - lambda) < 1e-5);
}

TEST_CASE("iteration budget failures carry the last bracket") {
  SolverConfig cfg;
  cfg.max_iter = 3;
  try {
    spectral_radius(fan(9), cfg);
    FAIL("expected a convergence error");
  } catch (const ConvergenceError& e) {
    CHECK(e.iterations == 3);
    CHECK(e.bracket_high > e.bracket_low);
    CHECK(std::string(e.what()).find("bracket width") != std::string::npos);
  }
}

TEST_CASE("an unshifted iteration stalls on a bipartite graph") {
  SolverConfig cfg;
  cfg.shift = 0.0;
  cfg.max_iter = 2000;
  const UniformHypergraph c4(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK_THROWS_AS(spectral_radius(c4, cfg), ConvergenceError);
}

TEST_CASE("solver configs are validated") {
  SolverConfig cfg;
  cfg.tol = 0.0;
  CHECK_THROWS_AS(spectral_radius(fan(4), cfg), std::invalid_argument);
  cfg = SolverConfig{};
  cfg.max_iter = 0;
  CHECK_THROWS_AS(spectral_radius(fan(4), cfg), std::invalid_argument);
  cfg = SolverConfig{};
  cfg.shift = -1.0;
  CHECK_THROWS_AS(spectral_radius(fan(4), cfg), std::invalid_argument);
}

TEST_CASE("rescaling to max entry one keeps the certificate") {
  const PerronResult unit = spectral_radius(fan(6));
  const PerronResult scaled = to_max_entry_one(unit);
  CHECK(scaled.normalization == Normalization::max_entry_one);
  CHECK(*std::max_element(scaled.vector.begin(), scaled.vector.end()) == 1.0);
  CHECK(scaled.lambda == unit.lambda);
  CHECK(scaled.residual == unit.residual);
  CHECK(scaled.bracket_low == unit.bracket_low);
  const double hi = *std::max_element(unit.vector.begin(), unit.vector.end());
  for (std::size_t i = 0; i < unit.vector.size(); ++i) {
    CHECK(scaled.vector[i] == doctest::Approx(unit.vector[i] / hi).epsilon(1e-14));
  }
}

TEST_CASE("the ascent oracle agrees with the power iteration") {
  CHECK(std::abs(brute_force_lambda(UniformHypergraph(3, 3, {{0, 1, 2}})) - 1.0) <
        1e-9);
  CHECK(std::abs(brute_force_lambda(fan(4)) - kCbrt4) < 1e-6);
  for (const auto& t : all_triangulations(6, true)) {
    const UniformHypergraph h = to_hypergraph(t);
    CHECK(std::abs(brute_force_lambda(h) - spectral_radius(h).lambda) < 1e-6);
  }
  // deterministic: repeated runs give the same value
  CHECK(brute_force_lambda(fan(5)) == brute_force_lambda(fan(5)));
  CHECK(brute_force_lambda(UniformHypergraph::empty(4, 3)) == 0.0);
  CHECK_THROWS_AS(brute_force_lambda(fan(4), 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_lambda(fan(4), 3, 0), std::invalid_argument);
}

TEST_CASE("duality of the adjacency form on random instances") {
  Rng rng(20260822);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + rng.bounded_int(8);
    const UniformHypergraph h =
        testutil::random_connected_h3(n, rng.bounded_int(4), rng);
    const auto x = testutil::random_positive_vector(static_cast<std::size_t>(n), rng);
    const auto y = apply_adjacency(h, x);
    double lhs = 0.0;
    for (int i = 0; i < n; ++i) lhs += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
    const double rhs = poly_eval(h, x);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}
