// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Tolerances and budgets are fixed here on purpose; loosening them is a
// behavior change, not a test fix.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "hyperspec/rng.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/triangulation.hpp"
#include "hyperspec/verify.hpp"
#include "test_util.hpp"

using namespace hyperspec;

namespace {

constexpr double kCbrt4 = 1.5874010519681994748;       // 2^(2/3)
constexpr double kCbrtThird = 0.69336127435063470484;  // 3^(-1/3)

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void fail(const std::string& msg) {
    ok = false;
    notes.push_back(msg);
  }
  void note(const std::string& msg) { notes.push_back(msg); }
};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

Outcome single_edge_eigenpair() {
  Outcome out;
  const PerronResult r = spectral_radius(UniformHypergraph(3, 3, {{0, 1, 2}}));
  if (std::abs(r.lambda - 1.0) > 1e-10) {
    out.fail("lambda " + fmt("%.15g", r.lambda) + " is not 1 within 1e-10");
  }
  for (double v : r.vector) {
    if (std::abs(v - kCbrtThird) > 1e-8) {
      out.fail("entry " + fmt("%.15g", v) + " is not 3^(-1/3) within 1e-8");
    }
  }
  return out;
}

Outcome fan4_closed_form() {
  Outcome out;
  const UniformHypergraph h = fan(4);
  const double lambda = spectral_radius(h).lambda;
  if (std::abs(lambda - kCbrt4) > 1e-8) {
    out.fail("lambda " + fmt("%.15g", lambda) + " is not 2^(2/3) within 1e-8");
  }
  const double oracle = brute_force_lambda(h);
  if (std::abs(lambda - oracle) > 1e-6) {
    out.fail("ascent oracle " + fmt("%.15g", oracle) + " disagrees beyond 1e-6");
  }
  return out;
}

Outcome fan_floor_suite() {
  Outcome out;
  std::vector<int> ns;
  for (int n = 3; n <= 50; ++n) ns.push_back(n);
  ns.push_back(100);
  ns.push_back(1000);
  ns.push_back(10000);
  for (int n : ns) {
    const BoundReport rep = check_fan_bound(n);
    if (!rep.solved) {
      out.fail("n=" + std::to_string(n) + ": solver gave up");
      continue;
    }
    if (rep.lambda_fan < rep.bound - 1e-9) {
      out.fail("n=" + std::to_string(n) + ": lambda " +
               fmt("%.15g", rep.lambda_fan) + " drops below floor " +
               fmt("%.15g", rep.bound));
    }
    if (n == 3 && std::abs(rep.lambda_fan - rep.bound) > 1e-8) {
      out.fail("n=3: expected equality within 1e-8, gap " +
               fmt("%.3g", rep.lambda_fan - rep.bound));
    }
  }
  return out;
}

Outcome fan_asymptotic_ratio() {
  Outcome out;
  const auto rows = asymptotic_table({10, 100, 1000, 10000});
  for (const auto& r : rows) {
    if (!r.solved) out.fail("n=" + std::to_string(r.n) + ": solver gave up");
  }
  if (!out.ok) return out;
  const double last = rows.back().ratio_to_cbrt4n;
  if (last < 0.99 || last > 1.07) {
    out.fail("ratio at n=10000 is " + fmt("%.15g", last) +
             ", outside [0.99, 1.07]");
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].ratio_to_cbrt4n <= rows[i - 1].ratio_to_cbrt4n) {
      out.fail("ratio is not increasing from n=" + std::to_string(rows[i - 1].n) +
               " to n=" + std::to_string(rows[i].n));
    }
  }
  return out;
}

Outcome triangulation_counts() {
  Outcome out;
  const std::vector<std::size_t> catalan{2, 5, 14, 42, 132, 429, 1430, 4862,
                                         16796};
  for (int n = 4; n <= 12; ++n) {
    std::size_t count = 0;
    enumerate_triangulations(n, false, [&](const Triangulation&) { ++count; });
    const std::size_t want = catalan[static_cast<std::size_t>(n - 4)];
    if (count != want) {
      out.fail("n=" + std::to_string(n) + ": counted " + std::to_string(count) +
               ", expected " + std::to_string(want));
    }
  }
  for (int n = 4; n <= 8; ++n) {
    std::vector<std::vector<VertexPair>> got;
    for (const auto& t : all_triangulations(n, false)) got.push_back(t.diagonals);
    std::sort(got.begin(), got.end());
    if (got != testutil::noncrossing_maximal_sets(n)) {
      out.fail("n=" + std::to_string(n) +
               ": enumeration disagrees with the subset oracle");
    }
  }
  return out;
}

Outcome exhaustive_ranking_scan() {
  Outcome out;
  const SolverConfig cfg;  // tol 1e-10
  for (int n = 4; n <= 12; ++n) {
    const ScanReport rep = extremal_scan(n, cfg, false, 0);
    for (const auto& rec : rep.records) {
      if (!rec.solved) {
        out.fail("n=" + std::to_string(n) + ": unsolved row " + rec.triangulation);
      }
    }
    if (rep.fan_rank < 1) {
      out.fail("n=" + std::to_string(n) + ": no fan row in the scan");
      continue;
    }
    if (rep.fan_is_rank1) continue;
    // not rank 1: the report must carry the full exception record
    const ScanRecord& top = rep.records.front();
    const bool flagged = rep.violation && !top.is_fan && rep.top_gap < 0.0 &&
                         rep.rank1_tie_size >= 1;
    out.note("n=" + std::to_string(n) + ": fan_rank=" +
             std::to_string(rep.fan_rank) + " top=" + top.triangulation +
             " top_gap=" + fmt("%.6g", rep.top_gap) +
             " tie_size=" + std::to_string(rep.rank1_tie_size));
    if (!flagged) {
      out.fail("n=" + std::to_string(n) +
               ": fan not rank 1 and the exception is not flagged");
    }
  }
  for (int n = 5; n <= 8; ++n) {
    const ScanReport rep = extremal_scan(n, cfg, true, 0);
    double prev = 1e9;
    for (const auto& rec : rep.records) {
      const UniformHypergraph h =
          to_hypergraph(triangulation_from_text(rec.triangulation));
      const double oracle = brute_force_lambda(h);
      if (std::abs(oracle - rec.lambda) > 1e-6) {
        out.fail("n=" + std::to_string(n) + " " + rec.triangulation +
                 ": oracle " + fmt("%.15g", oracle) + " vs " +
                 fmt("%.15g", rec.lambda));
      }
      if (oracle > prev + 2e-6) {
        out.fail("n=" + std::to_string(n) + " " + rec.triangulation +
                 ": oracle breaks the ranked order");
      }
      prev = oracle;
    }
  }
  return out;
}

Outcome local_moves_raise_lambda() {
  Outcome out;
  Rng rng(20260822);
  int accepted = 0;
  int leaf_checked = 0;
  int draws = 0;
  while (accepted < 100 && draws < 4000) {
    ++draws;
    const int n = 6 + rng.bounded_int(5);
    const Triangulation t = random_triangulation(n, rng);
    const UniformHypergraph h = to_hypergraph(t);
    const PerronResult r = spectral_radius(h);

    FlipSite flip_site{-1, -1, -1};
    double flip_gap = 1e-6;  // certifiable strict inequality at the vector
    for (const auto& s : flip_sites(t)) {
      const double gap = r.vector[static_cast<std::size_t>(s.v0)] -
                         r.vector[static_cast<std::size_t>(s.v2)];
      if (gap > flip_gap) {
        flip_gap = gap;
        flip_site = s;
      }
    }
    if (flip_site.v0 < 0) continue;
    ++accepted;

    const UniformHypergraph flipped =
        flip_transform(h, t, flip_site.v0, flip_site.v1, flip_site.v2);
    const double after = spectral_radius(flipped).lambda;
    if (after - r.lambda <= 1e-8) {
      out.fail(to_text(t) + ": flip raised lambda by only " +
               fmt("%.3g", after - r.lambda));
    }

    LeafSite leaf_site{};
    double leaf_margin = 1e-6;
    for (const auto& s : leaf_sites(t)) {
      int tip = -1;
      for (int v : s.leaf) {
        if (h.degree(v) == 1) tip = v;
      }
      if (tip < 0) continue;
      double off = 1.0;
      for (int v : s.leaf) {
        if (v != tip) off *= r.vector[static_cast<std::size_t>(v)];
      }
      const double margin = r.vector[static_cast<std::size_t>(s.v0)] *
                                r.vector[static_cast<std::size_t>(s.v1)] -
                            off;
      if (margin > leaf_margin) {
        leaf_margin = margin;
        leaf_site = s;
      }
    }
    if (leaf_margin > 1e-6 && leaf_site.v0 != leaf_site.v1) {
      ++leaf_checked;
      const UniformHypergraph moved =
          leaf_reattach(h, t, leaf_site.leaf, leaf_site.v0, leaf_site.v1);
      const double after_leaf = spectral_radius(moved).lambda;
      if (after_leaf - r.lambda <= 1e-8) {
        out.fail(to_text(t) + ": leaf move raised lambda by only " +
                 fmt("%.3g", after_leaf - r.lambda));
      }
    }
  }
  if (accepted < 100) {
    out.fail("only " + std::to_string(accepted) +
             " flip-admitting triangulations in " + std::to_string(draws) +
             " draws");
  }
  out.note(std::to_string(accepted) + " flips and " +
           std::to_string(leaf_checked) + " leaf moves checked over " +
           std::to_string(draws) + " draws");
  return out;
}

Outcome algebraic_identities() {
  Outcome out;
  Rng rng(0xACCE55);
  int bad_dual = 0;
  int bad_grad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + rng.bounded_int(8);
    const UniformHypergraph h =
        testutil::random_connected_h3(n, rng.bounded_int(4), rng);
    std::vector<double> x =
        testutil::random_positive_vector(static_cast<std::size_t>(n), rng);
    const std::vector<double> y = apply_adjacency(h, x);
    const double p = poly_eval(h, x);
    double dual = 0.0;
    for (int i = 0; i < n; ++i) {
      dual += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
    }
    if (std::abs(dual - p) > 1e-12 * std::max(1.0, std::abs(p))) ++bad_dual;

    const double r = h.uniformity();
    const double step = 1e-5;
    for (int i = 0; i < n; ++i) {
      const double grad = r * y[static_cast<std::size_t>(i)];
      const double keep = x[static_cast<std::size_t>(i)];
      x[static_cast<std::size_t>(i)] = keep + step;
      const double up = poly_eval(h, x);
      x[static_cast<std::size_t>(i)] = keep - step;
      const double down = poly_eval(h, x);
      x[static_cast<std::size_t>(i)] = keep;
      const double fd = (up - down) / (2.0 * step);
      if (std::abs(grad - fd) > 1e-6 * std::max(1.0, std::abs(grad))) ++bad_grad;
    }
  }
  if (bad_dual > 0) {
    out.fail(std::to_string(bad_dual) + " duality failures beyond 1e-12");
  }
  if (bad_grad > 0) {
    out.fail(std::to_string(bad_grad) + " gradient mismatches beyond 1e-6");
  }
  return out;
}

Outcome edge_monotonicity() {
  Outcome out;
  Rng rng(0x5EED);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 5 + rng.bounded_int(8);
    const UniformHypergraph h =
        testutil::random_connected_h3(n, rng.bounded_int(3), rng);
    std::vector<int> extra;
    for (int tries = 0; tries < 1000 && extra.empty(); ++tries) {
      const int a = rng.bounded_int(n);
      const int b = rng.bounded_int(n);
      const int c = rng.bounded_int(n);
      if (a == b || a == c || b == c) continue;
      if (h.has_edge({a, b, c})) continue;
      extra = {a, b, c};
    }
    if (extra.empty()) {
      out.fail("no admissible edge found on trial " + std::to_string(trial));
      continue;
    }
    auto edges = h.edges();
    edges.push_back(extra);
    const UniformHypergraph grown(n, 3, std::move(edges));
    const double before = spectral_radius(h).lambda;
    const double after = spectral_radius(grown).lambda;
    if (after - before <= 1e-8) {
      out.fail("trial " + std::to_string(trial) + ": adding an edge moved " +
               fmt("%.15g", before) + " to " + fmt("%.15g", after));
    }
  }
  return out;
}

struct Criterion {
  const char* name;
  double budget_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"single-edge eigenpair", 1.0, single_edge_eigenpair},
      {"four-vertex fan closed form", 1.0, fan4_closed_form},
      {"fan floor suite", 120.0, fan_floor_suite},
      {"fan asymptotic ratio", 120.0, fan_asymptotic_ratio},
      {"triangulation counts", 60.0, triangulation_counts},
      {"exhaustive ranking scan", 600.0, exhaustive_ranking_scan},
      {"local moves raise the eigenvalue", 120.0, local_moves_raise_lambda},
      {"algebraic identities", 60.0, algebraic_identities},
      {"edge monotonicity", 60.0, edge_monotonicity},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = c.run();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > c.budget_seconds) {
      outcome.fail("took " + fmt("%.2f", elapsed) + " s, budget " +
                   fmt("%.0f", c.budget_seconds) + " s");
    }
    std::printf("[%s] %zu/%zu %s (%.2f s, budget %.0f s)\n",
                outcome.ok ? "PASS" : "FAIL", i + 1, criteria.size(), c.name,
                elapsed, c.budget_seconds);
    for (const auto& line : outcome.notes) {
      std::printf("    %s\n", line.c_str());
    }
    if (!outcome.ok) ++failures;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
