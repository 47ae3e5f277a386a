#include "hyperspec/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "hyperspec/io.hpp"

namespace hyperspec {

namespace {

constexpr double kTieWidth = 1e-9;        // lambda gap treated as a tie
constexpr double kViolationGap = 1e-8;    // gap that would falsify extremality
constexpr double kBoundSlack = 1e-9;      // numeric slack on the closed form

std::string triple_str(const std::array<int, 3>& t) {
  return "{" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
         std::to_string(t[2]) + "}";
}

void require_matching(const UniformHypergraph& h, const Triangulation& t) {
  if (!(to_hypergraph(t) == h)) {
    throw std::invalid_argument(
        "hypergraph does not match the triangulation's triangles");
  }
}

}  // namespace

double fan_lower_bound(int n) {
  if (n < 3) throw std::invalid_argument("fan needs at least 3 vertices");
  const double k = static_cast<double>(n - 1);
  return std::cbrt(4.0 * k) * (1.0 - 1.0 / k);
}

BoundReport check_fan_bound(int n, const SolverConfig& config) {
  BoundReport rep;
  rep.n = n;
  rep.bound = fan_lower_bound(n);
  try {
    const PerronResult r = spectral_radius(fan(n), config);
    rep.lambda_fan = r.lambda;
    rep.ratio_to_cbrt4n = r.lambda / std::cbrt(4.0 * n);
    rep.ok = r.lambda >= rep.bound - kBoundSlack;
  } catch (const ConvergenceError&) {
    rep.lambda_fan = std::numeric_limits<double>::quiet_NaN();
    rep.ratio_to_cbrt4n = std::numeric_limits<double>::quiet_NaN();
    rep.ok = false;
    rep.solved = false;
  }
  return rep;
}

std::vector<BoundReport> asymptotic_table(const std::vector<int>& ns,
                                          const SolverConfig& config) {
  std::vector<BoundReport> rows;
  rows.reserve(ns.size());
  for (int n : ns) rows.push_back(check_fan_bound(n, config));
  return rows;
}

ScanReport extremal_scan(int n, const SolverConfig& config, bool dedupe,
                         int jobs) {
  if (n < 3) throw std::invalid_argument("scan needs at least 3 vertices");
  ScanReport report;
  report.n = n;
  report.dedupe = dedupe;

  const std::vector<Triangulation> tris = all_triangulations(n, dedupe);
  const Triangulation fan_canon = canonical_form(fan_triangulation(n));
  report.lambda_fan = spectral_radius(fan(n), config).lambda;

  struct Row {
    ScanRecord rec;
    std::vector<VertexPair> canon;
  };
  std::vector<Row> rows(tris.size());

  auto solve_slot = [&](std::size_t i) {
    Row& row = rows[i];
    const Triangulation canon = dedupe ? tris[i] : canonical_form(tris[i]);
    row.canon = canon.diagonals;
    row.rec.triangulation = to_text(canon);
    row.rec.is_fan = canon.diagonals == fan_canon.diagonals;
    try {
      const PerronResult r = spectral_radius(to_hypergraph(tris[i]), config);
      row.rec.lambda = r.lambda;
      row.rec.residual = r.residual;
      row.rec.iterations = r.iterations;
    } catch (const ConvergenceError& e) {
      row.rec.solved = false;
      row.rec.lambda = std::numeric_limits<double>::quiet_NaN();
      row.rec.residual = std::numeric_limits<double>::quiet_NaN();
      row.rec.iterations = e.iterations;
    }
    row.rec.gap_to_fan = report.lambda_fan - row.rec.lambda;
  };

  int workers = jobs;
  if (workers <= 0) {
    workers = static_cast<int>(
        std::min(8u, std::max(1u, std::thread::hardware_concurrency())));
  }
  workers = std::min<int>(workers, static_cast<int>(tris.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < tris.size(); ++i) solve_slot(i);
  } else {
    std::atomic<std::size_t> cursor{0};
    auto drain = [&]() {
      for (;;) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= tris.size()) return;
        solve_slot(i);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    for (int t = 1; t < workers; ++t) pool.emplace_back(drain);
    drain();
    for (auto& th : pool) th.join();
  }

  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.rec.solved != b.rec.solved) return a.rec.solved;
    if (!a.rec.solved) return false;
    return a.rec.lambda > b.rec.lambda;
  });
  // near-equal lambdas are a tie class, ordered within by canonical form
  std::size_t lo = 0;
  while (lo < rows.size()) {
    std::size_t hi = lo + 1;
    while (hi < rows.size() && rows[hi].rec.solved && rows[hi - 1].rec.solved &&
           rows[hi - 1].rec.lambda - rows[hi].rec.lambda < kTieWidth) {
      ++hi;
    }
    std::stable_sort(rows.begin() + static_cast<std::ptrdiff_t>(lo),
                     rows.begin() + static_cast<std::ptrdiff_t>(hi),
                     [](const Row& a, const Row& b) { return a.canon < b.canon; });
    if (lo == 0) report.rank1_tie_size = hi - lo;
    lo = hi;
  }

  report.records.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].rec.rank = static_cast<int>(i) + 1;
    report.records.push_back(std::move(rows[i].rec));
  }
  report.fan_rank = 0;
  for (const auto& rec : report.records) {
    if (rec.is_fan) {
      report.fan_rank = rec.rank;
      break;
    }
  }
  report.fan_is_rank1 = report.fan_rank == 1;
  if (!report.records.empty() && report.records.front().solved) {
    report.top_gap = report.records.front().gap_to_fan;
    report.violation =
        !report.records.front().is_fan && report.top_gap < -kViolationGap;
  } else {
    report.top_gap = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

UniformHypergraph flip_transform(const UniformHypergraph& h,
                                 const Triangulation& t, int v0, int v1,
                                 int v2) {
  require_matching(h, t);
  const int n = t.n;
  for (int v : {v0, v1, v2}) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " outside the polygon");
    }
  }
  if (v0 == v1 || v0 == v2 || v1 == v2) {
    throw std::invalid_argument("pivot vertices must be distinct");
  }
  if (!h.has_edge({v0, v1, v2})) {
    throw std::invalid_argument("pivot " + triple_str({v0, v1, v2}) +
                                " is not a triangle of the input");
  }
  const bool forward = (v1 - v0 + n) % n == 1;
  const bool backward = (v0 - v1 + n) % n == 1;
  if (!forward && !backward) {
    throw std::invalid_argument(
        "second pivot vertex must neighbor the first on the boundary");
  }
  VertexPair far_edge{std::min(v1, v2), std::max(v1, v2)};
  if (!std::binary_search(t.diagonals.begin(), t.diagonals.end(), far_edge)) {
    throw std::invalid_argument("far edge " +
                                std::to_string(far_edge.first) + "-" +
                                std::to_string(far_edge.second) +
                                " is a boundary edge, nothing lies beyond it");
  }

  // the far side is the boundary arc from v1 away from v0 up to v2
  const int dir = forward ? 1 : n - 1;
  std::vector<char> in_arc(static_cast<std::size_t>(n), 0);
  int at = v1;
  while (true) {
    in_arc[static_cast<std::size_t>(at)] = 1;
    if (at == v2) break;
    at = (at + dir) % n;
    if (at == v0) {
      throw std::logic_error("far-side walk reached the first pivot vertex");
    }
  }

  std::vector<std::vector<int>> edges;
  edges.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    const bool far = in_arc[static_cast<std::size_t>(e[0])] &&
                     in_arc[static_cast<std::size_t>(e[1])] &&
                     in_arc[static_cast<std::size_t>(e[2])];
    std::vector<int> edge = e;
    if (far) {
      for (int& v : edge) {
        if (v == v2) v = v0;
      }
    }
    edges.push_back(std::move(edge));
  }
  return UniformHypergraph(n, 3, std::move(edges));
}

std::vector<FlipSite> flip_sites(const Triangulation& t) {
  const UniformHypergraph h = to_hypergraph(t);
  const int n = t.n;
  std::vector<FlipSite> sites;
  for (int v0 = 0; v0 < n; ++v0) {
    for (int v1 : {(v0 + 1) % n, (v0 + n - 1) % n}) {
      for (int v2 = 0; v2 < n; ++v2) {
        if (v2 == v0 || v2 == v1) continue;
        if (!h.has_edge({v0, v1, v2})) continue;
        const VertexPair far_edge{std::min(v1, v2), std::max(v1, v2)};
        if (!std::binary_search(t.diagonals.begin(), t.diagonals.end(),
                                far_edge)) {
          continue;
        }
        sites.push_back({v0, v1, v2});
      }
    }
  }
  std::sort(sites.begin(), sites.end(), [](const FlipSite& a, const FlipSite& b) {
    if (a.v0 != b.v0) return a.v0 < b.v0;
    if (a.v1 != b.v1) return a.v1 < b.v1;
    return a.v2 < b.v2;
  });
  return sites;
}

UniformHypergraph leaf_reattach(const UniformHypergraph& h,
                                const Triangulation& t,
                                std::array<int, 3> leaf, int v0, int v1) {
  require_matching(h, t);
  const int n = t.n;
  std::sort(leaf.begin(), leaf.end());
  if (leaf[0] < 0 || leaf[2] >= n) {
    throw std::invalid_argument("leaf vertices outside the polygon");
  }
  if (!h.has_edge({leaf[0], leaf[1], leaf[2]})) {
    throw std::invalid_argument("leaf " + triple_str(leaf) +
                                " is not a triangle of the input");
  }
  int diag_count = 0;
  VertexPair diag{-1, -1};
  for (const auto& [a, b] : {VertexPair{leaf[0], leaf[1]},
                             VertexPair{leaf[0], leaf[2]},
                             VertexPair{leaf[1], leaf[2]}}) {
    if (std::binary_search(t.diagonals.begin(), t.diagonals.end(),
                           VertexPair{a, b})) {
      ++diag_count;
      diag = {a, b};
    }
  }
  if (diag_count != 1) {
    throw std::invalid_argument("leaf " + triple_str(leaf) +
                                " is not a leaf of the dual tree");
  }
  int w = -1;
  for (int v : leaf) {
    if (v != diag.first && v != diag.second) w = v;
  }
  if (h.degree(w) != 1) {
    throw std::invalid_argument("leaf tip " + std::to_string(w) +
                                " lies in more than one triangle");
  }
  for (int v : {v0, v1}) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " outside the polygon");
    }
  }
  if (v0 == v1) throw std::invalid_argument("anchors must be distinct");
  if (v0 == leaf[0] || v0 == leaf[1] || v0 == leaf[2]) {
    throw std::invalid_argument("anchor v0 lies in the leaf being moved");
  }
  if (v1 == leaf[0] || v1 == leaf[1] || v1 == leaf[2]) {
    throw std::invalid_argument("anchor v1 lies in the leaf being moved");
  }
  if (h.degree(v1) != 1) {
    throw std::invalid_argument("anchor v1 must lie in exactly one triangle");
  }
  const auto v1_star = h.star(v1);
  if (!std::binary_search(v1_star[0].begin(), v1_star[0].end(), v0)) {
    throw std::invalid_argument("anchor v0 must share v1's unique triangle");
  }

  std::vector<std::vector<int>> edges;
  edges.reserve(h.edge_count());
  const std::vector<int> leaf_edge{leaf[0], leaf[1], leaf[2]};
  for (const auto& e : h.edges()) {
    if (e != leaf_edge) edges.push_back(e);
  }
  std::vector<int> attached{w, v0, v1};
  std::sort(attached.begin(), attached.end());
  edges.push_back(std::move(attached));
  return UniformHypergraph(n, 3, std::move(edges));
}

std::vector<LeafSite> leaf_sites(const Triangulation& t) {
  const UniformHypergraph h = to_hypergraph(t);
  const int n = t.n;
  std::vector<int> deg1;
  for (int v = 0; v < n; ++v) {
    if (h.degree(v) == 1) deg1.push_back(v);
  }
  std::vector<LeafSite> sites;
  for (const auto& tri : triangles_of(t)) {
    int diag_count = 0;
    for (const auto& [a, b] : {VertexPair{tri[0], tri[1]},
                               VertexPair{tri[0], tri[2]},
                               VertexPair{tri[1], tri[2]}}) {
      if (std::binary_search(t.diagonals.begin(), t.diagonals.end(),
                             VertexPair{a, b})) {
        ++diag_count;
      }
    }
    if (diag_count != 1) continue;
    auto in_leaf = [&](int v) {
      return v == tri[0] || v == tri[1] || v == tri[2];
    };
    for (int v1 : deg1) {
      if (in_leaf(v1)) continue;
      const auto star = h.star(v1);
      for (int v0 : star[0]) {
        if (v0 == v1 || in_leaf(v0)) continue;
        sites.push_back({tri, v0, v1});
      }
    }
  }
  std::sort(sites.begin(), sites.end(), [](const LeafSite& a, const LeafSite& b) {
    if (a.leaf != b.leaf) return a.leaf < b.leaf;
    if (a.v0 != b.v0) return a.v0 < b.v0;
    return a.v1 < b.v1;
  });
  return sites;
}

double entry_swap_delta(const UniformHypergraph& h, const std::vector<double>& x,
                        int a, int b) {
  if (static_cast<int>(x.size()) != h.vertex_count()) {
    throw std::invalid_argument("vector length does not match vertex count");
  }
  const int n = h.vertex_count();
  if (a < 0 || a >= n || b < 0 || b >= n) {
    throw std::invalid_argument("swap positions outside the vertex range");
  }
  std::vector<double> y = x;
  std::swap(y[static_cast<std::size_t>(a)], y[static_cast<std::size_t>(b)]);
  return poly_eval(h, y) - poly_eval(h, x);
}

std::string scan_csv(const ScanReport& report, const SolverConfig& config) {
  std::string out = "# scan n=" + std::to_string(report.n) + " dedupe=" +
                    (report.dedupe ? "on" : "off") + " " + config_line(config) +
                    "\n";
  out += "# lambda_fan=" + format_g15(report.lambda_fan) +
         " fan_rank=" + std::to_string(report.fan_rank) +
         " fan_is_rank1=" + (report.fan_is_rank1 ? "true" : "false") +
         " top_gap=" + format_g15(report.top_gap) +
         " rank1_tie_size=" + std::to_string(report.rank1_tie_size) +
         " violation=" + (report.violation ? "true" : "false") + "\n";
  out += "rank,triangulation,lambda,gap_to_fan,residual,iterations,is_fan\n";
  for (const auto& rec : report.records) {
    out += std::to_string(rec.rank) + ",\"" + rec.triangulation + "\"," +
           format_g15(rec.lambda) + "," + format_g15(rec.gap_to_fan) + "," +
           format_g15(rec.residual) + "," + std::to_string(rec.iterations) +
           "," + (rec.is_fan ? "true" : "false") + "\n";
  }
  return out;
}

std::string bound_csv(const std::vector<BoundReport>& rows,
                      const SolverConfig& config) {
  std::string out = "# fan lower bound check " + config_line(config) + "\n";
  out += "n,lambda_fan,bound,ratio,ok\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + format_g15(r.lambda_fan) + "," +
           format_g15(r.bound) + "," + format_g15(r.ratio_to_cbrt4n) + "," +
           (r.ok ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace hyperspec
