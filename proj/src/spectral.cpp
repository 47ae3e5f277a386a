#include "hyperspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperspec/rng.hpp"

namespace hyperspec {

namespace {

void check_vector_size(const UniformHypergraph& h, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != h.vertex_count()) {
    throw std::invalid_argument("vector has " + std::to_string(x.size()) +
                                " entries for " +
                                std::to_string(h.vertex_count()) + " vertices");
  }
}

double pow_int(double v, int p) {
  double out = 1.0;
  for (int i = 0; i < p; ++i) out *= v;
  return out;
}

void check_config(const SolverConfig& c) {
  if (!(c.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (c.max_iter == 0) throw std::invalid_argument("max_iter must be positive");
  if (!(c.shift >= 0.0)) throw std::invalid_argument("shift must be nonnegative");
}

struct ComponentSolve {
  double lambda = 0.0;
  double low = 0.0;
  double high = 0.0;
  double residual = 0.0;
  std::uint64_t iterations = 0;
  std::vector<double> x;  // local indexing, unit r-norm
};

// edges come flattened as groups of r local vertex ids
void apply_local(const std::vector<int>& flat, int r, const std::vector<double>& x,
                 std::vector<double>& y) {
  std::fill(y.begin(), y.end(), 0.0);
  const std::size_t m = flat.size() / static_cast<std::size_t>(r);
  if (r == 3) {
    for (std::size_t e = 0; e < m; ++e) {
      const int a = flat[3 * e];
      const int b = flat[3 * e + 1];
      const int c = flat[3 * e + 2];
      y[static_cast<std::size_t>(a)] += x[static_cast<std::size_t>(b)] * x[static_cast<std::size_t>(c)];
      y[static_cast<std::size_t>(b)] += x[static_cast<std::size_t>(a)] * x[static_cast<std::size_t>(c)];
      y[static_cast<std::size_t>(c)] += x[static_cast<std::size_t>(a)] * x[static_cast<std::size_t>(b)];
    }
    return;
  }
  std::vector<double> pre(static_cast<std::size_t>(r));
  std::vector<double> suf(static_cast<std::size_t>(r));
  for (std::size_t e = 0; e < m; ++e) {
    const int* v = &flat[e * static_cast<std::size_t>(r)];
    pre[0] = 1.0;
    for (int i = 1; i < r; ++i) {
      pre[static_cast<std::size_t>(i)] =
          pre[static_cast<std::size_t>(i - 1)] * x[static_cast<std::size_t>(v[i - 1])];
    }
    suf[static_cast<std::size_t>(r - 1)] = 1.0;
    for (int i = r - 2; i >= 0; --i) {
      suf[static_cast<std::size_t>(i)] =
          suf[static_cast<std::size_t>(i + 1)] * x[static_cast<std::size_t>(v[i + 1])];
    }
    for (int i = 0; i < r; ++i) {
      y[static_cast<std::size_t>(v[i])] +=
          pre[static_cast<std::size_t>(i)] * suf[static_cast<std::size_t>(i)];
    }
  }
}

void normalize_r(std::vector<double>& x, int r) {
  double s = 0.0;
  if (r == 3) {
    for (double v : x) s += v * v * v;
  } else {
    for (double v : x) s += pow_int(v, r);
  }
  const double scale = std::pow(s, -1.0 / r);
  for (double& v : x) v *= scale;
}

ComponentSolve solve_component(const std::vector<int>& flat, int nloc, int r,
                               const SolverConfig& cfg) {
  Rng rng(cfg.seed);
  std::vector<double> x(static_cast<std::size_t>(nloc));
  for (double& v : x) v = 1.0 + 1e-3 * rng.unit_double();
  normalize_r(x, r);

  std::vector<double> y(static_cast<std::size_t>(nloc));
  double low = 0.0;
  double high = 0.0;
  for (std::uint64_t iter = 1; iter <= cfg.max_iter; ++iter) {
    apply_local(flat, r, x, y);
    low = std::numeric_limits<double>::infinity();
    high = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < nloc; ++i) {
      const double xp = pow_int(x[static_cast<std::size_t>(i)], r - 1);
      const double yi = y[static_cast<std::size_t>(i)] + cfg.shift * xp;
      y[static_cast<std::size_t>(i)] = yi;
      const double ratio = yi / xp;
      low = std::min(low, ratio);
      high = std::max(high, ratio);
    }
    if (high - low <= cfg.tol) {
      ComponentSolve out;
      const double mid = (low + high) / 2.0;
      out.lambda = mid - cfg.shift;
      out.low = low - cfg.shift;
      out.high = high - cfg.shift;
      out.iterations = iter;
      double resid = 0.0;
      for (int i = 0; i < nloc; ++i) {
        const double xp = pow_int(x[static_cast<std::size_t>(i)], r - 1);
        resid = std::max(resid,
                         std::abs(mid * xp - y[static_cast<std::size_t>(i)]));
      }
      out.residual = resid;
      out.x = std::move(x);
      return out;
    }
    // next iterate: componentwise (r-1)-th root, rescaled to the shell
    if (r == 3) {
      for (int i = 0; i < nloc; ++i) {
        x[static_cast<std::size_t>(i)] = std::sqrt(y[static_cast<std::size_t>(i)]);
      }
    } else {
      const double inv = 1.0 / (r - 1);
      for (int i = 0; i < nloc; ++i) {
        x[static_cast<std::size_t>(i)] = std::pow(y[static_cast<std::size_t>(i)], inv);
      }
    }
    normalize_r(x, r);
  }
  throw ConvergenceError(
      "bracket width " + std::to_string(high - low) + " above tolerance after " +
          std::to_string(cfg.max_iter) + " iterations",
      low - cfg.shift, high - cfg.shift, cfg.max_iter);
}

}  // namespace

std::vector<double> apply_adjacency(const UniformHypergraph& h,
                                    const std::vector<double>& x) {
  check_vector_size(h, x);
  const int r = h.uniformity();
  std::vector<double> y(x.size(), 0.0);
  std::vector<double> pre(static_cast<std::size_t>(r));
  std::vector<double> suf(static_cast<std::size_t>(r));
  for (const auto& e : h.edges()) {
    pre[0] = 1.0;
    for (int i = 1; i < r; ++i) {
      pre[static_cast<std::size_t>(i)] =
          pre[static_cast<std::size_t>(i - 1)] *
          x[static_cast<std::size_t>(e[static_cast<std::size_t>(i - 1)])];
    }
    suf[static_cast<std::size_t>(r - 1)] = 1.0;
    for (int i = r - 2; i >= 0; --i) {
      suf[static_cast<std::size_t>(i)] =
          suf[static_cast<std::size_t>(i + 1)] *
          x[static_cast<std::size_t>(e[static_cast<std::size_t>(i + 1)])];
    }
    for (int i = 0; i < r; ++i) {
      y[static_cast<std::size_t>(e[static_cast<std::size_t>(i)])] +=
          pre[static_cast<std::size_t>(i)] * suf[static_cast<std::size_t>(i)];
    }
  }
  return y;
}

double poly_eval(const UniformHypergraph& h, const std::vector<double>& x) {
  check_vector_size(h, x);
  double s = 0.0;
  for (const auto& e : h.edges()) {
    double p = 1.0;
    for (int v : e) p *= x[static_cast<std::size_t>(v)];
    s += p;
  }
  return h.uniformity() * s;
}

double rayleigh_quotient(const UniformHypergraph& h,
                         const std::vector<double>& x) {
  check_vector_size(h, x);
  const int r = h.uniformity();
  double s = 0.0;
  for (double v : x) {
    if (v < 0.0) {
      throw std::invalid_argument("quotient needs a nonnegative vector");
    }
    s += pow_int(v, r);
  }
  if (s == 0.0) throw std::invalid_argument("quotient needs a nonzero vector");
  return poly_eval(h, x) / s;
}

double eigen_residual(const UniformHypergraph& h, double lambda,
                      const std::vector<double>& x) {
  check_vector_size(h, x);
  const int r = h.uniformity();
  const std::vector<double> y = apply_adjacency(h, x);
  double resid = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0.0) continue;
    resid = std::max(resid, std::abs(lambda * pow_int(x[i], r - 1) - y[i]));
  }
  return resid;
}

PerronResult spectral_radius(const UniformHypergraph& h,
                             const SolverConfig& config) {
  check_config(config);
  PerronResult res;
  res.vector.assign(static_cast<std::size_t>(h.vertex_count()), 0.0);
  if (h.edge_count() == 0) {
    res.zero_edges = true;
    return res;
  }

  const int r = h.uniformity();
  const std::vector<int> labels = component_labels(shadow(h));
  int ncomp = 0;
  for (int l : labels) ncomp = std::max(ncomp, l + 1);

  // per-component local vertex lists and flattened edges
  std::vector<std::vector<int>> comp_verts(static_cast<std::size_t>(ncomp));
  std::vector<int> local_id(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto& verts = comp_verts[static_cast<std::size_t>(labels[v])];
    local_id[v] = static_cast<int>(verts.size());
    verts.push_back(static_cast<int>(v));
  }
  std::vector<std::vector<int>> comp_flat(static_cast<std::size_t>(ncomp));
  for (const auto& e : h.edges()) {
    auto& flat = comp_flat[static_cast<std::size_t>(labels[static_cast<std::size_t>(e[0])])];
    for (int v : e) flat.push_back(local_id[static_cast<std::size_t>(v)]);
  }

  bool have = false;
  int best_comp = -1;
  ComponentSolve best;
  for (int c = 0; c < ncomp; ++c) {
    const auto& flat = comp_flat[static_cast<std::size_t>(c)];
    if (flat.empty()) continue;
    ComponentSolve cur = solve_component(
        flat, static_cast<int>(comp_verts[static_cast<std::size_t>(c)].size()), r,
        config);
    if (!have || cur.lambda > best.lambda) {
      have = true;
      best = std::move(cur);
      best_comp = c;
    }
  }

  res.lambda = best.lambda;
  res.bracket_low = best.low;
  res.bracket_high = best.high;
  res.residual = best.residual;
  res.iterations = best.iterations;
  const auto& verts = comp_verts[static_cast<std::size_t>(best_comp)];
  for (std::size_t i = 0; i < verts.size(); ++i) {
    res.vector[static_cast<std::size_t>(verts[i])] = best.x[i];
  }
  return res;
}

PerronResult to_max_entry_one(PerronResult result) {
  double hi = 0.0;
  for (double v : result.vector) hi = std::max(hi, v);
  if (hi > 0.0) {
    for (double& v : result.vector) v /= hi;
  }
  result.normalization = Normalization::max_entry_one;
  return result;
}

double brute_force_lambda(const UniformHypergraph& h, int restarts, int steps) {
  if (restarts < 1 || steps < 1) {
    throw std::invalid_argument("restarts and steps must be positive");
  }
  if (h.edge_count() == 0) return 0.0;
  const int r = h.uniformity();
  const std::size_t n = static_cast<std::size_t>(h.vertex_count());
  Rng rng(0x9e3779b97f4a7c15ULL);
  double best = 0.0;
  std::vector<double> x(n), d(n), trial(n);
  for (int rs = 0; rs < restarts; ++rs) {
    for (double& v : x) v = 0.05 + rng.unit_double();
    normalize_r(x, r);
    double f = poly_eval(h, x);
    double eta = 0.5;
    for (int s = 0; s < steps; ++s) {
      const std::vector<double> g = apply_adjacency(h, x);
      // ascend inside the shell: remove the component of the gradient along
      // the shell normal x^{r-1}, so stationarity is the eigenequation
      double gdotp = 0.0;
      double pdotp = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double p = pow_int(x[i], r - 1);
        gdotp += g[i] * p;
        pdotp += p * p;
      }
      const double theta = gdotp / pdotp;
      double dmax = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        d[i] = g[i] - theta * pow_int(x[i], r - 1);
        dmax = std::max(dmax, std::abs(d[i]));
      }
      if (dmax < 1e-13) break;
      const double ft = [&] {
        for (std::size_t i = 0; i < n; ++i) {
          trial[i] = std::max(0.0, x[i] + eta * d[i]);
        }
        normalize_r(trial, r);
        return poly_eval(h, trial);
      }();
      if (ft > f) {
        x.swap(trial);
        f = ft;
        eta = std::min(eta * 1.3, 1e3);
      } else {
        eta *= 0.5;
        if (eta < 1e-14) break;
      }
    }
    best = std::max(best, f);
  }
  return best;
}

}  // namespace hyperspec
