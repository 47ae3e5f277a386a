#include "hyperspec/cli.hpp"

#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/io.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/triangulation.hpp"
#include "hyperspec/verify.hpp"

namespace hyperspec {

namespace {

void emit_error(std::ostream& err, const std::string& kind,
                const std::string& message) {
  err << "{\"error\": \"" << json_escape(message) << "\", \"kind\": \"" << kind
      << "\"}\n";
}

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for reading");
  return std::string(std::istreambuf_iterator<char>(f),
                     std::istreambuf_iterator<char>());
}

void write_artifact(const std::string& text, const std::string& out_path,
                    std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + out_path + "' for writing");
  f << text;
  if (!f) throw IoError("short write to '" + out_path + "'");
}

std::string check_report(const UniformHypergraph& h, const SolverConfig& cfg) {
  const ShadowGraph g = shadow(h);
  std::vector<int> degree(static_cast<std::size_t>(h.vertex_count()), 0);
  for (const auto& e : h.edges()) {
    for (int v : e) ++degree[static_cast<std::size_t>(v)];
  }
  int dmin = h.edge_count() == 0 ? 0 : degree[0];
  int dmax = 0;
  for (int d : degree) {
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
  }

  std::string out = "{\n";
  out += "  \"config\": \"" + config_line(cfg) + "\",\n";
  out += "  \"n\": " + std::to_string(h.vertex_count()) + ",\n";
  out += "  \"r\": " + std::to_string(h.uniformity()) + ",\n";
  out += "  \"edge_count\": " + std::to_string(h.edge_count()) + ",\n";
  out += "  \"shadow_edge_count\": " + std::to_string(g.edge_count()) + ",\n";
  out += "  \"min_degree\": " + std::to_string(dmin) + ",\n";
  out += "  \"max_degree\": " + std::to_string(dmax) + ",\n";
  out += "  \"components\": " + std::to_string(component_count(g)) + ",\n";

  if (h.uniformity() == 3) {
    const EmbeddingReport emb = check_outerplanar(h);
    out += std::string("  \"outerplanar\": ") + (emb.ok ? "true" : "false") +
           ",\n";
    const char* reason = "none";
    switch (emb.failure_reason) {
      case EmbeddingReport::Failure::none:
        break;
      case EmbeddingReport::Failure::shadow_not_outerplanar:
        reason = "shadow-not-outerplanar";
        break;
      case EmbeddingReport::Failure::hyperedge_not_interior_face:
        reason = "hyperedge-not-interior-face";
        break;
    }
    out += std::string("  \"failure_reason\": \"") + reason + "\",\n";
    out += "  \"detail\": \"" + json_escape(emb.detail) + "\",\n";
    out += "  \"outer_cycle\": [";
    for (std::size_t i = 0; i < emb.outer_cycle.size(); ++i) {
      if (i > 0) out += ", ";
      out += std::to_string(emb.outer_cycle[i]);
    }
    out += "],\n";
  } else {
    out += "  \"outerplanar\": null,\n";
    out += "  \"failure_reason\": \"not-applicable\",\n";
    out += "  \"detail\": \"outerplanarity is defined for 3-uniform input\",\n";
    out += "  \"outer_cycle\": [],\n";
  }

  const PerronResult r = spectral_radius(h, cfg);
  out += "  \"lambda\": " + format_g15(r.lambda) + ",\n";
  out += "  \"bracket_low\": " + format_g15(r.bracket_low) + ",\n";
  out += "  \"bracket_high\": " + format_g15(r.bracket_high) + ",\n";
  out += "  \"residual\": " + format_g15(r.residual) + ",\n";
  out += "  \"iterations\": " + std::to_string(r.iterations) + ",\n";
  out += std::string("  \"zero_edges\": ") + (r.zero_edges ? "true" : "false") +
         "\n";
  out += "}\n";
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"spectral radii of uniform hypergraph adjacency tensors, with "
               "polygon-triangulation enumeration and extremality scans"};
  app.require_subcommand(1);

  SolverConfig cfg;
  std::string out_path;
  std::string in_path;
  bool dedupe = false;
  int jobs = 0;
  int max_n = 12;
  int n = 0;
  std::vector<int> ns{10, 100, 1000, 10000};

  auto add_solver_flags = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "bracket width at which iteration stops")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-iter", cfg.max_iter, "iteration budget per component")
        ->check(CLI::PositiveNumber);
    sub->add_option("--shift", cfg.shift, "diagonal shift of the iteration")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", cfg.seed, "seed for the perturbed start vector");
  };
  auto add_out_flag = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write the artifact to this file");
  };

  CLI::App* cmd_fan = app.add_subcommand("fan", "emit a fan hypergraph");
  cmd_fan->add_option("n", n, "vertex count")->required()
      ->check(CLI::Range(3, 10'000'000));
  add_out_flag(cmd_fan);

  CLI::App* cmd_lambda =
      app.add_subcommand("lambda", "solve one hypergraph read as JSON");
  cmd_lambda->add_option("--in", in_path, "input file, '-' or absent for stdin");
  add_solver_flags(cmd_lambda);
  add_out_flag(cmd_lambda);

  CLI::App* cmd_enumerate =
      app.add_subcommand("enumerate", "list triangulations of the n-gon");
  cmd_enumerate->add_option("n", n, "polygon size")->required()
      ->check(CLI::Range(3, 64));
  cmd_enumerate->add_flag("--dedupe", dedupe,
                          "one representative per symmetry class");
  add_out_flag(cmd_enumerate);

  CLI::App* cmd_scan = app.add_subcommand(
      "scan", "rank all triangulations of the n-gon by eigenvalue");
  cmd_scan->add_option("n", n, "polygon size")->required()
      ->check(CLI::Range(3, 64));
  cmd_scan->add_flag("--dedupe", dedupe,
                     "one representative per symmetry class");
  cmd_scan->add_option("--jobs", jobs, "worker threads, 0 picks automatically")
      ->check(CLI::Range(0, 256));
  cmd_scan->add_option("--max-n", max_n, "refuse scans above this size")
      ->check(CLI::Range(3, 64));
  add_solver_flags(cmd_scan);
  add_out_flag(cmd_scan);

  CLI::App* cmd_bound = app.add_subcommand(
      "bound", "compare the fan eigenvalue with its closed-form floor");
  cmd_bound->add_option("n", n, "vertex count")->required()
      ->check(CLI::Range(3, 10'000'000));
  add_solver_flags(cmd_bound);
  add_out_flag(cmd_bound);

  CLI::App* cmd_asym = app.add_subcommand(
      "asymptotics", "fan bound table over a list of sizes");
  cmd_asym->add_option("--ns", ns, "vertex counts")
      ->delimiter(',')
      ->check(CLI::Range(3, 10'000'000));
  add_solver_flags(cmd_asym);
  add_out_flag(cmd_asym);

  CLI::App* cmd_check = app.add_subcommand(
      "check", "structure and eigenvalue report for one hypergraph");
  cmd_check->add_option("--in", in_path, "input file, '-' or absent for stdin");
  add_solver_flags(cmd_check);
  add_out_flag(cmd_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", e.what());
    return 2;
  }

  try {
    std::string artifact;
    if (app.got_subcommand(cmd_fan)) {
      artifact = to_interchange(fan(n));
    } else if (app.got_subcommand(cmd_lambda)) {
      const UniformHypergraph h =
          hypergraph_from_interchange(read_input(in_path, in));
      artifact = perron_record(spectral_radius(h, cfg), config_line(cfg));
    } else if (app.got_subcommand(cmd_enumerate)) {
      std::size_t count = 0;
      enumerate_triangulations(n, dedupe, [&](const Triangulation& t) {
        artifact += to_text(t) + "\n";
        ++count;
      });
      artifact += "count " + std::to_string(count) + "\n";
    } else if (app.got_subcommand(cmd_scan)) {
      if (n > max_n) {
        throw std::invalid_argument(
            "scan size " + std::to_string(n) + " exceeds the ceiling " +
            std::to_string(max_n) + "; raise --max-n to run it anyway");
      }
      artifact = scan_csv(extremal_scan(n, cfg, dedupe, jobs), cfg);
    } else if (app.got_subcommand(cmd_bound)) {
      artifact = bound_csv({check_fan_bound(n, cfg)}, cfg);
    } else if (app.got_subcommand(cmd_asym)) {
      artifact = bound_csv(asymptotic_table(ns, cfg), cfg);
    } else if (app.got_subcommand(cmd_check)) {
      const UniformHypergraph h =
          hypergraph_from_interchange(read_input(in_path, in));
      artifact = check_report(h, cfg);
    }
    write_artifact(artifact, out_path, out);
    return 0;
  } catch (const ParseError& e) {
    emit_error(err, "parse", e.what());
    return 2;
  } catch (const IoError& e) {
    emit_error(err, "io", e.what());
    return 1;
  } catch (const ConvergenceError& e) {
    emit_error(err, "convergence", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    emit_error(err, "validation", e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error(err, "internal", e.what());
    return 1;
  }
}

}  // namespace hyperspec
