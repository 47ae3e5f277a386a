#include "hyperspec/io.hpp"

#include <cstdio>

#include "json.hpp"

namespace hyperspec {

std::string format_g15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

std::string config_line(const SolverConfig& c) {
  return "tol=" + format_g15(c.tol) + " max_iter=" + std::to_string(c.max_iter) +
         " shift=" + format_g15(c.shift) + " seed=" + std::to_string(c.seed);
}

std::string to_interchange(const UniformHypergraph& h) {
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(h.vertex_count()) + ",\n";
  out += "  \"r\": " + std::to_string(h.uniformity()) + ",\n";
  if (h.edge_count() == 0) {
    out += "  \"edges\": []\n";
  } else {
    out += "  \"edges\": [\n";
    const auto& edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      out += "    [";
      for (std::size_t j = 0; j < edges[i].size(); ++j) {
        if (j > 0) out += ", ";
        out += std::to_string(edges[i][j]);
      }
      out += i + 1 < edges.size() ? "],\n" : "]\n";
    }
    out += "  ]\n";
  }
  out += "}\n";
  return out;
}

UniformHypergraph hypergraph_from_interchange(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "n" && key != "r" && key != "edges") {
      throw ParseError("unknown field '" + key + "'");
    }
  }
  for (const char* field : {"n", "r", "edges"}) {
    if (!j.contains(field)) {
      throw ParseError(std::string("missing field '") + field + "'");
    }
  }
  if (!j["n"].is_number_integer()) throw ParseError("field 'n' must be an integer");
  if (!j["r"].is_number_integer()) throw ParseError("field 'r' must be an integer");
  if (!j["edges"].is_array()) throw ParseError("field 'edges' must be a list");
  const long long n = j["n"].get<long long>();
  const long long r = j["r"].get<long long>();
  if (n < 1 || n > 10'000'000) throw ParseError("field 'n' out of range");
  if (r < 2 || r > 64) throw ParseError("field 'r' out of range");
  std::vector<std::vector<int>> edges;
  edges.reserve(j["edges"].size());
  std::size_t idx = 0;
  for (const auto& e : j["edges"]) {
    if (!e.is_array()) {
      throw ParseError("edges[" + std::to_string(idx) + "] must be a list");
    }
    std::vector<int> edge;
    edge.reserve(e.size());
    for (const auto& v : e) {
      if (!v.is_number_integer()) {
        throw ParseError("edges[" + std::to_string(idx) +
                         "] must hold integers");
      }
      const long long vv = v.get<long long>();
      if (vv < 0 || vv >= n) {
        throw ParseError("edges[" + std::to_string(idx) + "] vertex " +
                         std::to_string(vv) + " outside [0, " +
                         std::to_string(n) + ")");
      }
      edge.push_back(static_cast<int>(vv));
    }
    edges.push_back(std::move(edge));
    ++idx;
  }
  try {
    return UniformHypergraph(static_cast<int>(n), static_cast<int>(r),
                             std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string perron_record(const PerronResult& r, const std::string& config) {
  std::string out = "{\n";
  out += "  \"config\": \"" + config + "\",\n";
  out += "  \"lambda\": " + format_g15(r.lambda) + ",\n";
  out += "  \"bracket_low\": " + format_g15(r.bracket_low) + ",\n";
  out += "  \"bracket_high\": " + format_g15(r.bracket_high) + ",\n";
  out += "  \"residual\": " + format_g15(r.residual) + ",\n";
  out += "  \"iterations\": " + std::to_string(r.iterations) + ",\n";
  out += std::string("  \"normalization\": ") +
         (r.normalization == Normalization::unit_r_norm ? "\"unit-r-norm\""
                                                        : "\"max-entry-one\"") +
         ",\n";
  out += std::string("  \"zero_edges\": ") + (r.zero_edges ? "true" : "false") +
         ",\n";
  out += "  \"vector\": [";
  for (std::size_t i = 0; i < r.vector.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_g15(r.vector[i]);
  }
  out += "]\n}\n";
  return out;
}

}  // namespace hyperspec
