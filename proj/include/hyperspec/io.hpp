#ifndef HYPERSPEC_IO_HPP
#define HYPERSPEC_IO_HPP

#include <stdexcept>
#include <string>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// shortest round-trip decimal with up to 15 significant digits ("%.15g")
std::string format_g15(double v);

// backslash-escape for embedding arbitrary text in a JSON string literal
std::string json_escape(const std::string& s);

// canonical JSON text with fields n, r, edges; edges sorted, one per line,
// trailing newline
std::string to_interchange(const UniformHypergraph& h);

// strict parse of the interchange form; errors name the offending field
UniformHypergraph hypergraph_from_interchange(const std::string& text);

// JSON record of an eigenpair with the producing configuration embedded
std::string perron_record(const PerronResult& r, const std::string& config_line);

// "tol=... max_iter=... shift=... seed=..." fragment shared by all artifacts
std::string config_line(const SolverConfig& c);

}  // namespace hyperspec

#endif  // HYPERSPEC_IO_HPP
