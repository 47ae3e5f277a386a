#ifndef HYPERSPEC_CLI_HPP
#define HYPERSPEC_CLI_HPP

#include <iosfwd>

namespace hyperspec {

// Full command-line entry point; streams are injectable so tests can drive
// it in-process. Returns the process exit code: 0 on success, 2 on usage,
// parse, or validation errors, 1 on runtime failures. Exactly one JSON error
// record goes to err for every nonzero return.
int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace hyperspec

#endif  // HYPERSPEC_CLI_HPP
