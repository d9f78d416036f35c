#ifndef DIRFUZZ_CLI_HPP
#define DIRFUZZ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dirfuzz {

// Dispatches one CLI invocation (arguments without the program name) and
// writes the report to `out`, diagnostics to `err`. Exit codes:
//   0  analysis completed (even when the answer is "not directable")
//   1  usage or parse error
//   2  precondition error (e.g. d3-test on an incomplete automaton)
//   3  resource cap exceeded
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace dirfuzz

#endif
