#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nct {

inline constexpr const char* kCliVersion = "0.1.0";

/// Runs one command-line invocation (args exclude the program name).
/// Writes one JSON document to the output. Exit codes: 0 on success,
/// 1 on malformed input, 2 on domain errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace nct
