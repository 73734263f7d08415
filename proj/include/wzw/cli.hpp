#pragma once

// Command-line front end. Every subcommand is a thin shell over the library
// and writes one JSON record per line.

#include <iosfwd>
#include <string>
#include <vector>

namespace wzw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Default worker count: $WZW_WORKERS if set and positive, else 0 (hardware).
unsigned default_workers();

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace wzw::cli
