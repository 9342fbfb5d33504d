#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sicherman::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;       // mismatch, failed identity, missing certificate
inline constexpr int kUsage = 2;        // bad arguments
inline constexpr int kResourceCap = 3;  // search cap or node budget hit

// Environment variable overriding the solver's candidate cap.
inline constexpr const char* kSearchCapEnv = "SICHERMAN_SEARCH_CAP";

// Runs one command line (args excludes the program name) and returns the
// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sicherman::cli
