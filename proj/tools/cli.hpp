#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rgk::cli {

inline constexpr int kExitDecided = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitBudget = 3;

// args excludes the program name. Results go to `out`; diagnostics to
// `err`. In --json mode exactly one document is written to `out`, an error
// object if the run fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rgk::cli
