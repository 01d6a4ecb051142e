#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lensattack::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

// Entry point for `lensattack <subcommand> ...`; args excludes argv[0].
// Subcommands: predict, sweep, plan, simulate, detect, divergence.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lensattack::cli
