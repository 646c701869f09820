#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hgmd::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnresolved = 1;
inline constexpr int kExitError = 2;
inline constexpr int kExitBudget = 3;

// Default candidate budget for searches; overrides kDefaultMaxCandidates.
inline constexpr const char* kBudgetEnv = "HGMD_MAX_CANDIDATES";

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgmd::cli
