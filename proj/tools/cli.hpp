#pragma once

#include <string>
#include <vector>

namespace tilecheck::cli {

// Exit codes of the tilecheck tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_condition_failed = 2;

struct Outcome {
    int exit_code = exit_ok;
    std::string out;
    std::string err;
};

// Runs one tilecheck invocation; args excludes the program name. Never throws.
Outcome run(const std::vector<std::string>& args);

} // namespace tilecheck::cli
