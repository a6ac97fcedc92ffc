#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace blocksing::cli {

/// Exit codes shared by check and trace; parse and usage errors also use
/// kInvalidInput.
inline constexpr int kNonsingular = 0;
inline constexpr int kSingular = 1;
inline constexpr int kInvalidInput = 2;

struct Environment {
    /// GSING_SEED: seeded random pendant order instead of lowest index.
    std::optional<std::uint64_t> seed;

    static Environment from_process();
};

/// Runs the tool with `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = Environment::from_process());

}  // namespace blocksing::cli
