#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace adnil::cli {

enum class Format { Text, Json };

struct CommandOptions {
    std::string type;
    int size = 0;
    std::string partition;
    std::optional<std::string> variant;
    Format format = Format::Text;
    std::optional<std::uint64_t> seed;  // falls back to ADNIL_SEED, then a fixed default
    int trials = 3;
    unsigned threads = 1;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_input = 1;
inline constexpr int exit_mismatch = 2;

std::uint64_t resolve_seed(const CommandOptions& opts);

int cmd_ideal(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_table(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_count(const CommandOptions& opts, std::ostream& out, std::ostream& err);

// Parses argv (subcommand first) and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace adnil::cli
