#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace ggc::cli {

enum class Command { verify, stats, predict, bench, oracle, eggc };

struct RunConfig {
    Command command = Command::verify;
    std::int64_t m1 = 1;
    std::int64_t m2 = 2;  // negative only for eggc
    std::uint64_t limit = 10'000;
    std::optional<std::uint64_t> segment;
    std::optional<std::uint64_t> alpha;
    std::optional<std::string> variant;
    std::filesystem::path output = ".";
    std::uint64_t window_length = 1'000'000;
    unsigned repetitions = 1;
    unsigned threads = 1;
    std::uint64_t retain = 1'000'000;
    std::int64_t n = 2;          // eggc
    std::uint64_t bound = 100;   // eggc
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 1;
inline constexpr int exit_alpha_too_small = 2;

// Executes one command, writing CSV files under config.output and a short
// report to `out`. Diagnostics go to `err`.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

// Parses argv (subcommand + flags) and runs it.
int main_entry(int argc, char **argv);

}  // namespace ggc::cli
