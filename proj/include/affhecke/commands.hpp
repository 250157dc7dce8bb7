#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "affhecke/verify.hpp"

namespace affhecke {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitResourceBound = 3 };

enum class OutputFormat { Json, Dot, Table };

OutputFormat parse_format(const std::string& s);

struct Config {
    char lie_type = 'A';
    int rank = 1;
    std::uint32_t prime = 3;
    std::int64_t max_length = 3;
    std::optional<std::filesystem::path> cache;
    OutputFormat format = OutputFormat::Json;
    std::uint64_t seed = 1;
    std::size_t samples = 200;
    std::int64_t coord_bound = 2;
    std::size_t max_elements = 2'000'000;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct CommandResult {
    int exit_code = kExitOk;
    std::string output;
    std::string error;
};

/// --cache, else $AFFHECKE_CACHE, else $XDG_CACHE_HOME/affhecke, else ~/.cache/affhecke.
std::filesystem::path resolve_cache_dir(const Config& config);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(const std::string& data);

/// The ball of radius N, read from the cache when a valid entry exists and
/// written back atomically otherwise. `hit` reports which path was taken.
Ball cached_ball(const Config& config, const GroupPtr& group, bool* hit = nullptr);

CommandResult cmd_enumerate(const Config& config);
CommandResult cmd_compute(const Config& config, const std::string& expression);
CommandResult cmd_check(const Config& config, const std::string& suite, DemazureRule rule = demazure_basis_rule);
CommandResult cmd_graph(const Config& config);

/// Bruhat covers u < w with l(w) = l(u) + 1 inside a ball, as index pairs into ball.flatten().
std::vector<std::pair<std::size_t, std::size_t>> bruhat_covers(const Ball& ball);

}  // namespace affhecke
