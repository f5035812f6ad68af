#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "errlens/pipeline.hpp"

namespace errlens {

inline constexpr std::string_view kEnhancedDelimiter = "---- enhanced ----";

enum class OutputFormat { Plain, Structured };

struct CliOptions {
    enum class Mode { Run, Pipe };
    Mode mode = Mode::Run;
    std::filesystem::path script;
    std::vector<std::string> script_args;
    Source source = Source::StackOverflow;
    /// Fixture directory; live transport when absent.
    std::optional<std::filesystem::path> fixtures;
    std::optional<std::filesystem::path> cache_dir;
    std::int64_t ttl_seconds = 86400;
    int max_sentences = 4;
    OutputFormat output = OutputFormat::Plain;
    std::optional<std::filesystem::path> interpreter;
    std::optional<std::filesystem::path> data_dir;

    /// Throws std::invalid_argument.
    void validate() const;
};

/// --cache-dir, else $ERRLENS_CACHE_DIR, else $XDG_CACHE_HOME/errlens or
/// ~/.cache/errlens.
std::optional<std::filesystem::path> resolve_cache_dir(const CliOptions& opts);

SummaryConfig summary_config(const CliOptions& opts);

/// Child output is forwarded unchanged; the enhanced block follows the
/// child's stderr on `err`. Returns the child's exit status.
int run_file(const CliOptions& opts, std::ostream& out, std::ostream& err);

/// Reads a traceback from `in` and writes only the message to `out`.
/// Returns 1 when nothing could be produced.
int enhance_stdin(const CliOptions& opts, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace errlens
