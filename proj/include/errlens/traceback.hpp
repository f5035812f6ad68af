#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errlens/error_kind.hpp"

namespace errlens {

/// What the interpreter printed plus the script it was running.
struct RawCapture {
    std::string stderr_text;
    std::filesystem::path source_path;
    std::string source_text;
};

struct ParsedError {
    ErrorKind kind = ErrorKind::from_token("Exception");
    std::string description;
    std::filesystem::path file;
    /// 1-based; 0 when the traceback carries no frame at all.
    std::size_t line_number = 0;
    /// Source line quoted under the chosen frame, leading indentation removed.
    std::string offending_line;
    /// 0-based column of the first '^' relative to offending_line.
    std::optional<std::size_t> caret_column;
    std::vector<std::string> imports;
    /// Line `line_number` of the script itself, when the frame points into it.
    std::string source_line;
};

/// Raised when the error stream has no final `Type: description` line.
class NotAnError : public std::runtime_error {
public:
    NotAnError() : std::runtime_error("no interpreter error found in output") {}
};

ParsedError parse_traceback(const RawCapture& capture);

/// Lexical scan for `import a, b as c` and `from x import y` statements.
std::vector<std::string> extract_imports(std::string_view source_text);

/// Substrings between successive pairs of single quotes, in order.
std::vector<std::string> extract_quoted_words(std::string_view description);

}  // namespace errlens
