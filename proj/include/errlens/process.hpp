#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace errlens {

class InterpreterNotFound : public std::runtime_error {
public:
    explicit InterpreterNotFound(const std::string& name) : std::runtime_error("interpreter not found: " + name) {}
};

class ScriptNotFound : public std::runtime_error {
public:
    explicit ScriptNotFound(const std::filesystem::path& path)
        : std::runtime_error("script not found: " + path.string()) {}
};

/// An explicit path must be executable; otherwise python3 then python are
/// looked up on $PATH.
std::filesystem::path resolve_interpreter(const std::optional<std::filesystem::path>& requested);

struct ChildResult {
    /// Exit code, or 128 + signal number when the child was killed.
    int status = 0;
    std::string stdout_text;
    std::string stderr_text;
};

/// Runs `argv` with stdin inherited. Both output streams are drained as data
/// arrives and handed to the callbacks in arrival order.
ChildResult run_child(const std::vector<std::string>& argv,
                      const std::function<void(std::string_view)>& on_stdout,
                      const std::function<void(std::string_view)>& on_stderr);

}  // namespace errlens
