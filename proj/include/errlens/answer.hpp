#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "errlens/so_client.hpp"
#include "errlens/traceback.hpp"

namespace errlens {

enum class SelectionReason { Accepted, TopScore };

std::string_view selection_reason_name(SelectionReason reason);

struct SelectedAnswer {
    AnswerRecord record;
    int thread_rank = 0;
    SelectionReason selection_reason = SelectionReason::Accepted;
};

/// First accepted answer in rank order; otherwise the best answer scoring
/// above zero (ties: lower rank, then lower answer id); otherwise nothing.
std::optional<SelectedAnswer> select_answer(std::span<const ThreadSummary> threads, const AnswerIndex& answers);

struct AnswerParts {
    std::vector<std::string> sentences;
    std::vector<std::string> code_blocks;
};

class UnparseableBody : public std::runtime_error {
public:
    UnparseableBody() : std::runtime_error("answer body has no extractable text or code") {}
};

/// `<pre>` blocks become code (entities decoded, whitespace untouched); the
/// rest is tag-stripped, entity-decoded prose split into sentences. Inline
/// `<code>` outside `<pre>` stays part of the prose.
AnswerParts split_answer(const AnswerRecord& record);

struct CustomizedAnswer {
    std::vector<std::string> sentences;
    std::vector<std::string> code_blocks;
    int substitutions_made = 0;
    std::optional<std::string> typo_suggestion;
    /// Line from the answer shown instead of the interpreter's offending line.
    std::optional<std::string> display_offending_line;
};

/// Error-message lines inside the answer's code; exposed for tests.
bool is_error_message_line(std::string_view line, const ErrorKind& user_kind);

CustomizedAnswer customize(AnswerParts answer, const ParsedError& err, const std::optional<std::string>& typo);

}  // namespace errlens
