#pragma once

#include <optional>
#include <string>

#include "errlens/answer.hpp"
#include "errlens/knowledge.hpp"
#include "errlens/query.hpp"
#include "errlens/so_client.hpp"
#include "errlens/summarizer.hpp"
#include "errlens/traceback.hpp"

namespace errlens {

enum class Source { StackOverflow, Documentation };

struct PipelineOptions {
    Source source = Source::StackOverflow;
    SummaryConfig summary;
    /// Used for live transports only.
    std::optional<CacheOptions> cache;
};

struct PipelineResult {
    std::optional<EnhancedMessage> message;
    std::optional<ParsedError> error;
    std::optional<QueryPlan> plan;
    std::optional<SelectionReason> selection_reason;
    /// Why there is no message; empty on success.
    std::string note;
};

/// Never throws for pipeline failures; they end up in `note`. The transport
/// may be null when source is Documentation.
PipelineResult enhance(const RawCapture& capture, const KnowledgeTables& kb, Transport* transport,
                       const PipelineOptions& options);

/// Sentences, blank line, code example, blank line, `source: <url>`.
std::string render_plain(const EnhancedMessage& msg);

/// One JSON object: sentences, code, source_url, query, selection_reason.
std::string render_structured(const PipelineResult& result);

}  // namespace errlens
