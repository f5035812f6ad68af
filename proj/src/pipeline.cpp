#include "errlens/pipeline.hpp"

#include "json.hpp"

#include "errlens/doc_baseline.hpp"

namespace errlens {
namespace {

std::vector<ThreadSummary> run_search(const SearchQuery& query, Transport& transport,
                                      const std::optional<CacheOptions>& cache) {
    return cache ? cached_search(query, transport, *cache) : search(query, transport);
}

AnswerIndex run_fetch(std::span<const ThreadSummary> threads, Transport& transport,
                      const std::optional<CacheOptions>& cache) {
    return cache ? cached_fetch_answers(threads, transport, *cache) : fetch_answers(threads, transport);
}

}  // namespace

PipelineResult enhance(const RawCapture& capture, const KnowledgeTables& kb, Transport* transport,
                       const PipelineOptions& options) {
    PipelineResult result;
    try {
        result.error = parse_traceback(capture);
    } catch (const NotAnError& e) {
        result.note = e.what();
        return result;
    }
    const ParsedError& err = *result.error;

    if (options.source == Source::Documentation) {
        try {
            result.message = doc_message(err.kind, kb);
        } catch (const UnknownKind& e) {
            result.note = e.what();
        }
        return result;
    }
    if (transport == nullptr) {
        result.note = "no transport configured";
        return result;
    }

    result.plan = plan_query(err, kb);
    try {
        const auto threads = run_search(result.plan->query, *transport, options.cache);
        if (threads.empty()) {
            result.note = "no answered questions for query '" + result.plan->query.text + "'";
            return result;
        }
        const AnswerIndex answers = run_fetch(threads, *transport, options.cache);
        const auto selected = select_answer(threads, answers);
        if (!selected) {
            result.note = "no accepted or positively scored answer for query '" + result.plan->query.text + "'";
            return result;
        }
        CustomizedAnswer custom = customize(split_answer(selected->record), err, result.plan->typo_correction);
        result.message = assemble(custom, *selected, options.summary);
        result.selection_reason = selected->selection_reason;
    } catch (const QuotaExhausted& e) {
        result.note = std::string("API quota exhausted: ") + e.what();
    } catch (const TransportError& e) {
        result.note = std::string("search failed: ") + e.what();
    } catch (const UnparseableBody& e) {
        result.note = e.what();
    }
    return result;
}

std::string render_plain(const EnhancedMessage& msg) {
    std::string out;
    if (msg.offending_line) {
        out += "offending line: " + *msg.offending_line + "\n";
    }
    for (const std::string& s : msg.sentences) {
        out += s + "\n";
    }
    if (msg.code_example) {
        out += "\n" + *msg.code_example + "\n";
    }
    out += "\nsource: " + msg.source_url + "\n";
    return out;
}

std::string render_structured(const PipelineResult& result) {
    nlohmann::json j = nlohmann::json::object();
    const EnhancedMessage* msg = result.message ? &*result.message : nullptr;
    j["sentences"] = msg ? msg->sentences : std::vector<std::string>{};
    j["code"] = msg && msg->code_example ? nlohmann::json(*msg->code_example) : nlohmann::json(nullptr);
    j["source_url"] = msg ? nlohmann::json(msg->source_url) : nlohmann::json(nullptr);
    j["query"] = result.plan ? nlohmann::json(result.plan->query.text) : nlohmann::json(nullptr);
    j["selection_reason"] = result.selection_reason
                                ? nlohmann::json(std::string(selection_reason_name(*result.selection_reason)))
                                : nlohmann::json(nullptr);
    return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

}  // namespace errlens
