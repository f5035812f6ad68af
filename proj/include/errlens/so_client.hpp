#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errlens/query.hpp"

namespace errlens {

struct ThreadSummary {
    std::int64_t question_id = 0;
    std::string title;
    int relevance_rank = 0;  // 1-based position in the result page
    std::vector<std::int64_t> answer_ids;

    friend bool operator==(const ThreadSummary&, const ThreadSummary&) = default;
};

struct AnswerRecord {
    std::int64_t answer_id = 0;
    std::int64_t question_id = 0;
    int score = 0;
    bool accepted = false;
    std::string body_html;

    friend bool operator==(const AnswerRecord&, const AnswerRecord&) = default;
};

/// question_id -> answers in the order the site returned them.
using AnswerIndex = std::map<std::int64_t, std::vector<AnswerRecord>>;

/// One GET against the API. `key` identifies the request for fixtures and
/// the cache; it is the normalized query text for searches.
struct ApiRequest {
    std::string route;
    std::vector<std::pair<std::string, std::string>> params;
    std::string key;
    /// The live transport resolves a filter that embeds answers and bodies.
    bool wants_answer_filter = false;
};

struct ApiResponse {
    long status = 0;
    std::string body;
};

/// Network failure, non-success HTTP status, API error or backoff request.
class TransportError : public std::runtime_error {
public:
    TransportError(long status, std::string body, const std::string& what);
    long status() const noexcept { return status_; }
    const std::string& body() const noexcept { return body_; }

private:
    long status_;
    std::string body_;
};

class QuotaExhausted : public TransportError {
public:
    explicit QuotaExhausted(std::string body);
};

class Transport {
public:
    virtual ~Transport() = default;
    virtual ApiResponse get(const ApiRequest& request) = 0;
    /// Fixture transports are deterministic and bypass the cache.
    virtual bool is_fixture() const noexcept { return false; }
};

/// HTTPS client for api.stackexchange.com (libcurl, gzip-aware).
class LiveTransport : public Transport {
public:
    struct Options {
        std::string base_url = "https://api.stackexchange.com/2.3";
        std::optional<std::string> api_key;
        long timeout_seconds = 15;
    };

    /// Base URL from $ERRLENS_API_URL and key from $ERRLENS_API_KEY when set.
    static Options options_from_environment();

    LiveTransport();
    explicit LiveTransport(Options options);
    ~LiveTransport() override;

    ApiResponse get(const ApiRequest& request) override;

private:
    ApiResponse perform(const std::string& url);
    std::string answer_filter();

    Options options_;
    std::optional<std::string> answer_filter_;
};

/// Serves recorded payloads: `index.tsv` maps request keys to files in the
/// same directory. Unknown keys raise TransportError(404).
class FixtureTransport : public Transport {
public:
    explicit FixtureTransport(std::filesystem::path dir);

    ApiResponse get(const ApiRequest& request) override;
    bool is_fixture() const noexcept override { return true; }

    std::size_t calls() const noexcept { return calls_; }

private:
    std::filesystem::path dir_;
    std::map<std::string, std::string> index_;
    std::size_t calls_ = 0;
};

/// Lowercase with runs of whitespace collapsed to one space.
std::string normalize_key(std::string_view text);

ApiRequest search_request(const SearchQuery& query);
ApiRequest answers_request(std::span<const ThreadSummary> threads);

/// Raises TransportError / QuotaExhausted for error and backoff payloads.
void check_api_payload(const ApiResponse& response);

/// Threads with at least one answer, ranked 1..n, at most `page_size`.
std::vector<ThreadSummary> parse_search_response(const std::string& body, int page_size);
AnswerIndex parse_answers_response(const std::string& body, std::span<const ThreadSummary> threads);

std::vector<ThreadSummary> search(const SearchQuery& query, Transport& transport);
AnswerIndex fetch_answers(std::span<const ThreadSummary> threads, Transport& transport);

struct CacheOptions {
    std::filesystem::path dir;
    std::int64_t ttl_seconds = 86400;
    /// Seconds since the epoch; defaults to the system clock.
    std::function<std::int64_t()> clock;
};

std::vector<ThreadSummary> cached_search(const SearchQuery& query, Transport& transport, const CacheOptions& cache);
AnswerIndex cached_fetch_answers(std::span<const ThreadSummary> threads, Transport& transport,
                                 const CacheOptions& cache);

/// File that holds the cache entry for `key`.
std::filesystem::path cache_entry_path(const std::filesystem::path& dir, std::string_view key);

}  // namespace errlens
