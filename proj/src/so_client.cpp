#include "errlens/so_client.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "errlens/text.hpp"
#include "json.hpp"
#include "text_util.hpp"

namespace errlens {
namespace {

using json = nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string ids_joined(std::span<const ThreadSummary> threads) {
    std::string ids;
    for (const ThreadSummary& t : threads) {
        if (!ids.empty()) ids += ';';
        ids += std::to_string(t.question_id);
    }
    return ids;
}

std::int64_t system_seconds() {
    return std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch())
        .count();
}

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

std::optional<std::string> read_cache(const std::filesystem::path& path, const std::string& key, std::int64_t now,
                                      std::int64_t ttl) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) {
        return std::nullopt;
    }
    try {
        const json entry = json::parse(read_file(path));
        if (entry.at("key").get<std::string>() != key) {
            return std::nullopt;
        }
        const auto fetched_at = entry.at("fetched_at").get<std::int64_t>();
        if (now - fetched_at >= ttl || now < fetched_at) {
            return std::nullopt;
        }
        return entry.at("payload").get<std::string>();
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// Write-then-rename so concurrent readers see the old or the new entry.
void write_cache(const std::filesystem::path& path, const std::string& key, std::int64_t now,
                 const std::string& payload) {
    static std::atomic<unsigned> counter{0};
    try {
        std::filesystem::create_directories(path.parent_path());
        const json entry = {{"key", key}, {"fetched_at", now}, {"payload", payload}};
        auto tmp = path;
        tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out << entry.dump();
            out.flush();
            if (!out) {
                std::filesystem::remove(tmp);
                return;
            }
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path, ec);
        if (ec) {
            std::filesystem::remove(tmp, ec);
        }
    } catch (const std::exception&) {
        // cache failures only cost a refetch
    }
}

std::string fetch_body(const ApiRequest& request, Transport& transport) {
    ApiResponse response = transport.get(request);
    check_api_payload(response);
    return std::move(response.body);
}

std::string cached_body(const ApiRequest& request, Transport& transport, const CacheOptions& cache) {
    if (transport.is_fixture() || cache.dir.empty()) {
        return fetch_body(request, transport);
    }
    const std::int64_t now = cache.clock ? cache.clock() : system_seconds();
    const auto path = cache_entry_path(cache.dir, request.key);
    if (auto hit = read_cache(path, request.key, now, cache.ttl_seconds)) {
        return *std::move(hit);
    }
    std::string body = fetch_body(request, transport);
    write_cache(path, request.key, now, body);
    return body;
}

}  // namespace

TransportError::TransportError(long status, std::string body, const std::string& what)
    : std::runtime_error(what), status_(status), body_(std::move(body)) {}

QuotaExhausted::QuotaExhausted(std::string body)
    : TransportError(400, std::move(body), "Stack Exchange API quota exhausted") {}

FixtureTransport::FixtureTransport(std::filesystem::path dir) : dir_(std::move(dir)) {
    const auto index_path = dir_ / "index.tsv";
    std::string text;
    try {
        text = read_file(index_path);
    } catch (const std::exception&) {
        throw std::invalid_argument("fixture directory has no readable index.tsv: " + dir_.string());
    }
    for (const std::string& line : split_lines(text)) {
        if (trim(line).empty() || line.front() == '#') {
            continue;
        }
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw std::invalid_argument("malformed fixture index line: " + line);
        }
        index_.emplace(normalize_key(line.substr(0, tab)), std::string(trim(line.substr(tab + 1))));
    }
}

ApiResponse FixtureTransport::get(const ApiRequest& request) {
    ++calls_;
    const auto it = index_.find(normalize_key(request.key));
    if (it == index_.end()) {
        throw TransportError(404, "", "no recorded fixture for '" + request.key + "'");
    }
    try {
        return ApiResponse{200, read_file(dir_ / it->second)};
    } catch (const std::exception& e) {
        throw TransportError(500, "", e.what());
    }
}

std::string normalize_key(std::string_view text) { return to_lower(collapse_whitespace(text)); }

ApiRequest search_request(const SearchQuery& query) {
    ApiRequest request;
    request.route = "/search/advanced";
    request.params = {
        {"site", "stackoverflow"},
        {"tagged", query.tag},
        {"answers", std::to_string(query.min_answers)},
        {"sort", "relevance"},
        {"order", "desc"},
        {"q", query.text},
        {"pagesize", std::to_string(query.page_size)},
    };
    request.key = normalize_key(query.text);
    request.wants_answer_filter = true;
    return request;
}

ApiRequest answers_request(std::span<const ThreadSummary> threads) {
    const std::string ids = ids_joined(threads);
    ApiRequest request;
    request.route = "/questions/" + ids + "/answers";
    request.params = {
        {"site", "stackoverflow"},
        {"sort", "votes"},
        {"order", "desc"},
        {"pagesize", "100"},
        {"filter", "withbody"},
    };
    request.key = "answers:" + ids;
    return request;
}

void check_api_payload(const ApiResponse& response) {
    json payload;
    try {
        payload = json::parse(response.body);
    } catch (const json::exception&) {
        throw TransportError(response.status, response.body,
                             "unparseable API response (HTTP " + std::to_string(response.status) + ")");
    }
    if (!payload.is_object()) {
        throw TransportError(response.status, response.body, "API response is not an object");
    }
    if (payload.contains("error_id")) {
        const long error_id = payload.value("error_id", 0L);
        const std::string name = payload.value("error_name", std::string());
        if (error_id == 502 || name == "throttle_violation") {
            throw QuotaExhausted(response.body);
        }
        throw TransportError(response.status == 200 ? error_id : response.status, response.body,
                             "API error " + std::to_string(error_id) + " " + name + ": " +
                                 payload.value("error_message", std::string()));
    }
    if (response.status != 200) {
        throw TransportError(response.status, response.body, "HTTP status " + std::to_string(response.status));
    }
    if (payload.contains("backoff")) {
        throw TransportError(response.status, response.body,
                             "API requested backoff of " + payload["backoff"].dump() + " s");
    }
    if (payload.contains("quota_remaining") && payload["quota_remaining"].is_number() &&
        payload["quota_remaining"].get<long>() <= 0 && payload.value("items", json::array()).empty()) {
        throw QuotaExhausted(response.body);
    }
}

std::vector<ThreadSummary> parse_search_response(const std::string& body, int page_size) try {
    std::vector<ThreadSummary> threads;
    const json payload = json::parse(body);
    for (const json& item : payload.value("items", json::array())) {
        if (static_cast<int>(threads.size()) >= page_size) {
            break;
        }
        ThreadSummary thread;
        thread.question_id = item.at("question_id").get<std::int64_t>();
        thread.title = decode_entities(item.value("title", std::string()));
        for (const json& answer : item.value("answers", json::array())) {
            thread.answer_ids.push_back(answer.at("answer_id").get<std::int64_t>());
        }
        if (thread.question_id <= 0 || thread.answer_ids.empty()) {
            continue;
        }
        thread.relevance_rank = static_cast<int>(threads.size()) + 1;
        threads.push_back(std::move(thread));
    }
    return threads;
} catch (const json::exception& e) {
    throw TransportError(200, body, std::string("malformed search response: ") + e.what());
}

AnswerIndex parse_answers_response(const std::string& body, std::span<const ThreadSummary> threads) try {
    AnswerIndex index;
    for (const ThreadSummary& t : threads) {
        index[t.question_id];
    }
    const json payload = json::parse(body);
    for (const json& item : payload.value("items", json::array())) {
        AnswerRecord record;
        record.answer_id = item.at("answer_id").get<std::int64_t>();
        record.question_id = item.at("question_id").get<std::int64_t>();
        record.score = item.value("score", 0);
        record.accepted = item.value("is_accepted", false);
        record.body_html = item.value("body", std::string());
        const auto it = index.find(record.question_id);
        if (it == index.end() || record.body_html.empty()) {
            continue;
        }
        it->second.push_back(std::move(record));
    }
    return index;
} catch (const json::exception& e) {
    throw TransportError(200, body, std::string("malformed answers response: ") + e.what());
}

std::vector<ThreadSummary> search(const SearchQuery& query, Transport& transport) {
    return parse_search_response(fetch_body(search_request(query), transport), query.page_size);
}

AnswerIndex fetch_answers(std::span<const ThreadSummary> threads, Transport& transport) {
    if (threads.empty()) {
        return {};
    }
    return parse_answers_response(fetch_body(answers_request(threads), transport), threads);
}

std::vector<ThreadSummary> cached_search(const SearchQuery& query, Transport& transport, const CacheOptions& cache) {
    return parse_search_response(cached_body(search_request(query), transport, cache), query.page_size);
}

AnswerIndex cached_fetch_answers(std::span<const ThreadSummary> threads, Transport& transport,
                                 const CacheOptions& cache) {
    if (threads.empty()) {
        return {};
    }
    return parse_answers_response(cached_body(answers_request(threads), transport, cache), threads);
}

std::filesystem::path cache_entry_path(const std::filesystem::path& dir, std::string_view key) {
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(normalize_key(key))));
    return dir / name;
}

}  // namespace errlens
