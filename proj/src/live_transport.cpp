#include <cstdlib>
#include <memory>

#include <curl/curl.h>

#include "errlens/so_client.hpp"
#include "json.hpp"

namespace errlens {
namespace {

// Fields the answer-embedding search filter must carry on top of the default set.
constexpr const char* kAnswerFilterIncludes =
    "question.answers;answer.answer_id;answer.question_id;answer.score;answer.is_accepted;answer.body";

struct CurlGlobal {
    CurlGlobal() { curl_global_init(CURL_GLOBAL_DEFAULT); }
    ~CurlGlobal() { curl_global_cleanup(); }
};

size_t append_body(char* data, size_t size, size_t count, void* out) {
    static_cast<std::string*>(out)->append(data, size * count);
    return size * count;
}

std::string escape(CURL* curl, const std::string& value) {
    char* escaped = curl_easy_escape(curl, value.c_str(), static_cast<int>(value.size()));
    std::string out = escaped != nullptr ? escaped : "";
    curl_free(escaped);
    return out;
}

}  // namespace

LiveTransport::Options LiveTransport::options_from_environment() {
    Options options;
    if (const char* url = std::getenv("ERRLENS_API_URL"); url != nullptr && *url != '\0') {
        options.base_url = url;
    }
    if (const char* key = std::getenv("ERRLENS_API_KEY"); key != nullptr && *key != '\0') {
        options.api_key = key;
    }
    return options;
}

LiveTransport::LiveTransport() : LiveTransport(options_from_environment()) {}

LiveTransport::LiveTransport(Options options) : options_(std::move(options)) {
    static CurlGlobal global;
}

LiveTransport::~LiveTransport() = default;

ApiResponse LiveTransport::perform(const std::string& url) {
    std::unique_ptr<CURL, decltype(&curl_easy_cleanup)> curl(curl_easy_init(), &curl_easy_cleanup);
    if (!curl) {
        throw TransportError(0, "", "failed to initialise HTTP client");
    }
    std::string body;
    char error[CURL_ERROR_SIZE] = {};
    curl_easy_setopt(curl.get(), CURLOPT_URL, url.c_str());
    curl_easy_setopt(curl.get(), CURLOPT_ACCEPT_ENCODING, "");  // API answers are gzip-compressed
    curl_easy_setopt(curl.get(), CURLOPT_WRITEFUNCTION, &append_body);
    curl_easy_setopt(curl.get(), CURLOPT_WRITEDATA, &body);
    curl_easy_setopt(curl.get(), CURLOPT_TIMEOUT, options_.timeout_seconds);
    curl_easy_setopt(curl.get(), CURLOPT_CONNECTTIMEOUT, options_.timeout_seconds);
    curl_easy_setopt(curl.get(), CURLOPT_USERAGENT, "errlens/0.1");
    curl_easy_setopt(curl.get(), CURLOPT_ERRORBUFFER, error);
    curl_easy_setopt(curl.get(), CURLOPT_NOSIGNAL, 1L);

    const CURLcode code = curl_easy_perform(curl.get());
    if (code != CURLE_OK) {
        throw TransportError(0, "", std::string("request failed: ") + (error[0] ? error : curl_easy_strerror(code)));
    }
    long status = 0;
    curl_easy_getinfo(curl.get(), CURLINFO_RESPONSE_CODE, &status);
    return ApiResponse{status, std::move(body)};
}

std::string LiveTransport::answer_filter() {
    if (answer_filter_) {
        return *answer_filter_;
    }
    std::unique_ptr<CURL, decltype(&curl_easy_cleanup)> curl(curl_easy_init(), &curl_easy_cleanup);
    const std::string url = options_.base_url + "/filters/create?base=default&unsafe=false&include=" +
                            escape(curl.get(), kAnswerFilterIncludes);
    const ApiResponse response = perform(url);
    check_api_payload(response);
    try {
        const auto payload = nlohmann::json::parse(response.body);
        answer_filter_ = payload.at("items").at(0).at("filter").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw TransportError(response.status, response.body, std::string("unexpected filter response: ") + e.what());
    }
    return *answer_filter_;
}

ApiResponse LiveTransport::get(const ApiRequest& request) {
    std::unique_ptr<CURL, decltype(&curl_easy_cleanup)> curl(curl_easy_init(), &curl_easy_cleanup);
    std::string url = options_.base_url + request.route;
    char separator = '?';
    auto add = [&](const std::string& name, const std::string& value) {
        url += separator;
        url += name + "=" + escape(curl.get(), value);
        separator = '&';
    };
    for (const auto& [name, value] : request.params) {
        add(name, value);
    }
    if (request.wants_answer_filter) {
        add("filter", answer_filter());
    }
    if (options_.api_key) {
        add("key", *options_.api_key);
    }
    return perform(url);
}

}  // namespace errlens
