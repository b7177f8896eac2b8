#pragma once

#include <chrono>
#include <cstdlib>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "mars/backend.hpp"
#include "mars/errors.hpp"

namespace mars {

struct HttpRequestData {
    std::string url;
    std::string body;
    std::vector<std::pair<std::string, std::string>> headers;
    double timeout_s = 120.0;
};

struct HttpResult {
    int status = 0;
    std::string body;
    bool transport_error = false;
    bool timed_out = false;
    std::string error_message;
};

// Wire-level seam so the retry/parsing logic can be driven without sockets.
class HttpTransport {
public:
    virtual ~HttpTransport() = default;
    virtual HttpResult post(const HttpRequestData& request) = 0;
};

class HttplibTransport : public HttpTransport {
public:
    HttpResult post(const HttpRequestData& request) override {
        auto [base, path] = split_url(request.url);
        httplib::Client client(base);
        client.set_connection_timeout(to_duration(request.timeout_s));
        client.set_read_timeout(to_duration(request.timeout_s));
        client.set_write_timeout(to_duration(request.timeout_s));

        httplib::Headers headers;
        for (const auto& [key, value] : request.headers) headers.emplace(key, value);

        auto result = client.Post(path, headers, request.body, "application/json");
        HttpResult out;
        if (!result) {
            out.transport_error = true;
            out.timed_out = result.error() == httplib::Error::ConnectionTimeout;
            out.error_message = httplib::to_string(result.error());
            return out;
        }
        out.status = result->status;
        out.body = result->body;
        return out;
    }

private:
    static std::chrono::milliseconds to_duration(double seconds) {
        return std::chrono::milliseconds(static_cast<long>(seconds * 1000.0));
    }

    // "https://host:port/v1" -> ("https://host:port", "/v1")
    static std::pair<std::string, std::string> split_url(const std::string& url) {
        std::size_t scheme_end = url.find("://");
        std::size_t host_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
        std::size_t path_start = url.find('/', host_start);
        if (path_start == std::string::npos) return {url, "/"};
        return {url.substr(0, path_start), url.substr(path_start)};
    }
};

// Chat backend speaking the common POST /chat/completions JSON protocol,
// with retry on transient failures. Authentication failures never retry.
class RemoteBackend : public ChatBackend {
public:
    using Sleeper = std::function<void(double seconds)>;

    explicit RemoteBackend(std::shared_ptr<HttpTransport> transport = nullptr,
                           Sleeper sleeper = nullptr)
        : transport_(transport ? std::move(transport)
                               : std::make_shared<HttplibTransport>()),
          sleeper_(sleeper ? std::move(sleeper)
                           : [](double s) {
                                 std::this_thread::sleep_for(
                                     std::chrono::duration<double>(s));
                             }),
          rng_(std::random_device{}()) {}

    ChatResponse complete(const ChatRequest& request) override {
        const ModelEndpointConfig& endpoint = request.endpoint;
        HttpRequestData http = build_http_request(request);

        int attempts = 1 + std::max(0, endpoint.max_retries);
        HttpResult last;
        for (int attempt = 0; attempt < attempts; ++attempt) {
            if (attempt > 0) sleeper_(backoff_delay_s(endpoint, attempt - 1));

            auto t0 = std::chrono::steady_clock::now();
            last = transport_->post(http);
            auto elapsed = std::chrono::steady_clock::now() - t0;

            if (last.status == 401 || last.status == 403) {
                throw AuthError("endpoint rejected credentials (HTTP " +
                                std::to_string(last.status) + ")");
            }
            if (last.transport_error || last.status == 429 || last.status >= 500) {
                continue;  // transient; retry if attempts remain
            }
            if (last.status < 200 || last.status >= 300) {
                throw TransportError("endpoint returned HTTP " +
                                     std::to_string(last.status) + ": " +
                                     last.body.substr(0, 200));
            }
            ChatResponse response = parse_body(last.body);
            if (response.usage.source == Usage::Source::estimated) {
                response.usage.prompt_tokens = estimate_prompt_tokens(request);
            }
            response.latency_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
            return response;
        }
        if (last.timed_out) {
            throw TimeoutError("request timed out after " + std::to_string(attempts) +
                               " attempts");
        }
        std::string detail = last.transport_error
                                 ? last.error_message
                                 : "HTTP " + std::to_string(last.status);
        throw TransportError("request failed after " + std::to_string(attempts) +
                             " attempts: " + detail);
    }

    static HttpRequestData build_http_request(const ChatRequest& request) {
        const ModelEndpointConfig& endpoint = request.endpoint;
        nlohmann::json body;
        body["model"] = endpoint.model_id;
        auto& messages = body["messages"] = nlohmann::json::array();
        for (const auto& message : request.messages) {
            messages.push_back(
                {{"role", role_name(message.role)}, {"content", message.content}});
        }
        if (endpoint.temperature) body["temperature"] = *endpoint.temperature;
        if (endpoint.max_output_tokens) body["max_tokens"] = *endpoint.max_output_tokens;

        HttpRequestData http;
        std::string base = endpoint.base_url;
        while (!base.empty() && base.back() == '/') base.pop_back();
        http.url = base + "/chat/completions";
        http.body = body.dump();
        http.timeout_s = endpoint.timeout_s;
        http.headers.emplace_back("Content-Type", "application/json");
        if (!endpoint.api_key_env.empty()) {
            const char* key = std::getenv(endpoint.api_key_env.c_str());
            if (!key || !*key) {
                throw AuthError("environment variable " + endpoint.api_key_env +
                                " is not set");
            }
            http.headers.emplace_back("Authorization", std::string("Bearer ") + key);
        }
        return http;
    }

private:
    double backoff_delay_s(const ModelEndpointConfig& endpoint, int failure_index) {
        double base = endpoint.backoff_base_s;
        for (int i = 0; i < failure_index; ++i) base *= endpoint.backoff_factor;
        std::uniform_real_distribution<double> jitter(0.5, 1.5);
        return base * jitter(rng_);
    }

    ChatResponse parse_body(const std::string& body) {
        nlohmann::json parsed = nlohmann::json::parse(body, nullptr, false);
        if (parsed.is_discarded() || !parsed.contains("choices") ||
            !parsed["choices"].is_array() || parsed["choices"].empty() ||
            !parsed["choices"][0].contains("message") ||
            !parsed["choices"][0]["message"].contains("content")) {
            throw TransportError("endpoint response is not a chat completion: " +
                                 body.substr(0, 200));
        }
        ChatResponse response;
        response.text = parsed["choices"][0]["message"]["content"].get<std::string>();

        const auto usage = parsed.value("usage", nlohmann::json::object());
        if (usage.contains("prompt_tokens") && usage.contains("completion_tokens")) {
            response.usage.prompt_tokens = usage["prompt_tokens"].get<long>();
            response.usage.completion_tokens = usage["completion_tokens"].get<long>();
            response.usage.source = Usage::Source::reported;
        } else {
            response.usage.completion_tokens = estimate_tokens(response.text);
            response.usage.source = Usage::Source::estimated;
        }
        return response;
    }

    std::shared_ptr<HttpTransport> transport_;
    Sleeper sleeper_;
    std::mt19937 rng_;
};

}  // namespace mars
