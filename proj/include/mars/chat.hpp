#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mars {

// Where to send a chat request. api_key_env names an environment variable;
// the key itself is never stored in config files.
struct ModelEndpointConfig {
    std::string base_url;
    std::string model_id;
    std::string api_key_env;
    std::optional<double> temperature;
    std::optional<int> max_output_tokens;
    double timeout_s = 120.0;
    int max_retries = 3;
    double backoff_base_s = 1.0;
    double backoff_factor = 2.0;

    bool operator==(const ModelEndpointConfig& other) const = default;
};

enum class MessageRole { system, user, assistant };

inline const char* role_name(MessageRole r) {
    switch (r) {
        case MessageRole::system: return "system";
        case MessageRole::user: return "user";
        case MessageRole::assistant: return "assistant";
    }
    return "user";
}

struct ChatMessage {
    MessageRole role = MessageRole::user;
    std::string content;

    bool operator==(const ChatMessage& other) const = default;
};

struct ChatRequest {
    ModelEndpointConfig endpoint;
    std::vector<ChatMessage> messages;
};

// Token counts are either reported by the serving endpoint or estimated
// locally; downstream accounting treats both the same but records which.
struct Usage {
    enum class Source { reported, estimated };
    long prompt_tokens = 0;
    long completion_tokens = 0;
    Source source = Source::estimated;
};

struct ChatResponse {
    std::string text;
    Usage usage;
    long latency_ms = 0;
};

}  // namespace mars
