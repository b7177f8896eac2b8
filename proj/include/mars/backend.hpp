#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "mars/chat.hpp"

namespace mars {

class ChatBackend {
public:
    virtual ~ChatBackend() = default;
    virtual ChatResponse complete(const ChatRequest& request) = 0;
};

// Token estimate used when the endpoint reports no usage: the number of
// whitespace-separated runs. Cheap, deterministic, and monotone in text
// length, which is all the cost accounting needs.
inline long estimate_tokens(std::string_view text) {
    long count = 0;
    bool in_token = false;
    for (char c : text) {
        bool space = std::isspace(static_cast<unsigned char>(c)) != 0;
        if (!space && !in_token) ++count;
        in_token = !space;
    }
    return count;
}

// Flattens a conversation to one text block: message contents in order,
// separated by blank lines. Used for prompt-side token estimates, script
// matching, and the prompt_text field of call records.
inline std::string render_conversation(const ChatRequest& request) {
    std::string out;
    for (const auto& message : request.messages) {
        if (!out.empty()) out += "\n\n";
        out += message.content;
    }
    return out;
}

inline long estimate_prompt_tokens(const ChatRequest& request) {
    long total = 0;
    for (const auto& message : request.messages) total += estimate_tokens(message.content);
    return total;
}

}  // namespace mars
