#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mars/backend.hpp"
#include "mars/errors.hpp"

namespace mars {

// One canned reply. `match` is a substring that must appear in the rendered
// conversation for the entry to fire. Explicit token counts (both fields)
// mark the usage as endpoint-reported instead of locally estimated.
struct ScriptEntry {
    std::string match;
    std::string response_text;
    std::optional<long> prompt_tokens;
    std::optional<long> completion_tokens;
};

// Deterministic offline backend. In the default one-shot mode each entry can
// fire once: a request consumes the first unconsumed entry whose `match`
// occurs in the rendered conversation. In cycle mode entries are reusable
// and nothing is consumed, so unlimited requests can share a small script.
class ScriptedBackend : public ChatBackend {
public:
    explicit ScriptedBackend(std::vector<ScriptEntry> entries, bool cycle = false)
        : entries_(std::move(entries)), consumed_(entries_.size(), false), cycle_(cycle) {}

    ChatResponse complete(const ChatRequest& request) override {
        std::string prompt = render_conversation(request);
        std::lock_guard<std::mutex> lock(mutex_);

        const ScriptEntry* hit = nullptr;
        bool any_available = false;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (!cycle_ && consumed_[i]) continue;
            any_available = true;
            if (prompt.find(entries_[i].match) != std::string::npos) {
                hit = &entries_[i];
                if (!cycle_) consumed_[i] = true;
                break;
            }
        }
        if (!hit) {
            if (!any_available) throw ScriptExhausted("script has no replies left");
            throw MatchFailure("no scripted reply matches the prompt beginning: \"" +
                               prompt.substr(0, 120) + "\"");
        }

        ChatResponse response;
        response.text = hit->response_text;
        response.usage.prompt_tokens =
            hit->prompt_tokens ? *hit->prompt_tokens : estimate_prompt_tokens(request);
        response.usage.completion_tokens = hit->completion_tokens
                                               ? *hit->completion_tokens
                                               : estimate_tokens(hit->response_text);
        response.usage.source = (hit->prompt_tokens && hit->completion_tokens)
                                    ? Usage::Source::reported
                                    : Usage::Source::estimated;
        response.latency_ms = 0;
        return response;
    }

    std::size_t remaining() const {
        std::lock_guard<std::mutex> lock(mutex_);
        if (cycle_) return entries_.size();
        std::size_t n = 0;
        for (bool used : consumed_)
            if (!used) ++n;
        return n;
    }

private:
    std::vector<ScriptEntry> entries_;
    std::vector<bool> consumed_;
    bool cycle_ = false;
    mutable std::mutex mutex_;
};

}  // namespace mars
