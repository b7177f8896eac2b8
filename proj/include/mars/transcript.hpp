#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mars/answer.hpp"
#include "mars/chat.hpp"

namespace mars {

// One model call, as recorded in a strategy transcript. `role` identifies
// the pipeline slot ("author", "reviewer(0)", ...), not the chat role.
struct CallRecord {
    std::string role;
    std::string model_id;
    long prompt_tokens = 0;
    long completion_tokens = 0;
    long latency_ms = 0;
    std::string prompt_text;
    std::string response_text;
};

inline std::string author_role() { return "author"; }
inline std::string reviewer_role(std::size_t index) {
    return "reviewer(" + std::to_string(index) + ")";
}
inline std::string meta_reviewer_role() { return "meta_reviewer"; }
inline std::string debater_role(std::size_t index) {
    return "debater(" + std::to_string(index) + ")";
}
inline std::string sampler_role(std::size_t index) {
    return "sampler(" + std::to_string(index) + ")";
}
inline std::string reflector_role() { return "reflector"; }

// Outcome of running one strategy on one task. An absent final answer means
// the pipeline completed but no answer could be extracted.
struct StrategyResult {
    std::string task_id;
    std::string strategy_name;
    std::optional<CanonicalAnswer> final_answer;
    std::vector<CallRecord> transcript;
    long total_prompt_tokens = 0;
    long total_completion_tokens = 0;
    long wall_time_ms = 0;
    std::vector<std::string> parse_flags;

    long total_tokens() const { return total_prompt_tokens + total_completion_tokens; }
};

}  // namespace mars
