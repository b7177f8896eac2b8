#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mars/errors.hpp"
#include "mars/prompt_texts.hpp"
#include "mars/task.hpp"

namespace mars {

namespace detail {

inline std::string replace_placeholder(std::string text, std::string_view key,
                                       std::string_view value) {
    std::size_t pos = text.find(key);
    if (pos == std::string::npos) {
        throw Error("template is missing placeholder " + std::string(key));
    }
    while (pos != std::string::npos) {
        text.replace(pos, key.size(), value);
        pos = text.find(key, pos + value.size());
    }
    return text;
}

// The templates are written for multiple choice; numeric tasks swap the two
// answer-format lines. Applied to the raw template before any user content
// is substituted in, so task text can never trigger a rewrite.
inline std::string adapt_for_kind(std::string_view tpl, TaskKind kind) {
    std::string text(tpl);
    if (kind == TaskKind::multiple_choice) return text;
    std::string out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string line = text.substr(
            start, end == std::string::npos ? std::string::npos : end - start);
        if (line.rfind("Answer: [the final", 0) == 0) {
            line = "Answer: [the final numerical answer]";
        } else if (line.find("final answer must be a single capital letter") !=
                   std::string::npos) {
            line = "Your final answer must be a single numerical number at the end of the response.";
        }
        out += line;
        if (end == std::string::npos) break;
        out += '\n';
        start = end + 1;
    }
    return out;
}

}  // namespace detail

// Question text plus, for multiple choice, one "X) choice" line per option.
inline std::string compose_user_query(const TaskInstance& task) {
    std::string out = task.question;
    for (std::size_t i = 0; i < task.choices.size(); ++i) {
        out += '\n';
        out += task.label_for(i);
        out += ") ";
        out += task.choices[i];
    }
    return out;
}

inline std::string render_author_prompt(const TaskInstance& task) {
    std::string tpl = detail::adapt_for_kind(prompt_texts::author, task.kind);
    return detail::replace_placeholder(std::move(tpl), "{user_query}",
                                       compose_user_query(task));
}

// Reviewers see the raw author response; an optional persona block is
// appended after a blank line.
inline std::string render_reviewer_prompt(const TaskInstance& task,
                                          const std::string& author_response,
                                          std::string_view persona = {}) {
    std::string text = detail::replace_placeholder(std::string(prompt_texts::reviewer),
                                                   "{user_query}", compose_user_query(task));
    text = detail::replace_placeholder(std::move(text), "{author_response}", author_response);
    if (!persona.empty()) {
        text += "\n\n";
        text += persona;
    }
    return text;
}

// Raw reviewer outputs concatenated as numbered blocks, in reviewer order.
inline std::string combine_reviews(const std::vector<std::string>& reviews) {
    std::string out;
    for (std::size_t i = 0; i < reviews.size(); ++i) {
        if (!out.empty()) out += "\n\n";
        out += "Reviewer " + std::to_string(i + 1) + ":\n" + reviews[i];
    }
    return out;
}

inline std::string render_meta_reviewer_prompt(const TaskInstance& task,
                                               const std::string& author_response,
                                               const std::vector<std::string>& reviews) {
    std::string text = detail::replace_placeholder(std::string(prompt_texts::meta_reviewer),
                                                   "{user_query}", compose_user_query(task));
    text = detail::replace_placeholder(std::move(text), "{author_response}", author_response);
    return detail::replace_placeholder(std::move(text), "{combined_reviews}",
                                       combine_reviews(reviews));
}

inline std::string render_rebuttal_prompt(TaskKind kind, const std::string& meta_response) {
    std::string tpl = detail::adapt_for_kind(prompt_texts::rebuttal, kind);
    return detail::replace_placeholder(std::move(tpl), "{meta_decision}", meta_response);
}

inline std::string render_reflection_prompt(const TaskInstance& task,
                                            const std::string& response) {
    std::string tpl = detail::adapt_for_kind(prompt_texts::reflection, task.kind);
    std::string text = detail::replace_placeholder(std::move(tpl), "{user_query}",
                                                   compose_user_query(task));
    return detail::replace_placeholder(std::move(text), "{response}", response);
}

inline std::string render_debate_initial_prompt(const TaskInstance& task) {
    std::string tpl = detail::adapt_for_kind(prompt_texts::debate_initial, task.kind);
    return detail::replace_placeholder(std::move(tpl), "{user_query}",
                                       compose_user_query(task));
}

// Each peer's previous response is quoted on its own line; the receiving
// agent's own response is excluded by the caller.
inline std::string render_debate_round_prompt(TaskKind kind,
                                              const std::vector<std::string>& peer_solutions) {
    std::string peers;
    for (const auto& solution : peer_solutions) {
        if (!peers.empty()) peers += '\n';
        peers += "One agent solution: ```" + solution + "```";
    }
    std::string tpl = detail::adapt_for_kind(prompt_texts::debate_round, kind);
    return detail::replace_placeholder(std::move(tpl), "{peer_solutions}", peers);
}

}  // namespace mars
