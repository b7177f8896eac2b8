#pragma once

#include <chrono>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mars/backend.hpp"
#include "mars/chat.hpp"
#include "mars/errors.hpp"
#include "mars/parsing.hpp"
#include "mars/prompts.hpp"
#include "mars/task.hpp"
#include "mars/transcript.hpp"

namespace mars {

namespace strategy_names {
inline constexpr const char* cot = "cot";
inline constexpr const char* self_reflection = "self_reflection";
inline constexpr const char* self_consistency = "self_consistency";
inline constexpr const char* mad = "mad";
inline constexpr const char* mars = "mars";
inline constexpr const char* mars_p = "mars_p";
}  // namespace strategy_names

struct StrategyConfig {
    std::string name = strategy_names::mars;
    int samples_k = 3;      // self_consistency
    int debaters_n = 3;     // mad
    int debate_rounds_r = 1;
    int reviewers_m = 2;    // mars / mars_p
    // Keyed by pipeline role: an exact slot ("reviewer(1)"), its base role
    // ("reviewer"), or "default" — looked up in that order.
    std::map<std::string, ModelEndpointConfig> role_endpoints;
    // mars_p reviewer personas, one per reviewer slot. Entries may be the
    // built-in names "conservative"/"aggressive" or literal persona text.
    std::vector<std::string> personas;
    // Run reviewer/debater/sampler fan-outs one at a time instead of
    // concurrently. Needed when a script distinguishes entries only by
    // consumption order.
    bool sequential_fanout = false;
};

// Raised when a model call inside a strategy fails; carries everything that
// completed before the failure so the harness can still account for it.
struct StrategyRunError : Error {
    StrategyRunError(const std::string& message, StrategyResult partial_result)
        : Error(message), partial(std::move(partial_result)) {}
    StrategyResult partial;
};

inline const ModelEndpointConfig& resolve_endpoint(const StrategyConfig& config,
                                                   const std::string& slot,
                                                   const std::string& base_role) {
    if (auto it = config.role_endpoints.find(slot); it != config.role_endpoints.end()) {
        return it->second;
    }
    if (auto it = config.role_endpoints.find(base_role); it != config.role_endpoints.end()) {
        return it->second;
    }
    if (auto it = config.role_endpoints.find("default"); it != config.role_endpoints.end()) {
        return it->second;
    }
    throw ConfigError("no endpoint configured for role \"" + slot + "\"");
}

// Majority vote over extracted answers. Unanswered votes are discarded;
// votes group under the usual answer equivalence (so 5 and 5.000001 pool);
// ties break toward the answer that appeared first.
inline std::optional<CanonicalAnswer> majority_vote(
    const std::vector<std::optional<CanonicalAnswer>>& votes) {
    std::vector<std::pair<CanonicalAnswer, int>> counts;
    for (const auto& vote : votes) {
        if (!vote) continue;
        bool found = false;
        for (auto& [answer, n] : counts) {
            if (answers_equal(answer, *vote)) {
                ++n;
                found = true;
                break;
            }
        }
        if (!found) counts.emplace_back(*vote, 1);
    }
    const CanonicalAnswer* best = nullptr;
    int best_count = 0;
    for (const auto& [answer, n] : counts) {
        if (n > best_count) {
            best = &answer;
            best_count = n;
        }
    }
    if (!best) return std::nullopt;
    return *best;
}

namespace detail {

struct CallPlan {
    std::string slot;       // e.g. "reviewer(1)"
    std::string base_role;  // e.g. "reviewer"
    std::vector<ChatMessage> messages;
};

struct CallOutcome {
    ChatResponse response;
    std::exception_ptr error;
};

class StrategyRun {
public:
    StrategyRun(ChatBackend& backend, const StrategyConfig& config, const TaskInstance& task)
        : backend_(backend), config_(config), task_(task) {
        result_.task_id = task.id;
        result_.strategy_name = config.name;
        started_ = std::chrono::steady_clock::now();
    }

    const TaskInstance& task() const { return task_; }
    const StrategyConfig& config() const { return config_; }

    // Single call; failure throws with the transcript so far attached.
    std::string call(const std::string& slot, const std::string& base_role,
                     std::vector<ChatMessage> messages) {
        CallPlan plan{slot, base_role, std::move(messages)};
        auto outcomes = dispatch({plan});
        record(plan, outcomes[0]);
        return outcomes[0].response.text;
    }

    // Parallel fan-out; records land in slot order regardless of timing.
    std::vector<std::string> call_fanout(const std::vector<CallPlan>& plans) {
        auto outcomes = dispatch(plans);
        std::vector<std::string> texts;
        texts.reserve(plans.size());
        for (std::size_t i = 0; i < plans.size(); ++i) {
            record(plans[i], outcomes[i]);
            texts.push_back(outcomes[i].response.text);
        }
        return texts;
    }

    void note_flags(const std::string& slot, const std::vector<std::string>& flags) {
        for (const auto& flag : flags) result_.parse_flags.push_back(slot + ":" + flag);
    }

    StrategyResult finish(std::optional<CanonicalAnswer> final_answer,
                          std::size_t expected_calls) {
        if (result_.transcript.size() != expected_calls) {
            throw Error("call-count invariant violated for " + config_.name + ": made " +
                        std::to_string(result_.transcript.size()) + " calls, expected " +
                        std::to_string(expected_calls));
        }
        result_.final_answer = std::move(final_answer);
        auto elapsed = std::chrono::steady_clock::now() - started_;
        result_.wall_time_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        return std::move(result_);
    }

private:
    std::vector<CallOutcome> dispatch(const std::vector<CallPlan>& plans) {
        std::vector<CallOutcome> outcomes(plans.size());
        auto run_one = [&](std::size_t i) {
            try {
                ChatRequest request{resolve_endpoint(config_, plans[i].slot, plans[i].base_role),
                                    plans[i].messages};
                outcomes[i].response = backend_.complete(request);
            } catch (...) {
                outcomes[i].error = std::current_exception();
            }
        };
        if (config_.sequential_fanout || plans.size() == 1) {
            for (std::size_t i = 0; i < plans.size(); ++i) {
                run_one(i);
                if (outcomes[i].error) break;  // later slots stay unattempted
            }
        } else {
            std::vector<std::jthread> workers;
            workers.reserve(plans.size());
            for (std::size_t i = 0; i < plans.size(); ++i) {
                workers.emplace_back([&, i] { run_one(i); });
            }
        }
        return outcomes;
    }

    void record(const CallPlan& plan, const CallOutcome& outcome) {
        if (outcome.error) {
            std::string reason;
            try {
                std::rethrow_exception(outcome.error);
            } catch (const std::exception& e) {
                reason = e.what();
            }
            throw StrategyRunError("call for " + plan.slot + " failed: " + reason,
                                   snapshot());
        }
        ChatRequest request{resolve_endpoint(config_, plan.slot, plan.base_role),
                            plan.messages};
        CallRecord rec;
        rec.role = plan.slot;
        rec.model_id = request.endpoint.model_id;
        rec.prompt_tokens = outcome.response.usage.prompt_tokens;
        rec.completion_tokens = outcome.response.usage.completion_tokens;
        rec.latency_ms = outcome.response.latency_ms;
        rec.prompt_text = render_conversation(request);
        rec.response_text = outcome.response.text;
        result_.total_prompt_tokens += rec.prompt_tokens;
        result_.total_completion_tokens += rec.completion_tokens;
        result_.transcript.push_back(std::move(rec));
    }

    StrategyResult snapshot() {
        StrategyResult partial = result_;
        auto elapsed = std::chrono::steady_clock::now() - started_;
        partial.wall_time_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        return partial;
    }

    ChatBackend& backend_;
    const StrategyConfig& config_;
    const TaskInstance& task_;
    StrategyResult result_;
    std::chrono::steady_clock::time_point started_;
};

inline std::string resolve_persona(const std::string& name_or_text) {
    if (name_or_text == "conservative") return std::string(prompt_texts::persona_conservative);
    if (name_or_text == "aggressive") return std::string(prompt_texts::persona_aggressive);
    return name_or_text;
}

inline std::vector<std::string> reviewer_personas(const StrategyConfig& config) {
    if (config.personas.size() != static_cast<std::size_t>(config.reviewers_m)) {
        throw ConfigError("personas must assign exactly one persona per reviewer (" +
                          std::to_string(config.personas.size()) + " given for " +
                          std::to_string(config.reviewers_m) + " reviewers)");
    }
    std::vector<std::string> out;
    for (const auto& p : config.personas) out.push_back(resolve_persona(p));
    return out;
}

}  // namespace detail

inline StrategyResult run_cot(ChatBackend& backend, const StrategyConfig& config,
                              const TaskInstance& task) {
    detail::StrategyRun run(backend, config, task);
    std::string raw = run.call(author_role(), "author",
                               {{MessageRole::user, render_author_prompt(task)}});
    AuthorResponse parsed = parse_author_response(raw, task.kind);
    run.note_flags(author_role(), parsed.flags);
    return run.finish(parsed.answer, 1);
}

inline StrategyResult run_self_reflection(ChatBackend& backend, const StrategyConfig& config,
                                          const TaskInstance& task) {
    detail::StrategyRun run(backend, config, task);
    std::string draft = run.call(author_role(), "author",
                                 {{MessageRole::user, render_author_prompt(task)}});
    AuthorResponse draft_parsed = parse_author_response(draft, task.kind);
    run.note_flags(author_role(), draft_parsed.flags);

    std::string revised =
        run.call(reflector_role(), "reflector",
                 {{MessageRole::user, render_reflection_prompt(task, draft)}});
    AuthorResponse revised_parsed = parse_author_response(revised, task.kind);
    run.note_flags(reflector_role(), revised_parsed.flags);
    return run.finish(revised_parsed.answer, 2);
}

inline StrategyResult run_self_consistency(ChatBackend& backend, const StrategyConfig& config,
                                           const TaskInstance& task) {
    if (config.samples_k < 1) throw ConfigError("samples_k must be at least 1");
    detail::StrategyRun run(backend, config, task);

    std::vector<detail::CallPlan> plans;
    std::string prompt = render_author_prompt(task);
    for (int i = 0; i < config.samples_k; ++i) {
        plans.push_back({sampler_role(i), "sampler", {{MessageRole::user, prompt}}});
    }
    auto texts = run.call_fanout(plans);

    std::vector<std::optional<CanonicalAnswer>> votes;
    for (int i = 0; i < config.samples_k; ++i) {
        AuthorResponse parsed = parse_author_response(texts[i], task.kind);
        run.note_flags(sampler_role(i), parsed.flags);
        votes.push_back(parsed.answer);
    }
    return run.finish(majority_vote(votes), static_cast<std::size_t>(config.samples_k));
}

// Multi-agent debate: every agent answers independently, then in each round
// sees the other agents' previous responses (quoted into the round prompt on
// top of its own conversation history) and answers again. The last round is
// settled by majority vote.
inline StrategyResult run_mad(ChatBackend& backend, const StrategyConfig& config,
                              const TaskInstance& task) {
    if (config.debaters_n < 2) throw ConfigError("debaters_n must be at least 2");
    if (config.debate_rounds_r < 0) throw ConfigError("debate_rounds_r must not be negative");
    const std::size_t n = static_cast<std::size_t>(config.debaters_n);
    detail::StrategyRun run(backend, config, task);

    std::vector<std::vector<ChatMessage>> histories(n);
    std::string initial = render_debate_initial_prompt(task);

    std::vector<detail::CallPlan> plans;
    for (std::size_t i = 0; i < n; ++i) {
        histories[i].push_back({MessageRole::user, initial});
        plans.push_back({debater_role(i), "debater", histories[i]});
    }
    std::vector<std::string> last_responses = run.call_fanout(plans);
    for (std::size_t i = 0; i < n; ++i) {
        histories[i].push_back({MessageRole::assistant, last_responses[i]});
    }

    for (int round = 0; round < config.debate_rounds_r; ++round) {
        plans.clear();
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::string> peers;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) peers.push_back(last_responses[j]);
            }
            histories[i].push_back(
                {MessageRole::user, render_debate_round_prompt(task.kind, peers)});
            plans.push_back({debater_role(i), "debater", histories[i]});
        }
        last_responses = run.call_fanout(plans);
        for (std::size_t i = 0; i < n; ++i) {
            histories[i].push_back({MessageRole::assistant, last_responses[i]});
        }
    }

    std::vector<std::optional<CanonicalAnswer>> votes;
    for (std::size_t i = 0; i < n; ++i) {
        AuthorResponse parsed = parse_author_response(last_responses[i], task.kind);
        run.note_flags(debater_role(i), parsed.flags);
        votes.push_back(parsed.answer);
    }
    return run.finish(majority_vote(votes),
                      n * static_cast<std::size_t>(1 + config.debate_rounds_r));
}

// Propose/review/decide/update: one author drafts, independent reviewers
// critique the draft, a meta-reviewer weighs the critiques and either keeps
// the draft answer or sends the author one rebuttal round with its feedback.
inline StrategyResult run_mars(ChatBackend& backend, const StrategyConfig& config,
                               const TaskInstance& task, bool with_personas) {
    if (config.reviewers_m < 1) throw ConfigError("reviewers_m must be at least 1");
    const std::size_t m = static_cast<std::size_t>(config.reviewers_m);
    detail::StrategyRun run(backend, config, task);

    std::string author_prompt = render_author_prompt(task);
    std::string author_raw =
        run.call(author_role(), "author", {{MessageRole::user, author_prompt}});
    AuthorResponse author = parse_author_response(author_raw, task.kind);
    run.note_flags(author_role(), author.flags);

    std::vector<std::string> personas;
    if (with_personas) personas = detail::reviewer_personas(config);

    std::vector<detail::CallPlan> plans;
    for (std::size_t i = 0; i < m; ++i) {
        std::string prompt = render_reviewer_prompt(
            task, author_raw, with_personas ? std::string_view(personas[i]) : std::string_view{});
        plans.push_back({reviewer_role(i), "reviewer", {{MessageRole::user, prompt}}});
    }
    std::vector<std::string> review_raws = run.call_fanout(plans);
    for (std::size_t i = 0; i < m; ++i) {
        Review review = parse_review(review_raws[i], i, task.kind);
        run.note_flags(reviewer_role(i), review.flags);
    }

    std::string meta_raw =
        run.call(meta_reviewer_role(), "meta_reviewer",
                 {{MessageRole::user,
                   render_meta_reviewer_prompt(task, author_raw, review_raws)}});
    MetaReview meta = parse_meta_review(meta_raw, task.kind);
    run.note_flags(meta_reviewer_role(), meta.flags);

    if (meta.accept) {
        return run.finish(author.answer, m + 2);
    }

    // The rebuttal continues the author's own conversation, so the author
    // sees its original prompt and draft alongside the meta feedback.
    std::string rebuttal_raw =
        run.call(author_role(), "author",
                 {{MessageRole::user, author_prompt},
                  {MessageRole::assistant, author_raw},
                  {MessageRole::user, render_rebuttal_prompt(task.kind, meta_raw)}});
    AuthorResponse rebuttal = parse_author_response(rebuttal_raw, task.kind);
    run.note_flags(author_role(), rebuttal.flags);
    // An unreadable rebuttal keeps the draft answer: the rebuttal prompt
    // explicitly allows the author to insist on its initial answer.
    return run.finish(rebuttal.answer ? rebuttal.answer : author.answer, m + 3);
}

inline StrategyResult run_strategy(ChatBackend& backend, const StrategyConfig& config,
                                   const TaskInstance& task) {
    const std::string& name = config.name;
    if (name == strategy_names::cot) return run_cot(backend, config, task);
    if (name == strategy_names::self_reflection) {
        return run_self_reflection(backend, config, task);
    }
    if (name == strategy_names::self_consistency) {
        return run_self_consistency(backend, config, task);
    }
    if (name == strategy_names::mad) return run_mad(backend, config, task);
    if (name == strategy_names::mars) return run_mars(backend, config, task, false);
    if (name == strategy_names::mars_p) return run_mars(backend, config, task, true);
    throw ConfigError("unknown strategy \"" + name + "\"");
}

}  // namespace mars
