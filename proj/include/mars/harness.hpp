#pragma once

#include <atomic>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mars/errors.hpp"
#include "mars/strategies.hpp"
#include "mars/task.hpp"
#include "mars/transcript.hpp"

namespace mars {

inline constexpr int records_schema_version = 1;

// ---- datasets --------------------------------------------------------------

// "mc_jsonl": {"id", "question", "choices": [...], "answer": "C"}
// "gsm_jsonl": {"id"?, "question", "answer": "...rationale... #### 17"}
inline std::vector<TaskInstance> load_dataset(const std::string& path,
                                              const std::string& format) {
    bool mc = format == "mc_jsonl";
    if (!mc && format != "gsm_jsonl") {
        throw ConfigError("unknown dataset format \"" + format + "\"");
    }
    std::ifstream in(path);
    if (!in) throw IoError("cannot open dataset " + path);

    std::vector<TaskInstance> tasks;
    std::set<std::string> seen_ids;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.is_object()) {
            throw MalformedRecord(line_number, "not a JSON object");
        }
        TaskInstance task;
        try {
            task.id = record.value("id", std::to_string(line_number - 1));
            if (!record.contains("question") || !record["question"].is_string()) {
                throw Error("missing \"question\" string");
            }
            task.question = record["question"].get<std::string>();
            if (!record.contains("answer") || !record["answer"].is_string()) {
                throw Error("missing \"answer\" string");
            }
            std::string answer_text = record["answer"].get<std::string>();

            if (mc) {
                task.kind = TaskKind::multiple_choice;
                if (!record.contains("choices") || !record["choices"].is_array()) {
                    throw Error("missing \"choices\" array");
                }
                if (record["choices"].size() != 4) {
                    throw Error("multiple-choice records take exactly 4 choices, got " +
                                std::to_string(record["choices"].size()));
                }
                for (const auto& choice : record["choices"]) {
                    if (!choice.is_string()) throw Error("choices must be strings");
                    task.choices.push_back(choice.get<std::string>());
                }
                auto gold = normalize_answer(answer_text, TaskKind::multiple_choice);
                if (!gold) throw Error("answer \"" + answer_text + "\" has no choice label");
                task.gold = *gold;
            } else {
                task.kind = TaskKind::numeric;
                // GSM-style rationales end with "#### <value>".
                std::size_t sep = answer_text.rfind("####");
                std::string fragment =
                    sep == std::string::npos ? answer_text : answer_text.substr(sep + 4);
                auto gold = normalize_answer(fragment, TaskKind::numeric);
                if (!gold) throw Error("answer \"" + answer_text + "\" has no number");
                task.gold = *gold;
            }
            task.validate();
        } catch (const std::exception& e) {
            throw MalformedRecord(line_number, e.what());
        }
        if (!seen_ids.insert(task.id).second) {
            throw DuplicateId("duplicate task id \"" + task.id + "\" at line " +
                              std::to_string(line_number));
        }
        tasks.push_back(std::move(task));
    }
    if (tasks.empty()) throw DatasetEmpty("dataset " + path + " holds no tasks");
    return tasks;
}

// ---- run records -----------------------------------------------------------

struct RunRecord {
    std::string task_id;
    std::string strategy_name;
    std::optional<CanonicalAnswer> final_answer;
    CanonicalAnswer gold = CanonicalAnswer::letter('A');
    bool correct = false;
    long prompt_tokens = 0;
    long completion_tokens = 0;
    long wall_time_ms = 0;
    std::vector<std::string> parse_flags;
    std::string error;  // nonempty when the strategy aborted
    std::vector<CallRecord> transcript;

    long total_tokens() const { return prompt_tokens + completion_tokens; }
};

struct RunReport {
    std::string strategy_name;
    std::map<std::string, std::string> model_summary;  // base role -> model id
    std::size_t n_tasks = 0;
    std::size_t total_correct = 0;
    double score_pct = 0.0;
    double avg_tokens_per_query = 0.0;
    double avg_time_s_per_query = 0.0;
    double parse_degradation_pct = 0.0;
    long total_tokens = 0;
    std::string seed_note;
};

namespace detail {

inline nlohmann::json answer_to_json(const std::optional<CanonicalAnswer>& answer) {
    if (!answer) return {{"type", "unanswered"}};
    if (answer->is_letter()) {
        return {{"type", "letter"}, {"value", std::string(1, answer->letter_value())}};
    }
    return {{"type", "number"}, {"value", answer->number_value().to_string()}};
}

inline std::optional<CanonicalAnswer> answer_from_json(const nlohmann::json& j) {
    std::string type = j.value("type", "unanswered");
    if (type == "unanswered") return std::nullopt;
    std::string value = j.value("value", "");
    auto answer = normalize_answer(
        value, type == "letter" ? TaskKind::multiple_choice : TaskKind::numeric);
    if (!answer) throw Error("unreadable stored answer \"" + value + "\"");
    return answer;
}

inline nlohmann::json record_to_json(const RunRecord& record) {
    nlohmann::json calls = nlohmann::json::array();
    for (const auto& call : record.transcript) {
        calls.push_back({{"role", call.role},
                         {"model_id", call.model_id},
                         {"prompt_tokens", call.prompt_tokens},
                         {"completion_tokens", call.completion_tokens},
                         {"latency_ms", call.latency_ms},
                         {"prompt_text", call.prompt_text},
                         {"response_text", call.response_text}});
    }
    return {{"task_id", record.task_id},
            {"strategy", record.strategy_name},
            {"final_answer", answer_to_json(record.final_answer)},
            {"gold", answer_to_json(record.gold)},
            {"correct", record.correct},
            {"prompt_tokens", record.prompt_tokens},
            {"completion_tokens", record.completion_tokens},
            {"wall_time_ms", record.wall_time_ms},
            {"parse_flags", record.parse_flags},
            {"error", record.error},
            {"transcript", calls}};
}

inline RunRecord record_from_json(const nlohmann::json& j) {
    RunRecord record;
    record.task_id = j.value("task_id", "");
    record.strategy_name = j.value("strategy", "");
    record.final_answer = answer_from_json(j.at("final_answer"));
    auto gold = answer_from_json(j.at("gold"));
    if (!gold) throw Error("record is missing its reference answer");
    record.gold = *gold;
    record.correct = j.value("correct", false);
    record.prompt_tokens = j.value("prompt_tokens", 0L);
    record.completion_tokens = j.value("completion_tokens", 0L);
    record.wall_time_ms = j.value("wall_time_ms", 0L);
    record.parse_flags = j.value("parse_flags", std::vector<std::string>{});
    record.error = j.value("error", "");
    for (const auto& call : j.value("transcript", nlohmann::json::array())) {
        CallRecord c;
        c.role = call.value("role", "");
        c.model_id = call.value("model_id", "");
        c.prompt_tokens = call.value("prompt_tokens", 0L);
        c.completion_tokens = call.value("completion_tokens", 0L);
        c.latency_ms = call.value("latency_ms", 0L);
        c.prompt_text = call.value("prompt_text", "");
        c.response_text = call.value("response_text", "");
        record.transcript.push_back(std::move(c));
    }
    return record;
}

inline nlohmann::json report_to_json(const RunReport& report) {
    return {{"strategy", report.strategy_name},
            {"models", report.model_summary},
            {"n_tasks", report.n_tasks},
            {"total_correct", report.total_correct},
            {"score_pct", report.score_pct},
            {"avg_tokens_per_query", report.avg_tokens_per_query},
            {"avg_time_s_per_query", report.avg_time_s_per_query},
            {"parse_degradation_pct", report.parse_degradation_pct},
            {"total_tokens", report.total_tokens},
            {"seed_note", report.seed_note}};
}

inline RunReport report_from_json(const nlohmann::json& j) {
    RunReport report;
    report.strategy_name = j.value("strategy", "");
    report.model_summary = j.value("models", std::map<std::string, std::string>{});
    report.n_tasks = j.value("n_tasks", std::size_t{0});
    report.total_correct = j.value("total_correct", std::size_t{0});
    report.score_pct = j.value("score_pct", 0.0);
    report.avg_tokens_per_query = j.value("avg_tokens_per_query", 0.0);
    report.avg_time_s_per_query = j.value("avg_time_s_per_query", 0.0);
    report.parse_degradation_pct = j.value("parse_degradation_pct", 0.0);
    report.total_tokens = j.value("total_tokens", 0L);
    report.seed_note = j.value("seed_note", "");
    return report;
}

inline std::string base_role(const std::string& slot) {
    std::size_t paren = slot.find('(');
    return paren == std::string::npos ? slot : slot.substr(0, paren);
}

}  // namespace detail

// ---- evaluation ------------------------------------------------------------

// Runs the strategy on every task with a bounded worker pool. A failing task
// is recorded (with whatever calls completed) and scored as incorrect; it
// never aborts the batch. Records keep dataset order.
inline std::pair<RunReport, std::vector<RunRecord>> evaluate(
    ChatBackend& backend, const StrategyConfig& config,
    const std::vector<TaskInstance>& tasks, int concurrency = 1,
    const std::string& seed_note = "") {
    if (tasks.empty()) throw DatasetEmpty("no tasks to evaluate");
    if (concurrency < 1) throw ConfigError("concurrency must be at least 1");

    std::vector<RunRecord> records(tasks.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const TaskInstance& task = tasks[i];
            RunRecord& record = records[i];
            record.task_id = task.id;
            record.strategy_name = config.name;
            record.gold = task.gold;
            StrategyResult result;
            try {
                result = run_strategy(backend, config, task);
            } catch (const StrategyRunError& e) {
                result = e.partial;
                record.error = e.what();
            } catch (const std::exception& e) {
                record.error = e.what();
            }
            record.final_answer = result.final_answer;
            record.prompt_tokens = result.total_prompt_tokens;
            record.completion_tokens = result.total_completion_tokens;
            record.wall_time_ms = result.wall_time_ms;
            record.parse_flags = result.parse_flags;
            record.transcript = std::move(result.transcript);
            record.correct = record.error.empty() && record.final_answer &&
                             answers_equal(*record.final_answer, task.gold);
        }
    };

    std::size_t pool = std::min<std::size_t>(static_cast<std::size_t>(concurrency),
                                             tasks.size());
    if (pool <= 1) {
        worker();
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(pool);
        for (std::size_t i = 0; i < pool; ++i) workers.emplace_back(worker);
    }

    RunReport report;
    report.strategy_name = config.name;
    report.n_tasks = tasks.size();
    report.seed_note = seed_note;
    long total_time_ms = 0;
    std::size_t flagged = 0;
    for (const auto& record : records) {
        if (record.correct) ++report.total_correct;
        report.total_tokens += record.total_tokens();
        total_time_ms += record.wall_time_ms;
        if (!record.parse_flags.empty()) ++flagged;
        for (const auto& call : record.transcript) {
            report.model_summary.emplace(detail::base_role(call.role), call.model_id);
        }
    }
    double n = static_cast<double>(tasks.size());
    report.score_pct = 100.0 * static_cast<double>(report.total_correct) / n;
    report.avg_tokens_per_query = static_cast<double>(report.total_tokens) / n;
    report.avg_time_s_per_query = static_cast<double>(total_time_ms) / 1000.0 / n;
    report.parse_degradation_pct = 100.0 * static_cast<double>(flagged) / n;
    return {report, records};
}

// ---- persistence -----------------------------------------------------------

// JSONL: a header line describing the run, then one line per task record.
inline void write_records(const std::string& path, const RunReport& report,
                          const std::vector<RunRecord>& records) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot write records to " + path);
    nlohmann::json header = {{"schema_version", records_schema_version},
                             {"kind", "mars-run-records"},
                             {"report", detail::report_to_json(report)}};
    out << header.dump() << '\n';
    for (const auto& record : records) out << detail::record_to_json(record).dump() << '\n';
    if (!out) throw IoError("failed while writing " + path);
}

inline std::pair<RunReport, std::vector<RunRecord>> read_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open records file " + path);
    std::string line;
    std::size_t line_number = 0;

    if (!std::getline(in, line)) throw MalformedRecord(1, "missing header line");
    ++line_number;
    nlohmann::json header = nlohmann::json::parse(line, nullptr, false);
    if (header.is_discarded() || !header.is_object()) {
        throw MalformedRecord(line_number, "header is not a JSON object");
    }
    int version = header.value("schema_version", -1);
    if (version != records_schema_version) {
        throw SchemaVersionMismatch("records schema version " + std::to_string(version) +
                                    " is not supported (expected " +
                                    std::to_string(records_schema_version) + ")");
    }
    RunReport report = detail::report_from_json(header.value("report", nlohmann::json::object()));

    std::vector<RunRecord> records;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            throw MalformedRecord(line_number, "not a JSON object");
        }
        try {
            records.push_back(detail::record_from_json(j));
        } catch (const std::exception& e) {
            throw MalformedRecord(line_number, e.what());
        }
    }
    return {report, std::move(records)};
}

// ---- reporting -------------------------------------------------------------

inline std::string format_fixed(double value) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << value;
    return out.str();
}

// Side-by-side summary of several runs: one row per method.
inline std::string compare_runs(const std::vector<RunReport>& reports) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"Method", "Score", "Tokens", "Time"});
    for (const auto& report : reports) {
        rows.push_back({report.strategy_name, format_fixed(report.score_pct),
                        format_fixed(report.avg_tokens_per_query),
                        format_fixed(report.avg_time_s_per_query)});
    }
    std::vector<std::size_t> widths(4, 0);
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < 4; ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < 4; ++c) {
            std::string cell = row[c];
            cell.resize(widths[c], ' ');
            if (c) out += "  ";
            out += cell;
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    }
    return out;
}

}  // namespace mars
