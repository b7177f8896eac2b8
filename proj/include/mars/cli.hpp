#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mars/errors.hpp"
#include "mars/harness.hpp"
#include "mars/http_backend.hpp"
#include "mars/scripted_backend.hpp"
#include "mars/strategies.hpp"

namespace mars {

struct CliConfig {
    StrategyConfig strategy;
    std::string dataset_path;
    std::string dataset_format = "mc_jsonl";
    int concurrency = 1;
    std::string output_path;
    std::optional<int> limit;
    bool has_script = false;
    bool script_cycle = false;
    std::vector<ScriptEntry> script_entries;
};

namespace detail {

// Unknown keys are rejected outright: a typo like "reviwers_m" must fail the
// run, not silently fall back to a default.
inline void require_known_keys(const nlohmann::json& object,
                               const std::set<std::string>& allowed,
                               const std::string& context) {
    for (const auto& [key, value] : object.items()) {
        if (!allowed.count(key)) {
            throw ConfigError("unknown key \"" + key + "\" in " + context);
        }
    }
}

inline ModelEndpointConfig endpoint_from_json(const nlohmann::json& j,
                                              const std::string& context) {
    if (!j.is_object()) throw ConfigError(context + " must be an object");
    require_known_keys(j,
                       {"base_url", "model_id", "api_key_env", "temperature",
                        "max_output_tokens", "timeout_s", "max_retries",
                        "backoff_base_s", "backoff_factor"},
                       context);
    ModelEndpointConfig endpoint;
    endpoint.base_url = j.value("base_url", "");
    if (!j.contains("model_id") || !j["model_id"].is_string()) {
        throw ConfigError(context + " needs a \"model_id\" string");
    }
    endpoint.model_id = j["model_id"].get<std::string>();
    endpoint.api_key_env = j.value("api_key_env", "");
    if (j.contains("temperature")) endpoint.temperature = j["temperature"].get<double>();
    if (j.contains("max_output_tokens")) {
        endpoint.max_output_tokens = j["max_output_tokens"].get<int>();
    }
    endpoint.timeout_s = j.value("timeout_s", endpoint.timeout_s);
    endpoint.max_retries = j.value("max_retries", endpoint.max_retries);
    endpoint.backoff_base_s = j.value("backoff_base_s", endpoint.backoff_base_s);
    endpoint.backoff_factor = j.value("backoff_factor", endpoint.backoff_factor);
    return endpoint;
}

inline StrategyConfig strategy_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("\"strategy\" must be an object");
    require_known_keys(j,
                       {"name", "samples_k", "debaters_n", "debate_rounds_r",
                        "reviewers_m", "role_endpoints", "personas", "sequential_fanout"},
                       "\"strategy\"");
    StrategyConfig config;
    config.name = j.value("name", config.name);
    config.samples_k = j.value("samples_k", config.samples_k);
    config.debaters_n = j.value("debaters_n", config.debaters_n);
    config.debate_rounds_r = j.value("debate_rounds_r", config.debate_rounds_r);
    config.reviewers_m = j.value("reviewers_m", config.reviewers_m);
    config.sequential_fanout = j.value("sequential_fanout", config.sequential_fanout);
    if (j.contains("personas")) {
        if (!j["personas"].is_array()) throw ConfigError("\"personas\" must be an array");
        for (const auto& p : j["personas"]) {
            if (!p.is_string()) throw ConfigError("persona entries must be strings");
            config.personas.push_back(p.get<std::string>());
        }
    }
    if (j.contains("role_endpoints")) {
        if (!j["role_endpoints"].is_object()) {
            throw ConfigError("\"role_endpoints\" must be an object");
        }
        for (const auto& [role, value] : j["role_endpoints"].items()) {
            config.role_endpoints[role] =
                endpoint_from_json(value, "endpoint for role \"" + role + "\"");
        }
    }
    return config;
}

inline std::vector<ScriptEntry> script_from_json(const nlohmann::json& j) {
    if (!j.contains("entries") || !j["entries"].is_array()) {
        throw ConfigError("\"scripted_backend\" needs an \"entries\" array");
    }
    std::vector<ScriptEntry> entries;
    for (const auto& e : j["entries"]) {
        if (!e.is_object()) throw ConfigError("script entries must be objects");
        require_known_keys(e, {"match", "response_text", "prompt_tokens", "completion_tokens"},
                           "script entry");
        ScriptEntry entry;
        entry.match = e.value("match", "");
        if (!e.contains("response_text") || !e["response_text"].is_string()) {
            throw ConfigError("script entry needs a \"response_text\" string");
        }
        entry.response_text = e["response_text"].get<std::string>();
        if (e.contains("prompt_tokens")) entry.prompt_tokens = e["prompt_tokens"].get<long>();
        if (e.contains("completion_tokens")) {
            entry.completion_tokens = e["completion_tokens"].get<long>();
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

}  // namespace detail

inline CliConfig load_cli_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config " + path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        throw ConfigError("config " + path + " is not a JSON object");
    }
    detail::require_known_keys(j,
                               {"strategy", "dataset_path", "dataset_format", "concurrency",
                                "output_path", "limit", "scripted_backend"},
                               "config");
    CliConfig config;
    if (j.contains("strategy")) config.strategy = detail::strategy_from_json(j["strategy"]);
    if (!j.contains("dataset_path") || !j["dataset_path"].is_string()) {
        throw ConfigError("config needs a \"dataset_path\" string");
    }
    std::filesystem::path dataset = j["dataset_path"].get<std::string>();
    if (dataset.is_relative()) {
        dataset = std::filesystem::path(path).parent_path() / dataset;
    }
    config.dataset_path = dataset.string();
    config.dataset_format = j.value("dataset_format", config.dataset_format);
    config.concurrency = j.value("concurrency", config.concurrency);
    config.output_path = j.value("output_path", "");
    if (j.contains("limit")) config.limit = j["limit"].get<int>();
    if (j.contains("scripted_backend")) {
        if (!j["scripted_backend"].is_object()) {
            throw ConfigError("\"scripted_backend\" must be an object");
        }
        detail::require_known_keys(j["scripted_backend"], {"cycle", "entries"},
                                   "\"scripted_backend\"");
        config.has_script = true;
        config.script_cycle = j["scripted_backend"].value("cycle", false);
        config.script_entries = detail::script_from_json(j["scripted_backend"]);
    }
    return config;
}

using BackendFactory = std::function<std::unique_ptr<ChatBackend>()>;

namespace detail {

inline std::unique_ptr<ChatBackend> build_backend(const CliConfig& config,
                                                  const BackendFactory& factory) {
    if (config.has_script) {
        return std::make_unique<ScriptedBackend>(config.script_entries, config.script_cycle);
    }
    if (factory) return factory();
    return std::make_unique<RemoteBackend>();
}

inline void print_report(std::ostream& out, const RunReport& report) {
    out << "strategy            " << report.strategy_name << '\n';
    out << "tasks               " << report.n_tasks << '\n';
    out << "correct             " << report.total_correct << '\n';
    out << "score (%)           " << format_fixed(report.score_pct) << '\n';
    out << "avg tokens/query    " << format_fixed(report.avg_tokens_per_query) << '\n';
    out << "avg time (s)/query  " << format_fixed(report.avg_time_s_per_query) << '\n';
    out << "parse degraded (%)  " << format_fixed(report.parse_degradation_pct) << '\n';
    out << "total tokens        " << report.total_tokens << '\n';
    if (!report.model_summary.empty()) {
        out << "models              ";
        bool first = true;
        for (const auto& [role, model] : report.model_summary) {
            if (!first) out << ' ';
            out << role << '=' << model;
            first = false;
        }
        out << '\n';
    }
    if (!report.seed_note.empty()) out << "note                " << report.seed_note << '\n';
}

inline std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct RunOptions {
    std::string config_path;
    bool offline = false;
    std::string output_override;
    std::optional<int> limit_override;
    std::optional<int> concurrency_override;
    std::string note;
};

inline int do_run(const RunOptions& options, std::ostream& out,
                  const BackendFactory& factory) {
    CliConfig config = load_cli_config(options.config_path);
    if (options.offline && !config.has_script) {
        throw ConfigError("--offline requires a \"scripted_backend\" section in the config");
    }
    if (!options.output_override.empty()) config.output_path = options.output_override;
    if (options.limit_override) config.limit = options.limit_override;
    if (options.concurrency_override) config.concurrency = *options.concurrency_override;

    auto tasks = load_dataset(config.dataset_path, config.dataset_format);
    if (config.limit && static_cast<std::size_t>(*config.limit) < tasks.size()) {
        if (*config.limit < 1) throw ConfigError("limit must be at least 1");
        tasks.resize(static_cast<std::size_t>(*config.limit));
    }

    auto backend = build_backend(config, factory);
    auto [report, records] =
        evaluate(*backend, config.strategy, tasks, config.concurrency, options.note);
    print_report(out, report);
    if (!config.output_path.empty()) {
        write_records(config.output_path, report, records);
        out << "records             " << config.output_path << '\n';
    }
    return 0;
}

struct SweepOptions {
    std::string config_path;
    std::string agents_list;
    std::string strategy = strategy_names::mars;
    std::string output_path;
};

// Cost-scaling sweep: rerun the configured setup at several agent counts.
// An agent count g means g-1 reviewers plus the meta-reviewer for the
// review pipelines, and g debaters for debate.
inline int do_sweep(const SweepOptions& options, std::ostream& out,
                    const BackendFactory& factory) {
    if (options.strategy != strategy_names::mars &&
        options.strategy != strategy_names::mad) {
        throw ConfigError("sweep supports mars and mad; got \"" + options.strategy + "\"");
    }
    std::set<int> agent_counts;
    for (const auto& item : split_list(options.agents_list)) {
        int g = 0;
        try {
            g = std::stoi(item);
        } catch (const std::exception&) {
            throw ConfigError("bad agent count \"" + item + "\"");
        }
        if (g < 2) throw ConfigError("agent counts must be at least 2");
        agent_counts.insert(g);
    }
    if (agent_counts.empty()) throw ConfigError("no agent counts given");

    CliConfig config = load_cli_config(options.config_path);
    auto tasks = load_dataset(config.dataset_path, config.dataset_format);
    if (config.limit && static_cast<std::size_t>(*config.limit) < tasks.size()) {
        tasks.resize(static_cast<std::size_t>(*config.limit));
    }

    std::string series = "agents,avg_tokens,avg_time_s\n";
    for (int g : agent_counts) {
        StrategyConfig strategy = config.strategy;
        strategy.name = options.strategy;
        if (options.strategy == strategy_names::mad) {
            strategy.debaters_n = g;
        } else {
            strategy.reviewers_m = g - 1;
        }
        auto backend = build_backend(config, factory);
        auto [report, records] = evaluate(*backend, strategy, tasks, config.concurrency);
        series += std::to_string(g) + "," + format_fixed(report.avg_tokens_per_query) +
                  "," + format_fixed(report.avg_time_s_per_query) + "\n";
    }
    out << series;
    if (!options.output_path.empty()) {
        std::ofstream file(options.output_path, std::ios::trunc);
        if (!file) throw IoError("cannot write sweep output to " + options.output_path);
        file << series;
    }
    return 0;
}

inline int do_report(const std::vector<std::string>& paths, std::ostream& out) {
    std::vector<RunReport> reports;
    for (const auto& path : paths) {
        reports.push_back(read_records(path).first);
    }
    out << compare_runs(reports);
    return 0;
}

inline int do_validate(const std::string& dataset_path, const std::string& format,
                       std::ostream& out) {
    auto tasks = load_dataset(dataset_path, format);
    bool mc = tasks.front().kind == TaskKind::multiple_choice;
    out << "tasks: " << tasks.size() << '\n';
    out << "kind: " << (mc ? "multiple_choice" : "numeric") << '\n';
    return 0;
}

}  // namespace detail

// Entry point shared by the binary and the tests. Returns the process exit
// code: 0 success, 1 unexpected runtime failure, 2 usage/config/data error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err, const BackendFactory& factory = nullptr) {
    CLI::App app{"Review-pipeline benchmark runner"};
    app.require_subcommand(1);

    detail::RunOptions run_options;
    auto* run_cmd = app.add_subcommand("run", "Run one strategy over a dataset");
    run_cmd->add_option("--config", run_options.config_path, "JSON config file")
        ->required();
    run_cmd->add_flag("--offline", run_options.offline,
                      "Fail unless the config provides a scripted backend");
    run_cmd->add_option("--output", run_options.output_override,
                        "Write per-task records (JSONL) here");
    int limit = 0;
    auto* limit_opt =
        run_cmd->add_option("--limit", limit, "Evaluate only the first N tasks");
    int concurrency = 0;
    auto* concurrency_opt = run_cmd->add_option("--concurrency", concurrency,
                                                "Parallel tasks (overrides the config)");
    run_cmd->add_option("--note", run_options.note, "Free-form note stored in the report");

    detail::SweepOptions sweep_options;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Measure per-query cost at several agent counts");
    sweep_cmd->add_option("--config", sweep_options.config_path, "JSON config file")
        ->required();
    sweep_cmd->add_option("--agents", sweep_options.agents_list,
                          "Comma-separated agent counts, e.g. 2,3,4")
        ->required();
    sweep_cmd->add_option("--strategy", sweep_options.strategy,
                          "One of mars, mad");
    sweep_cmd->add_option("--output", sweep_options.output_path,
                          "Also write the series here");

    std::vector<std::string> report_paths;
    auto* report_cmd =
        app.add_subcommand("report", "Summarize one or more record files side by side");
    report_cmd->add_option("--runs", report_paths, "Record files (JSONL)")->required();

    std::string validate_dataset;
    std::string validate_format = "mc_jsonl";
    auto* validate_cmd =
        app.add_subcommand("validate", "Parse a dataset fully and report what it holds");
    validate_cmd->add_option("--dataset", validate_dataset, "Dataset file (JSONL)")
        ->required();
    validate_cmd->add_option("--format", validate_format, "mc_jsonl or gsm_jsonl");

    // CLI11 consumes argc/argv; argv[0] is the program name.
    std::vector<const char*> argv;
    argv.push_back("mars");
    for (const auto& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream sink;
        int code = app.exit(e, out, sink);
        if (code != 0) {
            err << sink.str();
            return 2;
        }
        return 0;  // --help and friends
    }

    // 2 = configuration/usage mistakes; 1 = runtime/data failures.
    try {
        if (limit_opt->count() > 0) run_options.limit_override = limit;
        if (concurrency_opt->count() > 0) run_options.concurrency_override = concurrency;
        if (run_cmd->parsed()) return detail::do_run(run_options, out, factory);
        if (sweep_cmd->parsed()) return detail::do_sweep(sweep_options, out, factory);
        if (report_cmd->parsed()) return detail::do_report(report_paths, out);
        if (validate_cmd->parsed()) {
            return detail::do_validate(validate_dataset, validate_format, out);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no command selected\n";
    return 2;
}

}  // namespace mars
