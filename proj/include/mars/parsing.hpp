#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mars/answer.hpp"

namespace mars {

// Parsed form of an author (or rebuttal/reflection/debater) response.
// `answer` empty means the text carried no extractable answer; the run is
// then scored as unanswered rather than aborted.
struct AuthorResponse {
    std::string thoughts;
    std::optional<CanonicalAnswer> answer;
    std::string raw;
    std::vector<std::string> flags;
};

struct Review {
    std::size_t reviewer_index = 0;
    bool accept = false;
    int confidence = 3;
    std::string justification;
    std::optional<CanonicalAnswer> recommended_answer;
    std::string raw;
    std::vector<std::string> flags;
};

struct MetaReview {
    bool accept = true;
    std::string justification;
    std::string suggestions;
    std::optional<CanonicalAnswer> recommended_answer;
    std::string raw;
    std::vector<std::string> flags;
};

namespace detail {

struct MarkerHit {
    std::size_t line_start = 0;
    std::size_t value_start = 0;  // first char after the colon and padding
    std::size_t line_end = 0;     // offset of '\n' or text size
    std::string keyword;
};

inline bool iequals_prefix(std::string_view text, std::string_view keyword) {
    if (text.size() < keyword.size()) return false;
    for (std::size_t i = 0; i < keyword.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(text[i])) !=
            std::tolower(static_cast<unsigned char>(keyword[i]))) {
            return false;
        }
    }
    return true;
}

// Field lines may arrive decorated ("**Decision:** wrong", "- Answer: 4").
// A marker is a known keyword at the start of a line (after decoration)
// followed by a colon.
inline std::vector<MarkerHit> scan_markers(std::string_view text) {
    static const std::string_view keywords[] = {
        "Decision",  "Confidence", "Justification", "Suggestions",
        "Answer",    "Thoughts",   "Reasons",       "Evaluation criteria",
    };
    std::vector<MarkerHit> hits;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string::npos) line_end = text.size();
        std::size_t i = line_start;
        while (i < line_end && (std::isspace(static_cast<unsigned char>(text[i])) ||
                                text[i] == '#' || text[i] == '*' || text[i] == '-' ||
                                text[i] == '>' || text[i] == '+')) {
            ++i;
        }
        for (std::string_view keyword : keywords) {
            if (!iequals_prefix(text.substr(i, line_end - i), keyword)) continue;
            std::size_t j = i + keyword.size();
            while (j < line_end && (text[j] == ' ' || text[j] == '*')) ++j;
            if (j >= line_end || text[j] != ':') continue;
            ++j;
            while (j < line_end && (text[j] == ' ' || text[j] == '*')) ++j;
            hits.push_back({line_start, j, line_end, std::string(keyword)});
            break;
        }
        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }
    return hits;
}

inline const MarkerHit* first_hit(const std::vector<MarkerHit>& hits, std::string_view kw) {
    for (const auto& h : hits)
        if (h.keyword == kw) return &h;
    return nullptr;
}

inline const MarkerHit* last_hit(const std::vector<MarkerHit>& hits, std::string_view kw) {
    const MarkerHit* found = nullptr;
    for (const auto& h : hits)
        if (h.keyword == kw) found = &h;
    return found;
}

inline std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// Field value: from after the marker to the start of the next marker line.
inline std::string value_to_next_marker(std::string_view text,
                                        const std::vector<MarkerHit>& hits,
                                        const MarkerHit& hit) {
    std::size_t end = text.size();
    for (const auto& h : hits) {
        if (h.line_start > hit.line_start) {
            end = h.line_start;
            break;
        }
    }
    return trim(text.substr(hit.value_start, end - hit.value_start));
}

inline std::string value_on_line(std::string_view text, const MarkerHit& hit) {
    return trim(text.substr(hit.value_start, hit.line_end - hit.value_start));
}

// Accept/reject from the first recognized verdict word on the decision line.
inline std::optional<bool> parse_decision_word(std::string_view value) {
    std::string word;
    auto classify = [](const std::string& w) -> std::optional<bool> {
        if (w == "right" || w == "accept" || w == "correct") return true;
        if (w == "wrong" || w == "reject" || w == "incorrect") return false;
        return std::nullopt;
    };
    for (char c : value) {
        if (std::isalpha(static_cast<unsigned char>(c))) {
            word += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        } else if (!word.empty()) {
            if (auto v = classify(word)) return v;
            word.clear();
        }
    }
    if (!word.empty()) {
        if (auto v = classify(word)) return v;
    }
    return std::nullopt;
}

inline std::optional<int> parse_confidence_value(std::string_view value) {
    for (std::size_t i = 0; i < value.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(value[i]))) {
            int n = value[i] - '0';
            bool multi =
                i + 1 < value.size() && std::isdigit(static_cast<unsigned char>(value[i + 1]));
            if (!multi && n >= 1 && n <= 5) return n;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

// The answer fragment runs from the last Answer marker to the end of the
// text, so multi-line answers ("Answer:\n(C)") still resolve.
inline std::optional<CanonicalAnswer> extract_marked_answer(
    std::string_view text, const std::vector<MarkerHit>& hits, TaskKind kind,
    std::vector<std::string>& flags) {
    const MarkerHit* hit = last_hit(hits, "Answer");
    std::optional<CanonicalAnswer> answer;
    if (hit) answer = normalize_answer(text.substr(hit->value_start), kind);
    if (!answer) flags.push_back("missing_answer");
    return answer;
}

}  // namespace detail

inline AuthorResponse parse_author_response(const std::string& raw, TaskKind kind) {
    AuthorResponse out;
    out.raw = raw;
    auto hits = detail::scan_markers(raw);
    const auto* thoughts_hit = detail::last_hit(hits, "Thoughts");
    const auto* answer_hit = detail::last_hit(hits, "Answer");
    std::size_t begin = thoughts_hit ? thoughts_hit->value_start : 0;
    std::size_t end = (answer_hit && answer_hit->line_start >= begin) ? answer_hit->line_start
                                                                      : raw.size();
    out.thoughts = detail::trim(std::string_view(raw).substr(begin, end - begin));
    out.answer = detail::extract_marked_answer(raw, hits, kind, out.flags);
    return out;
}

inline Review parse_review(const std::string& raw, std::size_t reviewer_index,
                           TaskKind kind) {
    Review out;
    out.reviewer_index = reviewer_index;
    out.raw = raw;
    auto hits = detail::scan_markers(raw);

    if (const auto* hit = detail::first_hit(hits, "Decision")) {
        if (auto verdict = detail::parse_decision_word(detail::value_on_line(raw, *hit))) {
            out.accept = *verdict;
        } else {
            out.accept = false;
            out.flags.push_back("missing_decision");
        }
    } else {
        out.accept = false;
        out.flags.push_back("missing_decision");
    }

    const auto* conf_hit = detail::first_hit(hits, "Confidence");
    auto conf = conf_hit ? detail::parse_confidence_value(detail::value_on_line(raw, *conf_hit))
                         : std::nullopt;
    if (conf) {
        out.confidence = *conf;
    } else {
        out.confidence = 3;
        out.flags.push_back("missing_confidence");
    }

    if (const auto* hit = detail::first_hit(hits, "Justification")) {
        out.justification = detail::value_to_next_marker(raw, hits, *hit);
    }

    out.recommended_answer = detail::extract_marked_answer(raw, hits, kind, out.flags);
    return out;
}

inline MetaReview parse_meta_review(const std::string& raw, TaskKind kind) {
    MetaReview out;
    out.raw = raw;
    auto hits = detail::scan_markers(raw);

    if (const auto* hit = detail::first_hit(hits, "Decision")) {
        if (auto verdict = detail::parse_decision_word(detail::value_on_line(raw, *hit))) {
            out.accept = *verdict;
        } else {
            out.accept = true;
            out.flags.push_back("missing_decision");
        }
    } else {
        out.accept = true;
        out.flags.push_back("missing_decision");
    }

    if (const auto* hit = detail::first_hit(hits, "Justification")) {
        out.justification = detail::value_to_next_marker(raw, hits, *hit);
    }

    if (const auto* hit = detail::first_hit(hits, "Suggestions")) {
        out.suggestions = detail::value_to_next_marker(raw, hits, *hit);
    }

    out.recommended_answer = detail::extract_marked_answer(raw, hits, kind, out.flags);
    return out;
}

}  // namespace mars
