#pragma once

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "mars/errors.hpp"

namespace mars {

enum class TaskKind { multiple_choice, numeric };

// Exact decimal value: sign plus integer/fraction digit strings, normalized
// so that equal values have equal representations (no leading integer zeros,
// no trailing fraction zeros, no negative zero). Kept as digits rather than
// binary floating point so persisted answers round-trip bit-exactly.
struct Decimal {
    bool negative = false;
    std::string int_digits = "0";
    std::string frac_digits;  // empty = integer

    bool operator==(const Decimal& other) const = default;

    std::string to_string() const {
        std::string out;
        if (negative) out += '-';
        out += int_digits;
        if (!frac_digits.empty()) {
            out += '.';
            out += frac_digits;
        }
        return out;
    }

    double to_double() const { return std::strtod(to_string().c_str(), nullptr); }

    static Decimal make(bool neg, std::string int_part, std::string frac_part) {
        Decimal d;
        std::size_t first = int_part.find_first_not_of('0');
        d.int_digits = (first == std::string::npos) ? "0" : int_part.substr(first);
        std::size_t last = frac_part.find_last_not_of('0');
        d.frac_digits = (last == std::string::npos) ? "" : frac_part.substr(0, last + 1);
        d.negative = neg && !(d.int_digits == "0" && d.frac_digits.empty());
        return d;
    }
};

class CanonicalAnswer {
public:
    static CanonicalAnswer letter(char c) {
        if (c < 'A' || c > 'Z') throw Error(std::string("not a capital letter: ") + c);
        CanonicalAnswer a;
        a.letter_ = c;
        return a;
    }

    static CanonicalAnswer number(Decimal d) {
        CanonicalAnswer a;
        a.number_ = std::move(d);
        return a;
    }

    bool is_letter() const { return letter_.has_value(); }
    bool is_number() const { return number_.has_value(); }
    char letter_value() const { return *letter_; }
    const Decimal& number_value() const { return *number_; }

    // Canonical text form: letters as "(X)", numbers as the normalized
    // decimal literal. normalize_answer() maps this back to the same value.
    std::string render() const {
        if (is_letter()) return std::string("(") + *letter_ + ")";
        return number_->to_string();
    }

    bool operator==(const CanonicalAnswer& other) const = default;

private:
    std::optional<char> letter_;
    std::optional<Decimal> number_;
};

namespace detail {

inline bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

// First capital letter that is either parenthesized "(X)" or stands alone as
// a single-letter token, scanning left to right.
inline std::optional<char> extract_letter(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(' && i + 2 < text.size() && text[i + 1] >= 'A' &&
            text[i + 1] <= 'Z' && text[i + 2] == ')') {
            return text[i + 1];
        }
        if (text[i] >= 'A' && text[i] <= 'Z') {
            bool start = i == 0 || !is_word_char(text[i - 1]);
            bool end = i + 1 == text.size() || !is_word_char(text[i + 1]);
            if (start && end) return text[i];
        }
    }
    return std::nullopt;
}

// First maximal numeric literal after dropping currency symbols and
// thousands separators. A '-' counts as a sign only when it is not glued to
// a preceding word or number ("x = -5" yes, "22-3" no).
inline std::optional<Decimal> extract_number(std::string_view text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '$' || c == '\xA3' || c == '\xA4') continue;
        if (c == ',' && !cleaned.empty() &&
            std::isdigit(static_cast<unsigned char>(cleaned.back())) && i + 1 < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            continue;
        }
        cleaned += c;
    }

    for (std::size_t i = 0; i < cleaned.size(); ++i) {
        bool neg = false;
        std::size_t j = i;
        if (cleaned[j] == '-') {
            if (j > 0 && is_word_char(cleaned[j - 1])) continue;
            neg = true;
            ++j;
        }
        std::size_t digits_start = j;
        while (j < cleaned.size() && std::isdigit(static_cast<unsigned char>(cleaned[j]))) ++j;
        std::string int_part = cleaned.substr(digits_start, j - digits_start);
        std::string frac_part;
        if (j < cleaned.size() && cleaned[j] == '.' && j + 1 < cleaned.size() &&
            std::isdigit(static_cast<unsigned char>(cleaned[j + 1]))) {
            std::size_t frac_start = ++j;
            while (j < cleaned.size() && std::isdigit(static_cast<unsigned char>(cleaned[j]))) ++j;
            frac_part = cleaned.substr(frac_start, j - frac_start);
        }
        if (int_part.empty() && frac_part.empty()) continue;
        if (int_part.empty()) int_part = "0";
        return Decimal::make(neg, int_part, frac_part);
    }
    return std::nullopt;
}

}  // namespace detail

// Extracts the canonical answer from the text that follows an answer marker.
// Empty optional = no letter/number could be found (NoAnswerFound).
inline std::optional<CanonicalAnswer> normalize_answer(std::string_view raw_fragment,
                                                       TaskKind kind) {
    if (kind == TaskKind::multiple_choice) {
        auto c = detail::extract_letter(raw_fragment);
        if (!c) return std::nullopt;
        return CanonicalAnswer::letter(*c);
    }
    auto d = detail::extract_number(raw_fragment);
    if (!d) return std::nullopt;
    return CanonicalAnswer::number(*d);
}

// Letters compare by identity. Numbers compare exactly on the normalized
// decimal form, with a relative tolerance to absorb formatting drift. The
// tolerance uses max(1,|a|,|b|) so the relation stays symmetric.
inline bool answers_equal(const CanonicalAnswer& a, const CanonicalAnswer& b) {
    if (a.is_letter() != b.is_letter()) {
        throw VariantMismatch("cannot compare a letter answer with a number answer");
    }
    if (a.is_letter()) return a.letter_value() == b.letter_value();
    if (a.number_value() == b.number_value()) return true;
    double x = a.number_value().to_double();
    double y = b.number_value().to_double();
    if (!std::isfinite(x) || !std::isfinite(y)) return false;
    double tol = 1e-6 * std::max({1.0, std::fabs(x), std::fabs(y)});
    return std::fabs(x - y) <= tol;
}

}  // namespace mars
