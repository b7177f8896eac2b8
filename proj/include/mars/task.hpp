#pragma once

#include <string>
#include <vector>

#include "mars/answer.hpp"
#include "mars/errors.hpp"

namespace mars {

// One benchmark problem. Multiple-choice tasks carry 2..26 choice texts,
// labeled A, B, C, ... by position; numeric tasks carry none.
struct TaskInstance {
    std::string id;
    TaskKind kind = TaskKind::multiple_choice;
    std::string question;
    std::vector<std::string> choices;
    CanonicalAnswer gold = CanonicalAnswer::letter('A');

    void validate() const {
        if (id.empty()) throw Error("task id must not be empty");
        if (question.empty()) throw Error("task " + id + ": question must not be empty");
        if (kind == TaskKind::multiple_choice) {
            if (choices.size() < 2 || choices.size() > 26) {
                throw Error("task " + id + ": choice count must be between 2 and 26");
            }
            if (!gold.is_letter()) {
                throw Error("task " + id + ": multiple-choice gold answer must be a letter");
            }
            char max_label = static_cast<char>('A' + choices.size() - 1);
            if (gold.letter_value() > max_label) {
                throw Error("task " + id + ": gold label exceeds the choice list");
            }
        } else {
            if (!choices.empty()) {
                throw Error("task " + id + ": numeric tasks take no choices");
            }
            if (!gold.is_number()) {
                throw Error("task " + id + ": numeric gold answer must be a number");
            }
        }
    }

    char label_for(std::size_t index) const { return static_cast<char>('A' + index); }
};

}  // namespace mars
