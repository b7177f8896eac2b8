#include <catch_amalgamated.hpp>

#include <mars/parsing.hpp>

#include "fixtures.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

using mars::CanonicalAnswer;
using mars::TaskKind;
using mars::parse_author_response;
using mars::parse_meta_review;
using mars::parse_review;

namespace {

constexpr TaskKind num = TaskKind::numeric;
constexpr TaskKind mc = TaskKind::multiple_choice;

bool is_number(const std::optional<CanonicalAnswer>& a, const std::string& text) {
  return a.has_value() && a->is_number() && a->number_value().to_string() == text;
}

bool is_letter(const std::optional<CanonicalAnswer>& a, char c) {
  return a.has_value() && a->is_letter() && a->letter_value() == c;
}

std::string str(std::string_view v) { return std::string(v); }

}  // namespace

TEST_CASE("pizza walkthrough parses field by field", "[parsing]") {
  auto author = parse_author_response(str(fixtures::pizza_author), num);
  CHECK(is_number(author.answer, "2"));
  CHECK(author.thoughts.rfind("To solve this problem", 0) == 0);
  CHECK(author.thoughts.find("Answer:") == std::string::npos);
  CHECK(author.flags.empty());

  auto r1 = parse_review(str(fixtures::pizza_review_1), 0, num);
  CHECK(r1.reviewer_index == 0);
  CHECK_FALSE(r1.accept);
  CHECK(r1.confidence == 5);
  CHECK(r1.justification.rfind("The author's final calculation is incorrect", 0) == 0);
  CHECK(is_number(r1.recommended_answer, "2"));
  CHECK(r1.flags.empty());

  auto r2 = parse_review(str(fixtures::pizza_review_2), 1, num);
  CHECK(r2.reviewer_index == 1);
  CHECK_FALSE(r2.accept);
  CHECK(r2.confidence == 5);
  CHECK(is_number(r2.recommended_answer, "17"));
  CHECK(r2.flags.empty());

  auto meta = parse_meta_review(str(fixtures::pizza_meta), num);
  CHECK_FALSE(meta.accept);
  CHECK(meta.suggestions.find("correct their final answer") != std::string::npos);
  CHECK(is_number(meta.recommended_answer, "17"));
  CHECK(meta.flags.empty());

  auto rebuttal = parse_author_response(str(fixtures::pizza_rebuttal), num);
  CHECK(is_number(rebuttal.answer, "17"));
  CHECK(rebuttal.flags.empty());
}

TEST_CASE("straw walkthrough: digit-free answers degrade to unanswered", "[parsing]") {
  auto author = parse_author_response(str(fixtures::straw_author), num);
  CHECK_FALSE(author.answer.has_value());
  CHECK(author.flags == std::vector<std::string>{"missing_answer"});
  CHECK(author.thoughts.find("18x + 50 + 20y = 160") != std::string::npos);

  auto r1 = parse_review(str(fixtures::straw_review_1), 0, num);
  CHECK_FALSE(r1.accept);
  CHECK(r1.confidence == 5);
  CHECK_FALSE(r1.recommended_answer.has_value());
  CHECK(r1.flags == std::vector<std::string>{"missing_answer"});

  auto r2 = parse_review(str(fixtures::straw_review_2), 1, num);
  CHECK_FALSE(r2.accept);
  CHECK(r2.confidence == 4);
  CHECK_FALSE(r2.recommended_answer.has_value());
  CHECK(r2.flags == std::vector<std::string>{"missing_answer"});

  auto meta = parse_meta_review(str(fixtures::straw_meta), num);
  CHECK_FALSE(meta.accept);
  CHECK(meta.suggestions.rfind("Re-calculate", 0) == 0);
  CHECK_FALSE(meta.recommended_answer.has_value());
  CHECK(meta.flags == std::vector<std::string>{"missing_answer"});

  auto rebuttal = parse_author_response(str(fixtures::straw_rebuttal), num);
  CHECK(is_number(rebuttal.answer, "5"));
  CHECK(rebuttal.flags.empty());
}

TEST_CASE("star-systems walkthrough parses letters and split verdicts", "[parsing]") {
  auto author = parse_author_response(str(fixtures::stars_author), mc);
  CHECK(is_letter(author.answer, 'B'));
  CHECK(author.flags.empty());

  auto r1 = parse_review(str(fixtures::stars_review_1), 0, mc);
  CHECK(r1.accept);
  CHECK(r1.confidence == 5);
  CHECK(is_letter(r1.recommended_answer, 'B'));
  CHECK(r1.flags.empty());

  auto r2 = parse_review(str(fixtures::stars_review_2), 1, mc);
  CHECK_FALSE(r2.accept);
  CHECK(r2.confidence == 5);
  CHECK(is_letter(r2.recommended_answer, 'C'));
  CHECK(r2.flags.empty());

  auto meta = parse_meta_review(str(fixtures::stars_meta), mc);
  CHECK_FALSE(meta.accept);
  CHECK(is_letter(meta.recommended_answer, 'C'));
  CHECK(meta.flags.empty());

  auto rebuttal = parse_author_response(str(fixtures::stars_rebuttal), mc);
  CHECK(is_letter(rebuttal.answer, 'C'));
}

TEST_CASE("dogs walkthrough recovers from a wrong draft", "[parsing]") {
  auto author = parse_author_response(str(fixtures::dogs_author), num);
  CHECK(is_number(author.answer, "10"));
  CHECK(author.thoughts.find("5/11") != std::string::npos);

  auto r1 = parse_review(str(fixtures::dogs_review_1), 0, num);
  CHECK_FALSE(r1.accept);
  CHECK(r1.confidence == 5);
  CHECK(is_number(r1.recommended_answer, "220"));
  CHECK(r1.flags.empty());

  auto r2 = parse_review(str(fixtures::dogs_review_2), 1, num);
  CHECK_FALSE(r2.accept);
  CHECK(r2.confidence == 3);
  CHECK_FALSE(r2.recommended_answer.has_value());
  CHECK(r2.flags == std::vector<std::string>{"missing_answer"});

  auto meta = parse_meta_review(str(fixtures::dogs_meta), num);
  CHECK_FALSE(meta.accept);
  CHECK(meta.suggestions.find("A = 10") != std::string::npos);
  CHECK(is_number(meta.recommended_answer, "220"));

  auto rebuttal = parse_author_response(str(fixtures::dogs_rebuttal), num);
  CHECK(is_number(rebuttal.answer, "220"));
  CHECK(rebuttal.flags.empty());
}

TEST_CASE("minimal well-formed review round-trips", "[parsing]") {
  auto review =
      parse_review("Decision: right\nConfidence: 4\nJustification: ok\nAnswer: (B)", 2, mc);
  CHECK(review.reviewer_index == 2);
  CHECK(review.accept);
  CHECK(review.confidence == 4);
  CHECK(review.justification == "ok");
  CHECK(is_letter(review.recommended_answer, 'B'));
  CHECK(review.flags.empty());
}

TEST_CASE("unstructured review text falls back with flags", "[parsing]") {
  auto review = parse_review("looks fine to me", 0, mc);
  CHECK_FALSE(review.accept);  // unrecognized verdicts read as reject
  CHECK(review.confidence == 3);
  CHECK(review.flags == std::vector<std::string>{"missing_decision", "missing_confidence",
                                                 "missing_answer"});
}

TEST_CASE("empty aggregation text defaults to accept with flags", "[parsing]") {
  auto meta = parse_meta_review("", mc);
  CHECK(meta.accept);  // absent verdict keeps the draft
  CHECK(meta.suggestions.empty());
  CHECK(meta.flags == std::vector<std::string>{"missing_decision", "missing_answer"});
}

TEST_CASE("decorated field markers are recognized", "[parsing]") {
  auto review = parse_review(
      "**Decision:** wrong\n- Confidence: 2\n> Justification: shaky\n## Answer: (D)", 0, mc);
  CHECK_FALSE(review.accept);
  CHECK(review.confidence == 2);
  CHECK(review.justification == "shaky");
  CHECK(is_letter(review.recommended_answer, 'D'));
  CHECK(review.flags.empty());
}

TEST_CASE("decision words are matched case-insensitively", "[parsing]") {
  CHECK(parse_review("Decision: RIGHT\nConfidence: 5", 0, mc).accept);
  CHECK_FALSE(parse_review("decision: Wrong\nConfidence: 5", 0, mc).accept);
  CHECK(parse_review("Decision: The answer is correct.\nConfidence: 1", 0, mc).accept);
  CHECK_FALSE(parse_review("Decision: maybe\nConfidence: 1", 0, mc).accept);
}

TEST_CASE("every accept and reject token is recognized, whole words only", "[parsing]") {
  auto verdict_of = [](const std::string& word) {
    auto review = parse_review("Decision: " + word + "\nConfidence: 3", 0, mc);
    bool recognized =
        std::find(review.flags.begin(), review.flags.end(), "missing_decision") ==
        review.flags.end();
    return std::pair<bool, bool>{recognized, review.accept};
  };

  for (const char* word : {"right", "accept", "correct"}) {
    CAPTURE(word);
    CHECK(verdict_of(word) == std::pair<bool, bool>{true, true});
  }
  for (const char* word : {"wrong", "reject", "incorrect"}) {
    CAPTURE(word);
    CHECK(verdict_of(word) == std::pair<bool, bool>{true, false});
  }
  // "incorrect" must match as a whole word, never via its "correct" suffix.
  CHECK(verdict_of("The solution is incorrect.") == std::pair<bool, bool>{true, false});
  // Near-miss words are not decisions at all.
  for (const char* word : {"accepted", "rejected", "yes", "no", "rights"}) {
    CAPTURE(word);
    CHECK(verdict_of(word) == std::pair<bool, bool>{false, false});
  }
}

TEST_CASE("only the first decision line counts", "[parsing]") {
  auto review = parse_review(
      "Decision: wrong\nConfidence: 5\nJustification: earlier I thought otherwise\n"
      "Decision: right\nAnswer: (A)",
      0, mc);
  CHECK_FALSE(review.accept);
}

TEST_CASE("the last answer marker wins", "[parsing]") {
  auto author = parse_author_response(
      "Thoughts: first guess\nAnswer: (A)\nThoughts: corrected\nAnswer: (C)", mc);
  CHECK(is_letter(author.answer, 'C'));
  CHECK(author.thoughts == "corrected");
}

TEST_CASE("answers may continue past the marker line", "[parsing]") {
  auto author = parse_author_response("Thoughts: t\nAnswer:\nafter some spacing, (C)", mc);
  CHECK(is_letter(author.answer, 'C'));
  auto numeric = parse_author_response("Thoughts: t\nAnswer:\nroughly\n42 apples", num);
  CHECK(is_number(numeric.answer, "42"));
}

TEST_CASE("confidence outside 1-5 degrades to the default", "[parsing]") {
  auto review = parse_review("Decision: right\nConfidence: 9\nAnswer: (A)", 0, mc);
  CHECK(review.confidence == 3);
  CHECK(review.flags == std::vector<std::string>{"missing_confidence"});
  auto multi = parse_review("Decision: right\nConfidence: 42\nAnswer: (A)", 0, mc);
  CHECK(multi.confidence == 3);
}

TEST_CASE("author text without markers is all thoughts", "[parsing]") {
  auto author = parse_author_response("just some musing with the number 7", num);
  CHECK(author.thoughts == "just some musing with the number 7");
  CHECK_FALSE(author.answer.has_value());
  CHECK(author.flags == std::vector<std::string>{"missing_answer"});
}

TEST_CASE("parsing is deterministic", "[parsing]") {
  for (int i = 0; i < 3; ++i) {
    auto a = parse_review(str(fixtures::pizza_review_1), 0, num);
    auto b = parse_review(str(fixtures::pizza_review_1), 0, num);
    CHECK(a.accept == b.accept);
    CHECK(a.confidence == b.confidence);
    CHECK(a.justification == b.justification);
    CHECK(a.flags == b.flags);
  }
}
