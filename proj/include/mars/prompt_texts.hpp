#pragma once

#include <string_view>

// The role templates, embedded verbatim. The copies under assets/prompts/
// exist for human inspection and must stay byte-identical to these.

namespace mars::prompt_texts {

inline constexpr std::string_view author =
    R"TPL(You are an assistant. Please help to solve the following problem:
{user_query}

Give your thoughts about the question and the final answer in the following format:
Thoughts: [your thoughts with immediate results]
Answer: [the final single capital letter answer in the form (X). X is chosen from [A,B,C,D]]

Your final answer must be a single capital letter in the form (X) at the end of the response.)TPL";

inline constexpr std::string_view reviewer =
    R"TPL(You are a reviewer. The author has submitted the following answer:

Question: {user_query}
Answer: {author_response}

Please evaluate the correctness of the author's response.
Follow the instructions and format strictly:

Evaluation criteria:
1. Faithfulness: check whether the author's answers and thoughts are consistent with known facts.
2. Correctness: check whether each step in the author's answer and thoughts is correct.

Your output format must be:

Decision: [right | wrong]
Confidence: [1-5] (5 = highest confidence)
Justification: [reasons or author mistakes supporting your decision]
Answer: [your recommended answer])TPL";

inline constexpr std::string_view meta_reviewer =
    R"TPL(You are the meta-reviewer. The author has submitted an answer.

Question: {user_query}
Answer: {author_response}

You must decide whether the answer is correct based on both your own knowledge and the reviewers' comments below:

--- Reviewer Feedback ---
{combined_reviews}

Do not only rely on the reviewers, you must also think by yourself.

Provide your conclusion in the following format:

Decision: [right | wrong]
Justification: [reasons of your decision]
Suggestions: [your suggestions for updating the answer, only needed when decision is wrong]
Answer: [your recommended answer])TPL";

inline constexpr std::string_view rebuttal =
    R"TPL(Your answer was reviewed and marked as incorrect by the meta-reviewer.

--- Meta-reviewer Feedback ---
{meta_decision}

If you strongly agree with the meta-reviewer's suggestions, revise your answer accordingly. If you disagree, insist on your initial answer and repeat it. Do not always trust the meta-reviewer -- you must think for yourself whether to trust the suggestions.

Make sure to state your reasoning and final answer in this format:

Reasons: [your reasons of accepting or rejecting the suggestions]
Thoughts: [your new step-by-step thoughts on the problem after considering the suggestions]
Answer: [the final single capital letter answer in the form (X). X is chosen from [A,B,C,D]])TPL";

inline constexpr std::string_view reflection =
    R"TPL(You wrote the following response to a problem:

Question: {user_query}
Answer: {response}

Carefully review your own answer. Are there any mistakes or thoughts not grounded in the given problem or known facts?
- If yes, explain the problems and revise your answer accordingly.
- If not, confirm and repeat your initial answer.

Your final response must follow this format:
Mistakes (if any):
Answer: [the final single capital letter answer in the form (X). X is chosen from [A,B,C,D]])TPL";

inline constexpr std::string_view debate_initial =
    R"TPL(You are an assistant. Please help to solve the following problem:
{user_query}

Give your thoughts about the computation steps and the final answer in the following format:
Thoughts: [your step-by-step thinking process with immediate results]
Answer: [the final single capital letter answer in the form (X). X is chosen from [A,B,C,D]]

Your final answer must be a single capital letter at the end of the response.)TPL";

inline constexpr std::string_view debate_round =
    R"TPL(These are the solutions to the problem from other agents:

{peer_solutions}

Using the solutions from other agents as additional information, can you provide your final answer to the problem?

Make sure to state your thoughts and new answer with this format:
Thoughts: [your step-by-step thinking process]
Answer: [the final capital letter answer]

Your final answer must be a single capital letter at the end of the response.)TPL";

inline constexpr std::string_view persona_conservative =
    R"TPL(Your decision should be conservative.

Goal:
Minimize false alarms. Only label 'wrong' when there is a decisive, demonstrable error that changes the final answer.

Heuristics:
- Require at least TWO independent checks (e.g., recomputation + boundary/unit check) before declaring 'wrong'.
- Minor arithmetic slips that do not affect the final answer => prefer 'right' with notes in Justification.
- Missing small steps != 'wrong' if the step is standard and the result follows.

Confidence:
- 5 only if two checks agree
- 4 if one check is strong
- <=3 if any uncertainty remains)TPL";

inline constexpr std::string_view persona_aggressive =
    R"TPL(Your decision should be aggressive.

Goal:
Minimize false acceptances. Label 'wrong' when any essential step is missing, unjustified, or numerically inconsistent.

Heuristics:
- Penalize ambiguous leaps, missing assumptions/units, and unverified claims even if the final number looks plausible.
- If any step is unsupported or contradicts problem constraints, prefer 'wrong'.
- If correct, still list at least two vulnerabilities the author should fix.

Confidence:
- 5 if multiple issues are found or if cross-checks clearly contradict
- 4 when evidence is strong but not exhaustive
- <=3 if partial doubt)TPL";

}  // namespace mars::prompt_texts
