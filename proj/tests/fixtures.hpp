#pragma once

#include <string_view>

// Reference transcripts used across the parsing, strategy-replay, and
// acceptance tests. Each block is the plain-text form of one agent message,
// with every structured field starting its own line.

namespace fixtures {

// ---- pizza case (numeric): wrong draft, both reviewers reject, meta
// ---- rejects, rebuttal lands on 17.

inline constexpr std::string_view pizza_question =
    "Four friends ordered four pizzas for a total of 64 dollars. If two of the pizzas "
    "cost 30 dollars, how much did each of the other two pizzas cost if they cost the "
    "same amount?";

inline constexpr std::string_view pizza_author =
    R"FX(Thoughts: To solve this problem, we first need to find out the total cost of the two pizzas that are known to cost 30 dollars together. Since there are two pizzas costing 30 dollars, we add their prices to find the total cost of these two pizzas: 30 + 30 = 60 dollars. Next, we need to find out the remaining total cost for the other two pizzas, which means we subtract the total cost of the first two pizzas from the overall total: 64 - 60 = 4 dollars. Since the two remaining pizzas cost the same amount, we divide this remaining total cost by 2 to find the cost per pizza: 4 / 2 = 2 dollars. Therefore, each of the other two pizzas cost 2 dollars.
Answer: 2 dollars.)FX";

inline constexpr std::string_view pizza_review_1 =
    R"FX(Decision: Wrong
Confidence: 5
Justification: The author's final calculation is incorrect. It was correctly determined that the two known pizzas cost a total of 60 dollars, leaving 4 dollars for the remaining two pizzas. However, the division by 2 is done on the wrong total. The remaining 4 dollars should be divided by the number of remaining pizzas, which is 2. This would give the correct cost per pizza: 4 / 2 = 2 dollars per pizza. But, since the total cost for the other two pizzas is 4 dollars, each of the other two pizzas does not cost 2 dollars. It's the aggregate of both. So, each of the other two pizzas costs 4 dollars / 2 = 2 dollars.
Answer: 2 dollars per pizza (each of the other two pizzas costs 2 dollars).)FX";

inline constexpr std::string_view pizza_review_2 =
    R"FX(Decision: Wrong
Confidence: 5
Justification: The author's thoughts and calculations are consistent with each other, but they do not match the original problem. The author incorrectly calculates the cost of the two known pizzas as 30 dollars each, which would mean a total of 60 dollars for the two pizzas. However, the original problem states that two pizzas cost a total of 30 dollars, not each. Therefore, the total cost for the two other pizzas should be 64 - 30 = 34 dollars. Since the other two pizzas cost the same amount, we divide this by 2 to find the cost per pizza: 34 / 2 = 17 dollars.
Answer: 17 dollars.)FX";

inline constexpr std::string_view pizza_meta =
    R"FX(Decision: Wrong
Justification: Both reviewers have provided incorrect feedback. Reviewer 1 makes a logical error in stating that the 4 dollars should be divided by 2 for the remaining pizzas, but then concludes that each pizza costs 2 dollars, which is the correct answer. Reviewer 2 incorrectly calculates the total cost of the two known pizzas as 60 dollars instead of 30 dollars, leading to an incorrect total for the remaining pizzas and an incorrect final answer. The original solution provided by the author is correct. The two known pizzas cost a total of 30 dollars, leaving 64 - 30 = 34 dollars for the remaining pizzas. Since these two remaining pizzas cost the same amount, we divide this by 2 to find the cost per pizza: 34 / 2 = 17 dollars. However, the author's answer mentions that each of the other two pizzas costs 2 dollars, which is incorrect. The correct answer should be 17 dollars per pizza.
Suggestions: The author should correct their final answer to reflect that each of the other two pizzas costs 17 dollars.
Answer: 17 dollars.)FX";

inline constexpr std::string_view pizza_rebuttal =
    R"FX(Reasons: I agree with the meta-reviewer's suggestions. Upon reviewing, I realized that I made an error in my original computation. The total cost for the remaining pizzas should indeed be 34 dollars, leaving 17 dollars for each of the two remaining pizzas.
Thoughts: - The total cost for two known pizzas is 30 dollars. - Subtract the known total from the overall total to find the remaining total: 64 - 30 = 34 dollars. - Since the remaining pizzas cost the same amount, divide this remaining total by 2 to find the cost per pizza: 34 / 2 = 17 dollars.
Answer: 17 dollars.)FX";

// ---- straw case (numeric): the draft explicitly declines to answer, both
// ---- reviewers and the meta answer without any extractable number, and the
// ---- rebuttal lands on 5.

inline constexpr std::string_view straw_question =
    "Russell works at a pet store and is distributing straw among the rodents. The rats "
    "are kept in 3 cages in equal groups and each rat is given 6 pieces of straw. There "
    "are 10 cages of hamsters that are kept alone and each hamster is given 5 pieces of "
    "straw. There is also a pen of rabbits where 20 pieces of straw are distributed "
    "among the rabbits. No straw is used anywhere else in the store. If 160 pieces of "
    "straw have been distributed among the small rodents, how many rats are in each "
    "cage?";

inline constexpr std::string_view straw_author =
    R"FX(Thoughts: 1. Let x be the number of rats in each cage. 2. Since there are 3 cages of rats, the total number of rats = 3x. 3. The total number of pieces of straw given to the rats = 3x * 6 = 18x. 4. There are 10 cages of hamsters, so the total number of hamsters = 10. 5. The total number of pieces of straw given to the hamsters = 10 * 5 = 50. 6. The number of rabbits in the pen is unknown, represented as y. 7. The total number of pieces of straw given to the rabbits = 20y. 8. The total number of pieces of straw distributed = 18x + 50 + 20y = 160. Now we can solve for x: 18x + 50 + 20y = 160 18x + 20y = 110 Since we don't have enough information to solve for x, the computation process should stop here.
Answer: No final numerical answer.)FX";

inline constexpr std::string_view straw_review_1 =
    R"FX(Decision: wrong
Confidence: 5
Justification: The author's computation process is correct up until the final equation dealing with the total pieces of straw distributed. The mistake lies in the setup of the final equation, where the author incorrectly combines the total pieces of straw for rats and rabbits without considering the total number of rabbits and without setting up an equation that connects the number of rats and cages.
Answer: The correct way to solve the problem would be to set up a separate equation for the rabbits, considering the total number of rabbits. However, as the problem does not provide the number of rabbits but does provide the total straw distribution, it is not possible to determine the number of rats in each cage. Therefore, the final answer should be stated as "Cannot determine.")FX";

inline constexpr std::string_view straw_review_2 =
    R"FX(Decision: wrong
Confidence: 4
Justification: The author's approach overall is correct, but there is one key mistake in their computation. The mistake was in setting up the equation: 18x + 20y = 110 The correct equation should be: 18x + 50 + 20y = 160 After fixing this computation, the correct solution could be reached.
Answer: Re-calculate the equation with the correct values.)FX";

inline constexpr std::string_view straw_meta =
    R"FX(Decision: wrong
Justification: The author's computation process was mostly correct, but there was a mistake in setting up the final equation. The mistake was not considering the total number of rabbits and not properly combining the total pieces of straw for each type of rodent.
Suggestions: Re-calculate the final equation considering the total number of rabbits and properly combining the total pieces of straw for each type of rodent.
Answer: Cannot determine.)FX";

inline constexpr std::string_view straw_rebuttal =
    R"FX(Reasons: I accept the meta-reviewer's suggestions as they pointed out a crucial mistake in considering the total number of rabbits and combining the total pieces of straw for each type of rodent.
Thoughts: 1. Let x be the number of rats in each cage. 2. Total number of rats = 3 cages of rats * x rats per cage = 3x rats. 3. Total number of pieces of straw given to the rats = 3x * 6 = 18x pieces. 4. Total number of hamsters = 10 cages of hamsters * 1 hamster per cage = 10 hamsters. 5. Total number of pieces of straw given to the hamsters = 10 * 5 = 50 pieces. 6. Total number of rabbits = 1 pen of rabbits 7. Total number of pieces of straw given to the rabbits = 20 pieces. 8. Total number of pieces of straw distributed = 18x + 50 + 20 = 18x + 70. Given that the total number of pieces of straw distributed among the small rodents is 160: 18x + 70 = 160 18x = 90 x = 90 / 18 x = 5
Answer: Each rat is in a cage with 5 rats.)FX";

// ---- star-systems case (multiple choice): draft picks (B), reviewer 1
// ---- accepts, reviewer 2 and the meta push (C), rebuttal adopts (C).

inline constexpr std::string_view stars_question =
    "The majority of stars in our Galaxy form and evolve in multi-stellar systems. "
    "Below are five potential multi-star systems that are presented. How many of these "
    "systems can coexist?\n"
    "1. W Virginis type star, G2V, M4V, RGB star(1.5Msun)\n"
    "2. WD (B5 when in the MS) and A0V\n"
    "3. G2V, K1V, M5V\n"
    "4. DA4, L4\n"
    "5. WD (MS mass of 0.85Msun), K3V, A star with a mass of 0.9Msun in the MS.";

inline constexpr std::string_view stars_author =
    R"FX(Thoughts: It seems the question is asking about the stability and possibility of certain multi-star systems to coexist. Let's briefly analyze each system:
1. A W Virginis star is a pulsating variable, post main sequence; possible instability.
2. WD (from B5) and A0V: plausible coexistence.
3. G2V, K1V, M5V: stable low-mass system.
4. DA4 and L4: both remnants, stable coexistence.
5. WD (0.85Msun), K3V, A star (0.9Msun): plausible.
From the analysis, all five systems could coexist, but the first may be unstable. Selecting the others gives 4 systems.
Answer: (B) 4)FX";

inline constexpr std::string_view stars_review_1 =
    R"FX(Decision: right
Confidence: 5
Justification: The author’s answer is well-reasoned and detailed, correctly identifying possible instability in the first system and concluding that four can coexist. This matches option (B).
Answer: (B) 4)FX";

inline constexpr std::string_view stars_review_2 =
    R"FX(Decision: wrong
Confidence: 5
Justification: The author misinterprets the question. It asks how many systems can coexist, not for a selective stability-based choice. While analysis is good, the answer should reflect the total count. Provided options do not match the author’s interpretation.
Answer: (C) 3)FX";

inline constexpr std::string_view stars_meta =
    R"FX(Decision: wrong
Justification: The author’s analysis is mostly sound, but they added an interpretation not asked for (selecting only stable systems). The question requires the total number that can coexist. Given the analysis, all except the first system are possible. Thus, the correct answer is 3.
Suggestions: Directly answer the total count rather than reinterpret the question.
Answer: (C) 3)FX";

inline constexpr std::string_view stars_rebuttal =
    R"FX(Reasons: I agree with the meta-reviewer’s feedback — I misinterpreted the question as requiring a stability-based selection. The correct reading is total number of coexisting systems.
Thoughts: Since all except the first system are possible, the number is 3.
Answer: (C) 3)FX";

// ---- dogs case (numeric): the draft derives 22A correctly but recomputes
// ---- the given weight A as 5/11; review feedback restores A = 10 and the
// ---- rebuttal reaches 220 pounds.

inline constexpr std::string_view dogs_question =
    "There are four dogs. The first dog weighs 10 pounds. The second dog weighs 3 times "
    "as much as the first dog, and the third dog weighs 6 times as much as the first "
    "dog. The fourth dog weighs 13 times the first dog's weight plus the combined "
    "weight of the second and third dogs. How much does the fourth dog weigh?";

inline constexpr std::string_view dogs_author =
    R"FX(Thoughts: Let A denote the weight of the first dog. The second dog weighs 3A and the third dog weighs 6A. The fourth dog weighs 13A plus the combined weight of the second and third dogs, which gives 13A + 3A + 6A = 22A. To find A, I set 22A equal to the sum of the known multiples, 22A = 10, so A = 5/11. Therefore the fourth dog weighs 22A = 22 * 5/11 = 10 pounds.
Answer: 10 pounds)FX";

inline constexpr std::string_view dogs_review_1 =
    R"FX(Decision: wrong
Confidence: 5
Justification: The author correctly derived that the fourth dog weighs 22A, but then recomputed A as 5/11, which contradicts the given information. The problem states the first dog weighs 10 pounds, so A is given: A = 10. The fourth dog must weigh 22 * 10 = 220 pounds.
Answer: 220 pounds)FX";

inline constexpr std::string_view dogs_review_2 =
    R"FX(Decision: wrong
Confidence: 3
Justification: The reasoning near the end looks inconsistent with the problem statement.
Answer: The computation should be redone.)FX";

inline constexpr std::string_view dogs_meta =
    R"FX(Decision: wrong
Justification: The author set up the relation correctly: the fourth dog weighs 22A. The error is the recomputation of A as 5/11; the problem already states the first dog weighs 10 pounds, so A = 10.
Suggestions: Recalculate the final weight using the given initial weight A = 10 pounds instead of recomputing A.
Answer: 220 pounds)FX";

inline constexpr std::string_view dogs_rebuttal =
    R"FX(Reasons: I agree with the meta-reviewer. I should not have recomputed A; the first dog's weight is given as 10 pounds.
Thoughts: With A = 10 pounds, the fourth dog weighs 22A = 22 * 10 = 220 pounds.
Answer: 220 pounds)FX";

}  // namespace fixtures
