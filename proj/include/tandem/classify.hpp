#pragma once

#include <optional>
#include <string>

#include "tandem/roots.hpp"
#include "tandem/word.hpp"

namespace tandem {

// Decision for one (alphabet size, length set) pair: whether every word has
// a unique root, which classification rule applied, and a concrete word
// with at least two roots when uniqueness fails.
struct ClassificationVerdict {
  bool unique = false;
  std::string rule;
  std::optional<Word> witness;
};

// Full classification of unique-root pairs:
//   |Sigma| = 1:  unique iff every length in U is a multiple of min(U);
//   |Sigma| = 2:  unique iff U is a singleton or contains {1,2};
//   |Sigma| >= 3: unique iff U is a singleton, {1,2}, or {1,2,3}.
ClassificationVerdict classify(int alphabet_size, const LengthSet& lengths);

// Witness generators from the non-uniqueness constructions.  Each returned
// word has at least two roots under the corresponding length set.

// a^{k+2m} over a single letter; requires m not divisible by k.
Word witness_unary(int k, int m);

// Two-letter block pattern for U = {k, k+m} with m a positive multiple of
// k; requires k*m > 1 (the excluded boundary pair is {1,2}, which is
// unique).
Word witness_two_letter(int k, int m);

// Three-letter witnesses for U = {1,2} union V and U = {1,2,3} union V
// with m = min(V) >= 4.
Word witness_12v(int m);
Word witness_123v(int m);

struct ExhaustiveCheckResult {
  bool all_unique = true;
  std::optional<Word> counterexample;  // a multi-root word, when found
};

// Scans every word over the given alphabet up to max_len and reports the
// first word with more than one root, if any.
ExhaustiveCheckResult exhaustive_check(int alphabet_size, const LengthSet& lengths, int max_len,
                                       std::size_t node_budget = kDefaultRootBudget);

}  // namespace tandem
