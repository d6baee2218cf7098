#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "tandem/transform.hpp"
#include "tandem/word.hpp"

namespace tandem {

inline constexpr std::size_t kDefaultRootBudget = 1'000'000;

// Irreducible ancestors of a word together with the length set they are
// roots under.
struct RootSet {
  std::vector<Word> roots;  // sorted, distinct
  LengthSet lengths;
};

// Unique root under fixed-length-k deduplication, computed in the transform
// domain: phi_inverse(y, mu(z, k)).  Words shorter than k are their own
// root.
Word root_fixed(const Word& x, int k);

// Unique root under deduplication of lengths <= k for k in {1, 2, 3}, the
// range where uniqueness holds.  Greedy leftmost-shortest square removal;
// order independence is a tested property, not an assumption.
Word root_bounded(const Word& x, int k);

// Exhaustive memoized search of the deduplication DAG for an arbitrary
// length set.  Throws ResourceLimitError past `node_budget` visited words.
RootSet roots_general(const Word& x, const LengthSet& lengths,
                      std::size_t node_budget = kDefaultRootBudget);

// True iff the two words have the same root set under `lengths`.
// Single-root families compare their unique roots directly.
bool congruent(const Word& a, const Word& b, const LengthSet& lengths);

// l1 distance between the zero signatures of two k-congruent words of
// equal length: the least total number of duplications that must be
// applied across both words to reach a common descendant.  Because the
// signature weights of equal-length congruent words coincide, the two legs
// of the optimal join are equal, so the smallest t with intersecting
// t-step descendant cones is exactly distance / 2.
long long distance(const Word& a, const Word& b, int k);

// Common descendant of two k-congruent words realizing the componentwise
// maximum of their zero-run lengths.  Its distance to each input sums to
// distance(a, b, k) when the inputs have equal length.
Word join_fixed(const Word& a, const Word& b, int k);

// Common descendant of two <=2-congruent words, built from the block
// normal form a1+ a2+ (a1+ a2+)* a3+ (a2+ a3+)* ... of the language of
// descendants of their common root.
Word join_le2(const Word& a, const Word& b);

namespace detail {

using RootMemo = std::unordered_map<Word, std::vector<Word>, WordHash>;

// Shared-memo root computation used by roots_general and the exhaustive
// classification scans.  Returns the sorted root set of w.
const std::vector<Word>& roots_memoized(const Word& w, const LengthSet& lengths, RootMemo& memo,
                                        std::size_t node_budget);

}  // namespace detail

}  // namespace tandem
