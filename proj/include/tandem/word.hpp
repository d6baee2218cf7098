#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tandem {

// Thrown when a textual word / length-set literal cannot be parsed.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an exhaustive search exceeds its node budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Symbol = int;

// A finite string over the alphabet Z_q.  Immutable value type; the empty
// word is allowed.  Text rendering uses 0-9 then a-z, which caps q at 36 at
// the I/O boundary only.
class Word {
 public:
  Word() = default;
  Word(std::vector<Symbol> symbols, int alphabet);

  static Word empty(int alphabet) { return Word({}, alphabet); }
  static Word parse(std::string_view text, int alphabet);

  int alphabet() const { return alphabet_; }
  int size() const { return static_cast<int>(symbols_.size()); }
  bool is_empty() const { return symbols_.empty(); }
  Symbol operator[](int i) const { return symbols_[static_cast<std::size_t>(i)]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  Word prefix(int t) const;
  Word suffix(int t) const;
  Word substr(int pos, int len) const;
  Word appended(Symbol s) const;
  Word repeated(int times) const;

  std::string str() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;  // lexicographic, prefix first

 private:
  std::vector<Symbol> symbols_;
  int alphabet_ = 1;
};

Word concat(const Word& a, const Word& b);

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

// Set of permitted duplication lengths U: a fixed length {k}, a bounded
// range {1..k}, or an arbitrary finite set.
class LengthSet {
 public:
  enum class Kind { kFixed, kUpTo, kExplicit };

  static LengthSet fixed(int k);
  static LengthSet up_to(int k);
  static LengthSet explicit_set(std::vector<int> lengths);

  // Grammar: "K" (fixed), "<=K" (bounded), or "a,b,c" (explicit list).
  static LengthSet parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool contains(int k) const;
  int min_length() const { return lengths_.front(); }
  int max_length() const { return lengths_.back(); }
  const std::vector<int>& lengths() const { return lengths_; }
  std::string str() const;

  bool operator==(const LengthSet&) const = default;

 private:
  LengthSet(Kind kind, std::vector<int> lengths);
  Kind kind_ = Kind::kFixed;
  std::vector<int> lengths_;  // sorted, distinct, all >= 1
};

// A tandem repeat uu inside some word: the substring of length
// 2*half_length starting at `start` consists of two identical halves.
struct Square {
  int start = 0;
  int half_length = 0;
  bool operator==(const Square&) const = default;
  auto operator<=>(const Square&) const = default;
};

// Rule T_{i,k}: x = uvw with |u| = i, |v| = k becomes uvvw; degenerate
// parameters leave x unchanged.
Word duplicate(const Word& x, int i, int k);

// Rule T^{-1}_{i,k}: x = uvvw with |u| = i, |v| = k becomes uvw; anything
// else yields the empty word, which signals an invalid deduplication site.
Word deduplicate(const Word& x, int i, int k);

bool is_square_at(const Word& x, int i, int half_length);

// All squares (i, |u|) with |u| in `lengths`, sorted by (i, |u|).
std::vector<Square> find_squares(const Word& x, const LengthSet& lengths);

// Overlap test for two squares of the same word: the occupied intervals
// intersect, and coincident starts only count when the halves differ.
bool overlapping(const Square& a, const Square& b);

// Appends `count` extra copies of the last symbol of x.
Word suffix_extend(const Word& x, int count);

// Words reachable from x by exactly `steps` duplications with lengths in
// `lengths`, optionally truncated to length <= max_len.  Sorted.
std::vector<Word> descendant_cone(const Word& x, const LengthSet& lengths, int steps,
                                  std::optional<int> max_len = std::nullopt);

// Words reachable by at most `steps` duplications (the cone reading used by
// the error-correction predicates, where degenerate rule applications pad
// shorter derivations).  Sorted.
std::vector<Word> descendant_cone_within(const Word& x, const LengthSet& lengths, int steps,
                                         std::optional<int> max_len = std::nullopt);

// D^*(x) truncated to words of length <= max_len.  Requires max_len >= |x|.
std::vector<Word> descendant_cone_all(const Word& x, const LengthSet& lengths, int max_len);

// D^{-*}(y): every word reachable from y by deduplications, including y.
std::vector<Word> ancestor_cone(const Word& y, const LengthSet& lengths);

}  // namespace tandem
