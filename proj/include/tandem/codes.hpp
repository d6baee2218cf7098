#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "tandem/transform.hpp"
#include "tandem/word.hpp"

namespace tandem {

// Thrown when a received word cannot be decoded to a codeword.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CodeMode {
  kFixedAll,  // all duplications of one fixed length
  kFixedT,    // up to t duplications of one fixed length
  kLe2,       // all duplications of length <= 2
  kLe3,       // all duplications of length <= 3
};

std::string code_mode_name(CodeMode mode);
CodeMode parse_code_mode(std::string_view name);

// A materialized code: equal-length codewords plus construction metadata.
struct Codebook {
  int q = 2;
  int n = 1;
  CodeMode mode = CodeMode::kFixedAll;
  int k = 1;                 // duplication length (2 or 3 for the bounded modes)
  long long t = -1;          // corrected error count; -1 encodes '*'
  std::vector<Word> codewords;  // sorted, distinct

  bool contains(const Word& w) const;
  LengthSet channel_lengths() const;
};

// Constant-weight code in the l1 metric over non-negative integer vectors.
struct L1Code {
  int length = 0;
  int weight = 0;
  int min_distance = 1;
  std::vector<std::vector<long long>> words;  // lexicographic admission order
};

// Greedy lexicographic constant-weight l1 code: enumerate all length-m
// non-negative integer vectors of weight exactly w in lexicographic order
// and admit a vector iff it keeps the minimum distance >= d.
L1Code gen_l1_code(int m, int w, int d);

// All irreducible words of length n under fixed-length-k deduplication,
// enumerated through the transform domain (k-prefix times RLL tail).
std::vector<Word> irr_fixed_words(int q, int n, int k);

// All irreducible words of length n under deduplication of lengths
// <= k_bound (2 or 3), by direct square-free filtering.
std::vector<Word> irr_bounded_words(int q, int n, int k_bound);

// One codeword per k-congruence class: every irreducible word of length
// n - ik, zero-padded in the transform domain by i blocks of k zeros.
Codebook build_fixed_all(int q, int n, int k);

// Codewords whose zero signatures lie in greedy constant-weight l1 codes
// of minimum distance 2(t+1), one code per (vector length, weight) pair.
// The doubling reflects the equal join legs of same-bucket signatures:
// distance 2t+1 or less admits a common word within t duplications of two
// distinct codewords.
Codebook build_fixed_t(int q, int n, int k, long long t);

// One codeword per congruence class: irreducible words of every length
// <= n, suffix-extended to length n.
Codebook build_le2(int q, int n);
Codebook build_le3(int q, int n);

// Root-and-pad decoder for build_fixed_all codebooks.
Word decode_fixed_all(const Codebook& code, const Word& received);

// Decoder for build_fixed_t codebooks: the unique codeword with matching
// (prefix, reduced tail) whose signature is componentwise below the
// received one within l1 radius t.
Word decode_fixed_t(const Codebook& code, const Word& received, long long t);

// Decoder for the bounded codebooks: suffix-extend the unique root back to
// length n.
Word decode_bounded(const Codebook& code, const Word& received);

// Decodes with the decoder matching the codebook mode.
Word decode(const Codebook& code, const Word& received);

// Brute-force check that the (<= t or unbounded) descendant cones of all
// words are pairwise disjoint, truncated at max_len.
bool verify_code(const std::vector<Word>& words, const LengthSet& lengths, std::optional<int> t,
                 int max_len);
bool verify_code(const Codebook& code, std::optional<int> t, int max_len);

// Codebook file: '#'-prefixed q/n/mode/k/t header lines followed by one
// codeword per line, sorted, with a trailing newline.
void write_codebook(const Codebook& code, std::ostream& os);
Codebook read_codebook(std::istream& is);

}  // namespace tandem
