#pragma once

#include <vector>

#include "tandem/word.hpp"

namespace tandem {

// Image of a word under the order-k difference transform: y is the k-prefix
// and z the entrywise difference suff - pref over Z_q.  The transform turns
// a length-k tandem duplication into an insertion of k consecutive zeros
// into z, so the whole duplication calculus becomes zero-block bookkeeping.
struct TransformPair {
  Word y;
  Word z;

  int order() const { return y.size(); }
  int alphabet() const { return y.alphabet(); }

  bool operator==(const TransformPair&) const = default;
};

// Per-zero-run block counts floor(m_i / k), including the leading and
// trailing runs of length 0.  Entries are unbounded non-negative integers,
// not alphabet symbols: they count zero blocks, which can exceed q - 1.
struct ZeroSignature {
  std::vector<long long> counts;

  long long l1_weight() const;

  bool operator==(const ZeroSignature&) const = default;
};

long long l1_distance(const ZeroSignature& a, const ZeroSignature& b);

// Forward transform; requires |x| >= k.
TransformPair phi(const Word& x, int k);

// Inverse transform: x_i = y_i for i <= k, then x_i = x_{i-k} + z_{i-k}.
Word phi_inverse(const TransformPair& p);

// Inserts 0^k after position i of z when 0 <= i <= |z|; identity otherwise,
// mirroring the degenerate branch of the duplication rule so the commuting
// diagram holds for every i.
TransformPair zeta(const TransformPair& p, int i);

// Reduces the length of every maximal zero-run modulo k.
Word mu(const Word& z, int k);

// Zero signature of z with respect to block size k.
ZeroSignature sigma(const Word& z, int k);

// Re-inflates each zero-run of a mu-reduced word by k * counts[i] extra
// zeros.  Requires |s.counts| = wt_H(m) + 1 and m = mu(m, k).
Word reconstruct(const Word& m, const ZeroSignature& s, int k);

// Lengths m_0..m_t of the maximal zero-runs of z (t = Hamming weight of z).
std::vector<long long> zero_run_lengths(const Word& z);

// Number of non-zero symbols.
int hamming_weight(const Word& z);

}  // namespace tandem
