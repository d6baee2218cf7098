#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tandem/codes.hpp"
#include "tandem/word.hpp"

namespace tandem {

// SplitMix64: a seedable portable 64-bit generator.  Per-trial streams are
// derived by hashing (seed, trial index), so parallel and serial runs of an
// experiment draw identical values per trial.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Unbiased uniform draw from [0, bound) by rejection sampling.
  std::uint64_t next_below(std::uint64_t bound);

  static std::uint64_t mix(std::uint64_t z);

  // Stream split rule: stream(seed, i) starts from
  // mix(seed) xor mix(~i * 0xDA942042E4DD58B5).
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t state_;
};

struct ChannelConfig {
  LengthSet lengths = LengthSet::fixed(1);
  int duplications = 0;  // exact duplication count per transmission
  std::uint64_t seed = 0;
  long long trials = 1;
  int threads = 1;
  int max_error_examples = 5;
};

// Applies `duplications` uniformly random tandem duplications: each step
// samples (i, k) uniformly over all valid sites with k in `lengths`.
// Words too short for every permitted length pass through unchanged.
Word transmit(const Word& x, const LengthSet& lengths, int duplications, SplitMix64& rng);

struct SimReport {
  long long trials = 0;
  long long successes = 0;
  long long failures = 0;
  double mean_received_length = 0.0;
  std::vector<std::string> error_examples;

  std::string to_text() const;

  bool operator==(const SimReport&) const = default;
};

// Monte Carlo loop: sample a codeword uniformly, transmit, decode with the
// decoder matching the codebook mode, and tally exact recoveries.
// Deterministic given the seed, independent of the thread count.
SimReport run_experiment(const Codebook& code, const ChannelConfig& cfg);

}  // namespace tandem
