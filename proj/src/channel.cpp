#include "tandem/channel.hpp"

#include <algorithm>
#include <cstdio>
#include <thread>

namespace tandem {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below requires bound >= 1");
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::uint64_t SplitMix64::mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix(seed) ^ mix(~index * 0xDA942042E4DD58B5ull));
}

Word transmit(const Word& x, const LengthSet& lengths, int duplications, SplitMix64& rng) {
  if (duplications < 0) throw std::invalid_argument("duplication count must be >= 0");
  Word w = x;
  for (int step = 0; step < duplications; ++step) {
    std::uint64_t sites = 0;
    for (int k : lengths.lengths()) {
      if (k <= w.size()) sites += static_cast<std::uint64_t>(w.size() - k + 1);
    }
    if (sites == 0) break;  // word too short for every permitted length
    std::uint64_t r = rng.next_below(sites);
    for (int k : lengths.lengths()) {
      if (k > w.size()) continue;
      const std::uint64_t count = static_cast<std::uint64_t>(w.size() - k + 1);
      if (r < count) {
        w = duplicate(w, static_cast<int>(r), k);
        break;
      }
      r -= count;
    }
  }
  return w;
}

namespace {

struct TrialOutcome {
  bool success = false;
  int received_length = 0;
  std::string example;  // populated only on failure
};

TrialOutcome run_trial(const Codebook& code, const ChannelConfig& cfg, long long trial_index) {
  SplitMix64 rng = SplitMix64::stream(cfg.seed, static_cast<std::uint64_t>(trial_index));
  const Word& sent =
      code.codewords[static_cast<std::size_t>(rng.next_below(code.codewords.size()))];
  const Word received = transmit(sent, cfg.lengths, cfg.duplications, rng);
  TrialOutcome out;
  out.received_length = received.size();
  std::string decoded_text;
  try {
    const Word decoded = decode(code, received);
    out.success = decoded == sent;
    decoded_text = decoded.str();
  } catch (const DecodeError& e) {
    out.success = false;
    decoded_text = std::string("<") + e.what() + ">";
  }
  if (!out.success) {
    out.example = "trial=" + std::to_string(trial_index) + " sent=" + sent.str() +
                  " received=" + received.str() + " decoded=" + decoded_text;
  }
  return out;
}

}  // namespace

std::string SimReport::to_text() const {
  char line[160];
  std::snprintf(line, sizeof line, "trials=%lld successes=%lld failures=%lld mean_len=%.6f",
                trials, successes, failures, mean_received_length);
  std::string out(line);
  out.push_back('\n');
  for (const std::string& example : error_examples) {
    out += "failure: ";
    out += example;
    out.push_back('\n');
  }
  return out;
}

SimReport run_experiment(const Codebook& code, const ChannelConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("run_experiment requires trials >= 1");
  if (code.codewords.empty()) throw std::invalid_argument("run_experiment requires a nonempty codebook");
  const LengthSet correctable = code.channel_lengths();
  for (int k : cfg.lengths.lengths()) {
    if (!correctable.contains(k)) {
      throw std::invalid_argument("channel lengths incompatible with the codebook mode");
    }
  }

  const int threads = std::max(1, cfg.threads);
  std::vector<std::uint8_t> success(static_cast<std::size_t>(cfg.trials));
  std::vector<int> lengths(static_cast<std::size_t>(cfg.trials));
  std::vector<std::pair<long long, std::string>> failures_by_trial;
  std::vector<std::vector<std::pair<long long, std::string>>> failure_parts(
      static_cast<std::size_t>(threads));

  auto worker = [&](int part) {
    for (long long trial = part; trial < cfg.trials; trial += threads) {
      TrialOutcome out = run_trial(code, cfg, trial);
      success[static_cast<std::size_t>(trial)] = out.success ? 1 : 0;
      lengths[static_cast<std::size_t>(trial)] = out.received_length;
      if (!out.success) failure_parts[static_cast<std::size_t>(part)].emplace_back(trial, out.example);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int p = 0; p < threads; ++p) pool.emplace_back(worker, p);
    for (std::thread& th : pool) th.join();
  }

  SimReport report;
  report.trials = cfg.trials;
  unsigned long long total_length = 0;
  for (long long trial = 0; trial < cfg.trials; ++trial) {
    report.successes += success[static_cast<std::size_t>(trial)];
    total_length += static_cast<unsigned long long>(lengths[static_cast<std::size_t>(trial)]);
  }
  report.failures = report.trials - report.successes;
  // Integer accumulation keeps the mean identical across thread counts.
  report.mean_received_length =
      static_cast<double>(total_length) / static_cast<double>(report.trials);
  for (auto& part : failure_parts) {
    failures_by_trial.insert(failures_by_trial.end(), std::make_move_iterator(part.begin()),
                             std::make_move_iterator(part.end()));
  }
  std::sort(failures_by_trial.begin(), failures_by_trial.end());
  for (const auto& [trial, example] : failures_by_trial) {
    if (static_cast<int>(report.error_examples.size()) >= cfg.max_error_examples) break;
    report.error_examples.push_back(example);
  }
  return report;
}

}  // namespace tandem
