#include "tandem/transform.hpp"

#include <numeric>

namespace tandem {

long long ZeroSignature::l1_weight() const {
  return std::accumulate(counts.begin(), counts.end(), 0ll);
}

long long l1_distance(const ZeroSignature& a, const ZeroSignature& b) {
  if (a.counts.size() != b.counts.size()) {
    throw std::invalid_argument("signature lengths differ");
  }
  long long d = 0;
  for (std::size_t i = 0; i < a.counts.size(); ++i) {
    d += std::abs(a.counts[i] - b.counts[i]);
  }
  return d;
}

TransformPair phi(const Word& x, int k) {
  if (k < 1 || x.size() < k) throw std::invalid_argument("phi requires |x| >= k >= 1");
  const int q = x.alphabet();
  std::vector<Symbol> z(static_cast<std::size_t>(x.size() - k));
  for (int i = 0; i + k < x.size(); ++i) {
    z[static_cast<std::size_t>(i)] = ((x[i + k] - x[i]) % q + q) % q;
  }
  return {x.prefix(k), Word(std::move(z), q)};
}

Word phi_inverse(const TransformPair& p) {
  const int q = p.alphabet();
  std::vector<Symbol> x = p.y.symbols();
  x.reserve(x.size() + p.z.symbols().size());
  for (int i = 0; i < p.z.size(); ++i) {
    x.push_back((x[static_cast<std::size_t>(i)] + p.z[i]) % q);
  }
  return Word(std::move(x), q);
}

TransformPair zeta(const TransformPair& p, int i) {
  if (i < 0 || i > p.z.size()) return p;
  std::vector<Symbol> z = p.z.symbols();
  z.insert(z.begin() + i, static_cast<std::size_t>(p.order()), 0);
  return {p.y, Word(std::move(z), p.alphabet())};
}

std::vector<long long> zero_run_lengths(const Word& z) {
  std::vector<long long> runs{0};
  for (int i = 0; i < z.size(); ++i) {
    if (z[i] == 0) {
      ++runs.back();
    } else {
      runs.push_back(0);
    }
  }
  return runs;
}

int hamming_weight(const Word& z) {
  int w = 0;
  for (int i = 0; i < z.size(); ++i) w += z[i] != 0;
  return w;
}

namespace {

std::vector<Symbol> nonzero_symbols(const Word& z) {
  std::vector<Symbol> out;
  for (int i = 0; i < z.size(); ++i) {
    if (z[i] != 0) out.push_back(z[i]);
  }
  return out;
}

Word from_runs(const std::vector<long long>& runs, const std::vector<Symbol>& nonzeros, int q) {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    out.insert(out.end(), static_cast<std::size_t>(runs[i]), 0);
    if (i < nonzeros.size()) out.push_back(nonzeros[i]);
  }
  return Word(std::move(out), q);
}

}  // namespace

Word mu(const Word& z, int k) {
  if (k < 1) throw std::invalid_argument("mu requires k >= 1");
  std::vector<long long> runs = zero_run_lengths(z);
  for (long long& r : runs) r %= k;
  return from_runs(runs, nonzero_symbols(z), z.alphabet());
}

ZeroSignature sigma(const Word& z, int k) {
  if (k < 1) throw std::invalid_argument("sigma requires k >= 1");
  std::vector<long long> runs = zero_run_lengths(z);
  for (long long& r : runs) r /= k;
  return {std::move(runs)};
}

Word reconstruct(const Word& m, const ZeroSignature& s, int k) {
  if (k < 1) throw std::invalid_argument("reconstruct requires k >= 1");
  if (mu(m, k) != m) throw std::invalid_argument("reconstruct requires a mu-reduced word");
  if (static_cast<int>(s.counts.size()) != hamming_weight(m) + 1) {
    throw std::invalid_argument("signature length must be wt_H(m) + 1");
  }
  std::vector<long long> runs = zero_run_lengths(m);
  for (std::size_t i = 0; i < runs.size(); ++i) runs[i] += k * s.counts[i];
  return from_runs(runs, nonzero_symbols(m), m.alphabet());
}

}  // namespace tandem
