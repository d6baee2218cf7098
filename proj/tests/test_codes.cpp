#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "tandem/capacity.hpp"
#include "tandem/channel.hpp"
#include "tandem/codes.hpp"
#include "tandem/roots.hpp"

using tandem::build_fixed_all;
using tandem::build_fixed_t;
using tandem::build_le2;
using tandem::build_le3;
using tandem::Codebook;
using tandem::CodeMode;
using tandem::decode_bounded;
using tandem::decode_fixed_all;
using tandem::decode_fixed_t;
using tandem::gen_l1_code;
using tandem::LengthSet;
using tandem::read_codebook;
using tandem::verify_code;
using tandem::Word;

namespace {

Word w(const char* text, int q) { return Word::parse(text, q); }

std::set<std::string> strings(const std::vector<Word>& words) {
  std::set<std::string> out;
  for (const Word& x : words) out.insert(x.str());
  return out;
}

long long congruence_class_count_fixed(int q, int n, int k) {
  std::set<oracle::Vec> roots;
  oracle::for_each_word(q, n, [&](const oracle::Vec& v) {
    roots.insert(tandem::root_fixed(oracle::to_word(v, q), k).symbols());
  });
  return static_cast<long long>(roots.size());
}

long long congruence_class_count_le2(int q, int n) {
  std::set<oracle::Vec> roots;
  oracle::for_each_word(q, n, [&](const oracle::Vec& v) {
    roots.insert(tandem::root_bounded(oracle::to_word(v, q), 2).symbols());
  });
  return static_cast<long long>(roots.size());
}

}  // namespace

TEST_CASE("build_fixed_all reproduces the published binary length-4 code") {
  const Codebook code = build_fixed_all(2, 4, 1);
  CHECK(strings(code.codewords) ==
        std::set<std::string>{"0000", "0111", "0100", "0101", "1111", "1000", "1011", "1010"});
}

TEST_CASE("build_fixed_all basics") {
  const Codebook tiny = build_fixed_all(3, 2, 2);
  CHECK(tiny.codewords.size() == 9);  // n = k: every word of length k

  // Size formula: sum over i of q^k * count_rll(n - (i+1)k).
  for (int q = 2; q <= 3; ++q) {
    for (int k = 1; k <= 2; ++k) {
      for (int n = k; n <= 7; ++n) {
        const Codebook code = build_fixed_all(q, n, k);
        unsigned long long expected = 0;
        unsigned long long qk = 1;
        for (int i = 0; i < k; ++i) qk *= static_cast<unsigned long long>(q);
        for (int i = 0; (i + 1) * k <= n; ++i) {
          expected += qk * tandem::count_rll(n - (i + 1) * k, q, k);
        }
        CHECK(code.codewords.size() == expected);
        // Sandwich bound from the capacity proof.
        CHECK(code.codewords.size() >= qk * tandem::count_rll(n - k, q, k));
        CHECK(code.codewords.size() <=
              static_cast<unsigned long long>(n) * qk * tandem::count_rll(n - k, q, k));
      }
    }
  }
  CHECK_THROWS_AS(build_fixed_all(2, 1, 2), std::invalid_argument);
}

TEST_CASE("build_fixed_all is optimal: one codeword per congruence class") {
  for (int k = 1; k <= 2; ++k) {
    for (int n = k; n <= 8; ++n) {
      CHECK(static_cast<long long>(build_fixed_all(2, n, k).codewords.size()) ==
            congruence_class_count_fixed(2, n, k));
    }
  }
}

TEST_CASE("decode_fixed_all worked examples") {
  const Codebook code = build_fixed_all(2, 4, 1);
  CHECK(decode_fixed_all(code, w("01100", 2)) == w("0100", 2));
  CHECK(decode_fixed_all(code, w("01000", 2)) == w("0100", 2));
  for (const Word& c : code.codewords) CHECK(decode_fixed_all(code, c) == c);
  CHECK_THROWS_AS(decode_fixed_all(code, w("010101", 2)), tandem::DecodeError);
}

TEST_CASE("decode_fixed_all inverts the channel exhaustively at small scale") {
  const Codebook code = build_fixed_all(2, 5, 2);
  for (const Word& c : code.codewords) {
    for (const Word& r : descendant_cone_within(c, LengthSet::fixed(2), 2)) {
      CHECK(decode_fixed_all(code, r) == c);
    }
  }
}

TEST_CASE("gen_l1_code") {
  // Distance 1 admits every weight-w composition.
  CHECK(gen_l1_code(3, 2, 1).words.size() == 6);
  const auto code = gen_l1_code(2, 2, 3);
  CHECK(code.words == std::vector<std::vector<long long>>{{0, 2}, {2, 0}});
  CHECK(gen_l1_code(1, 5, 3).words == std::vector<std::vector<long long>>{{5}});
  // Pairwise distances respect the declared minimum.
  const auto big = gen_l1_code(4, 3, 2);
  for (std::size_t i = 0; i < big.words.size(); ++i) {
    for (std::size_t j = i + 1; j < big.words.size(); ++j) {
      long long d = 0;
      for (std::size_t p = 0; p < big.words[i].size(); ++p) {
        d += std::abs(big.words[i][p] - big.words[j][p]);
      }
      CHECK(d >= 2);
    }
  }
}

TEST_CASE("build_fixed_t basics") {
  // t = 0 admits every word.
  CHECK(build_fixed_t(2, 4, 1, 0).codewords.size() == 16);
  CHECK(build_fixed_t(2, 5, 2, 0).codewords.size() == 32);

  // Every congruent codeword pair is far enough apart to keep the 1-step
  // cones disjoint: total-work distance >= 2(t+1) = 4.  At (n, k) = (6, 2)
  // every bucket is a singleton; k = 1 gives buckets with real choices.
  for (const int k : {1, 2}) {
    const Codebook code = build_fixed_t(2, 6, k, 1);
    int congruent_pairs = 0;
    for (std::size_t i = 0; i < code.codewords.size(); ++i) {
      for (std::size_t j = i + 1; j < code.codewords.size(); ++j) {
        if (!congruent(code.codewords[i], code.codewords[j], LengthSet::fixed(k))) continue;
        ++congruent_pairs;
        CHECK(tandem::distance(code.codewords[i], code.codewords[j], k) >= 2);
        CHECK(tandem::distance(code.codewords[i], code.codewords[j], k) >= 4);
      }
    }
    if (k == 1) CHECK(congruent_pairs > 0);
    CHECK(verify_code(code, 1, 6 + 2 * k));
  }

  // Huge t leaves one codeword per class, the same size as the *-code.
  CHECK(build_fixed_t(2, 5, 1, 100).codewords.size() ==
        build_fixed_all(2, 5, 1).codewords.size());
  CHECK(build_fixed_t(2, 5, 1, 100).codewords == build_fixed_all(2, 5, 1).codewords);
}

TEST_CASE("decode_fixed_t corrects single duplications exhaustively") {
  for (const int k : {1, 2}) {
    const Codebook code = build_fixed_t(2, 6, k, 1);
    for (const Word& c : code.codewords) {
      CHECK(decode_fixed_t(code, c, 1) == c);
      for (const Word& r : descendant_cone(c, LengthSet::fixed(k), 1)) {
        CHECK(decode_fixed_t(code, r, 1) == c);
      }
    }
  }
  const Codebook code = build_fixed_t(2, 6, 2, 1);
  CHECK_THROWS_AS(decode_fixed_t(code, w("011", 2), 1), tandem::DecodeError);
}

TEST_CASE("bounded constructions") {
  CHECK(strings(build_le3(2, 3).codewords) ==
        std::set<std::string>{"000", "111", "011", "100", "010", "101"});
  CHECK(strings(build_le2(2, 3).codewords) ==
        std::set<std::string>{"000", "111", "011", "100", "010", "101"});
  // Size equals the sum of irreducible counts per length.
  long long expected = 0;
  for (int i = 1; i <= 4; ++i) {
    long long count = 0;
    oracle::for_each_word(3, i, [&](const oracle::Vec& v) {
      count += oracle::naive_squares(v, oracle::up_to(3)).empty();
    });
    expected += count;
  }
  CHECK(static_cast<long long>(build_le3(3, 4).codewords.size()) == expected);
}

TEST_CASE("build_le2 is optimal: one codeword per class with a length-n member") {
  for (int q = 2; q <= 3; ++q) {
    for (int n = 1; n <= 6; ++n) {
      CHECK(static_cast<long long>(build_le2(q, n).codewords.size()) ==
            congruence_class_count_le2(q, n));
    }
  }
}

TEST_CASE("binary irreducible words cap at length 3, so le2 and le3 coincide") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(build_le2(2, n).codewords == build_le3(2, n).codewords);
  }
  for (int n = 4; n <= 8; ++n) {
    CHECK(tandem::irr_bounded_words(2, n, 2).empty());
    CHECK(tandem::irr_bounded_words(2, n, 3).empty());
  }
}

TEST_CASE("transform-domain irreducible enumeration matches brute force") {
  for (int q = 2; q <= 3; ++q) {
    for (int k = 1; k <= 3; ++k) {
      for (int n = k; n <= 7; ++n) {
        std::vector<Word> brute;
        oracle::for_each_word(q, n, [&](const oracle::Vec& v) {
          if (oracle::naive_squares(v, {k}).empty()) brute.push_back(oracle::to_word(v, q));
        });
        const auto enumerated = tandem::irr_fixed_words(q, n, k);
        CHECK(enumerated == brute);
        CHECK(enumerated.size() == tandem::count_irr_fixed(n, q, k));
      }
    }
  }
}

TEST_CASE("decode_bounded worked examples") {
  const Codebook le2 = build_le2(2, 3);
  CHECK(decode_bounded(le2, w("00110", 2)) == w("010", 2));
  CHECK(oracle::cone_contains({0, 1, 0}, {0, 0, 1, 1, 0}, oracle::up_to(2)));
  for (const Word& c : le2.codewords) CHECK(decode_bounded(le2, c) == c);
  const Codebook le3 = build_le3(3, 4);
  // 012122 deduplicates to the root 012, which pads back to the codeword.
  CHECK(decode_bounded(le3, w("012122", 3)) == w("0122", 3));
  CHECK(oracle::cone_contains({0, 1, 2, 2}, {0, 1, 2, 1, 2, 2}, oracle::up_to(3)));
  // 0120120 is its own story: its root is the four-letter 0120.
  CHECK(decode_bounded(le3, w("0120120", 3)) == w("0120", 3));
  CHECK(oracle::cone_contains({0, 1, 2, 0}, {0, 1, 2, 0, 1, 2, 0}, oracle::up_to(3)));
  CHECK_THROWS_AS(decode_bounded(build_le2(2, 2), w("010", 2)), tandem::DecodeError);
}

TEST_CASE("decode_bounded inverts the bounded channel") {
  const Codebook code = build_le3(2, 4);
  for (const Word& c : code.codewords) {
    for (const Word& r : descendant_cone_within(c, LengthSet::up_to(3), 2)) {
      CHECK(decode_bounded(code, r) == c);
    }
  }
}

TEST_CASE("verify_code") {
  CHECK(verify_code(build_fixed_all(2, 4, 1), std::nullopt, 8));
  CHECK(verify_code({w("0101", 2)}, LengthSet::fixed(2), std::nullopt, 8));
  CHECK_FALSE(verify_code({w("01", 2), w("0101", 2)}, LengthSet::fixed(2), std::nullopt, 8));
  CHECK(verify_code(build_le2(2, 4), std::nullopt, 8));
  CHECK(verify_code(build_fixed_t(2, 6, 2, 1), 1, 10));
}

TEST_CASE("a code passes verify_code(t) iff its signature buckets keep distance 2(t+1)") {
  // Same-bucket signatures have equal weight, so the smallest meeting time
  // of two codewords is half their l1 distance; disjoint t-cones are
  // therefore exactly "l1 distance > 2t" per bucket.  Random small
  // codebooks over Z_2^n, checked both ways against brute-force cones.
  tandem::SplitMix64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng.next_below(3));
    const int k = 1 + static_cast<int>(rng.next_below(2));
    const int t = static_cast<int>(rng.next_below(3));
    std::set<Word> chosen;
    const int size = 2 + static_cast<int>(rng.next_below(7));
    for (int i = 0; i < size; ++i) {
      std::vector<int> v;
      for (int j = 0; j < n; ++j) v.push_back(static_cast<int>(rng.next_below(2)));
      chosen.insert(Word(v, 2));
    }
    const std::vector<Word> words(chosen.begin(), chosen.end());

    bool bucket_ok = true;
    for (std::size_t i = 0; i < words.size() && bucket_ok; ++i) {
      for (std::size_t j = i + 1; j < words.size() && bucket_ok; ++j) {
        const auto pi = phi(words[i], k);
        const auto pj = phi(words[j], k);
        if (pi.y != pj.y || mu(pi.z, k) != mu(pj.z, k)) continue;
        if (l1_distance(sigma(pi.z, k), sigma(pj.z, k)) < 2 * (t + 1)) bucket_ok = false;
      }
    }
    const bool cones_ok = verify_code(words, LengthSet::fixed(k), t, n + t * k);
    CHECK(bucket_ok == cones_ok);
  }
}

TEST_CASE("signature weight and length formulas hold per bucket") {
  const int q = 2, n = 6, k = 2;
  const Codebook code = build_fixed_t(q, n, k, 1);
  for (const Word& c : code.codewords) {
    const auto p = phi(c, k);
    const Word reduced = mu(p.z, k);
    const auto sig = sigma(p.z, k);
    CHECK(static_cast<int>(sig.counts.size()) == hamming_weight(reduced) + 1);
    CHECK(sig.l1_weight() == (n - k - reduced.size()) / k);
  }
}

TEST_CASE("codebook file round trip") {
  const Codebook code = build_fixed_all(2, 4, 1);
  std::ostringstream out;
  write_codebook(code, out);
  const std::string text = out.str();
  CHECK(text.rfind("# q=2\n# n=4\n# mode=fixed-all\n# k=1\n# t=*\n", 0) == 0);
  CHECK(text.back() == '\n');
  // Codeword lines are sorted.
  std::istringstream in(text);
  const Codebook loaded = read_codebook(in);
  CHECK(loaded.q == code.q);
  CHECK(loaded.n == code.n);
  CHECK(loaded.mode == code.mode);
  CHECK(loaded.k == code.k);
  CHECK(loaded.t == code.t);
  CHECK(loaded.codewords == code.codewords);

  const Codebook t_code = build_fixed_t(2, 5, 2, 1);
  std::ostringstream out2;
  write_codebook(t_code, out2);
  std::istringstream in2(out2.str());
  const Codebook loaded2 = read_codebook(in2);
  CHECK(loaded2.t == 1);
  CHECK(loaded2.codewords == t_code.codewords);

  std::istringstream bad("# q=2\n0101\n");
  CHECK_THROWS_AS(read_codebook(bad), tandem::ParseError);
}
