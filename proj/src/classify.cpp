#include "tandem/classify.hpp"

#include <algorithm>
#include <functional>

namespace tandem {

Word witness_unary(int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("witness_unary requires k, m >= 1");
  if (m % k == 0) {
    throw std::invalid_argument("witness_unary requires m not divisible by k");
  }
  return Word(std::vector<Symbol>(static_cast<std::size_t>(k + 2 * m), 0), 1);
}

Word witness_two_letter(int k, int m) {
  if (k < 1 || m < 1 || static_cast<long long>(k) * m <= 1) {
    throw std::invalid_argument("witness_two_letter requires k*m > 1");
  }
  if (m % k != 0) {
    throw std::invalid_argument("witness_two_letter requires k | m; use witness_unary otherwise");
  }
  // v_i alternates between length-k blocks of a and b, with the final
  // letter copied from position m.
  std::vector<Symbol> v(static_cast<std::size_t>(k + m));
  for (int i = 1; i < k + m; ++i) {
    const int block = (i + k - 1) / k;  // ceil(i / k)
    v[static_cast<std::size_t>(i - 1)] = block % 2 == 1 ? 0 : 1;
  }
  v[static_cast<std::size_t>(k + m - 1)] = v[static_cast<std::size_t>(m - 1)];
  // z = (v_1 .. v_{k+m})^2 v_{m+1} .. v_{k+m-1}
  std::vector<Symbol> z;
  z.insert(z.end(), v.begin(), v.end());
  z.insert(z.end(), v.begin(), v.end());
  z.insert(z.end(), v.begin() + m, v.begin() + (k + m - 1));
  return Word(std::move(z), 2);
}

namespace {

Word three_letter_word(const std::string& pattern, int m) {
  // pattern letters: 'a' -> 0, 'B' -> b^{m-3} block, others literal.
  std::vector<Symbol> out;
  for (char c : pattern) {
    if (c == 'B') {
      out.insert(out.end(), static_cast<std::size_t>(m - 3), 1);
    } else {
      out.push_back(c - 'a');
    }
  }
  return Word(std::move(out), 3);
}

}  // namespace

Word witness_12v(int m) {
  if (m < 4) throw std::invalid_argument("witness_12v requires min(V) >= 4");
  return three_letter_word("aBcaaBca", m);  // a b^{m-3} c a a b^{m-3} c a
}

Word witness_123v(int m) {
  if (m < 4) throw std::invalid_argument("witness_123v requires min(V) >= 4");
  return three_letter_word("aBcbaBcbc", m);  // a b^{m-3} c b a b^{m-3} c b c
}

ClassificationVerdict classify(int alphabet_size, const LengthSet& lengths) {
  if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be >= 1");
  const std::vector<int>& u = lengths.lengths();
  const int k = u.front();

  if (alphabet_size == 1) {
    for (int m : u) {
      if (m % k != 0) {
        return {false, "unary alphabet with a length not divisible by min(U)", witness_unary(k, m)};
      }
    }
    return {true, "unary alphabet, U a subset of min(U)*N", std::nullopt};
  }

  if (u.size() == 1) {
    return {true, "single duplication length", std::nullopt};
  }

  const bool has12 = lengths.contains(1) && lengths.contains(2);
  if (alphabet_size == 2 && has12) {
    return {true, "binary alphabet with {1,2} in U", std::nullopt};
  }
  if (alphabet_size >= 3 && has12) {
    if (!lengths.contains(3)) {
      if (u == std::vector<int>{1, 2}) return {true, "U = {1,2}", std::nullopt};
      int m = 0;
      for (int len : u) {
        if (len >= 4) {
          m = len;
          break;
        }
      }
      return {false, "U = {1,2} plus lengths >= 4", witness_12v(m)};
    }
    if (u == std::vector<int>{1, 2, 3}) return {true, "U = {1,2,3}", std::nullopt};
    // The canonical non-unique exhibit for U = {2,3,4} is kept below; here
    // U contains {1,2,3} plus something >= 4.
    int m = 0;
    for (int len : u) {
      if (len >= 4) {
        m = len;
        break;
      }
    }
    return {false, "U = {1,2,3} plus lengths >= 4", witness_123v(m)};
  }

  // {1,2} is not contained in U and |U| >= 2.
  if (alphabet_size >= 3 && u == std::vector<int>{2, 3, 4}) {
    // The canonical two-square exhibit over the letters 1,2,3: deduplicating
    // the half-4 square first leads to 123, the half-2 square first to
    // 1232123.  Only its three distinct letters matter.
    return {false, "U = {2,3,4} over >= 3 letters", Word::parse("123212323", 4)};
  }
  for (int m : u) {
    if (m % k != 0) {
      return {false, "length not divisible by min(U)", witness_unary(k, m)};
    }
  }
  // Two smallest lengths are k and k + m with m a positive multiple of k.
  const int m = u[1] - k;
  return {false, "two smallest lengths {k, k+m} with k | m", witness_two_letter(k, m)};
}

ExhaustiveCheckResult exhaustive_check(int alphabet_size, const LengthSet& lengths, int max_len,
                                       std::size_t node_budget) {
  if (alphabet_size < 1 || max_len < 0) {
    throw std::invalid_argument("exhaustive_check requires alphabet >= 1 and max_len >= 0");
  }
  detail::RootMemo memo;
  std::vector<Symbol> cur;
  const std::function<std::optional<Word>(int)> fill = [&](int remaining) -> std::optional<Word> {
    if (remaining == 0) {
      const Word w(cur, alphabet_size);
      if (detail::roots_memoized(w, lengths, memo, node_budget).size() > 1) return w;
      return std::nullopt;
    }
    for (Symbol s = 0; s < alphabet_size; ++s) {
      cur.push_back(s);
      if (auto found = fill(remaining - 1)) return found;
      cur.pop_back();
    }
    return std::nullopt;
  };
  // Shorter words first, so the reported counterexample is a shortest one.
  for (int len = 1; len <= max_len; ++len) {
    cur.clear();
    if (auto found = fill(len)) return {false, found};
  }
  return {true, std::nullopt};
}

}  // namespace tandem
