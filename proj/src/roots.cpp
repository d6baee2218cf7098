#include "tandem/roots.hpp"

#include <algorithm>
#include <optional>

namespace tandem {

Word root_fixed(const Word& x, int k) {
  if (k < 1) throw std::invalid_argument("root_fixed requires k >= 1");
  if (x.size() < k) return x;  // no rule applies
  TransformPair p = phi(x, k);
  return phi_inverse({p.y, mu(p.z, k)});
}

Word root_bounded(const Word& x, int k) {
  if (k < 1 || k > 3) {
    throw std::invalid_argument("root_bounded requires k in {1,2,3}; use roots_general beyond");
  }
  Word w = x;
  for (;;) {
    std::optional<Square> first;
    for (int i = 0; i < w.size() && !first; ++i) {
      for (int len = 1; len <= k; ++len) {
        if (is_square_at(w, i, len)) {
          first = Square{i, len};
          break;
        }
      }
    }
    if (!first) return w;
    w = deduplicate(w, first->start, first->half_length);
  }
}

namespace detail {

const std::vector<Word>& roots_memoized(const Word& w, const LengthSet& lengths, RootMemo& memo,
                                        std::size_t node_budget) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  std::vector<Square> squares = find_squares(w, lengths);
  std::vector<Word> roots;
  if (squares.empty()) {
    roots.push_back(w);
  } else {
    for (const Square& sq : squares) {
      const std::vector<Word>& sub =
          roots_memoized(deduplicate(w, sq.start, sq.half_length), lengths, memo, node_budget);
      roots.insert(roots.end(), sub.begin(), sub.end());
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  }
  if (memo.size() >= node_budget) {
    throw ResourceLimitError("root search exceeded its node budget");
  }
  return memo.emplace(w, std::move(roots)).first->second;
}

}  // namespace detail

RootSet roots_general(const Word& x, const LengthSet& lengths, std::size_t node_budget) {
  detail::RootMemo memo;
  return {detail::roots_memoized(x, lengths, memo, node_budget), lengths};
}

bool congruent(const Word& a, const Word& b, const LengthSet& lengths) {
  if (lengths.kind() == LengthSet::Kind::kFixed) {
    return root_fixed(a, lengths.min_length()) == root_fixed(b, lengths.min_length());
  }
  if (lengths.kind() == LengthSet::Kind::kUpTo && lengths.max_length() <= 3) {
    return root_bounded(a, lengths.max_length()) == root_bounded(b, lengths.max_length());
  }
  return roots_general(a, lengths).roots == roots_general(b, lengths).roots;
}

long long distance(const Word& a, const Word& b, int k) {
  if (a.size() != b.size()) throw std::invalid_argument("distance requires equal lengths");
  if (a == b) return 0;
  if (!congruent(a, b, LengthSet::fixed(k))) {
    throw std::invalid_argument("distance requires k-congruent words");
  }
  return l1_distance(sigma(phi(a, k).z, k), sigma(phi(b, k).z, k));
}

Word join_fixed(const Word& a, const Word& b, int k) {
  if (!congruent(a, b, LengthSet::fixed(k))) {
    throw std::invalid_argument("join_fixed requires k-congruent words");
  }
  if (a == b) return a;
  TransformPair pa = phi(a, k);
  TransformPair pb = phi(b, k);
  std::vector<long long> ra = zero_run_lengths(pa.z);
  std::vector<long long> rb = zero_run_lengths(pb.z);
  // Congruence gives equal run counts and runwise-equal residues mod k.
  std::vector<Symbol> nonzeros;
  for (int i = 0; i < pa.z.size(); ++i) {
    if (pa.z[i] != 0) nonzeros.push_back(pa.z[i]);
  }
  std::vector<Symbol> z;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    z.insert(z.end(), static_cast<std::size_t>(std::max(ra[i], rb[i])), 0);
    if (i < nonzeros.size()) z.push_back(nonzeros[i]);
  }
  return phi_inverse({pa.y, Word(std::move(z), a.alphabet())});
}

namespace {

struct Run {
  Symbol symbol;
  long long count;
};

std::vector<Run> run_decompose(const Word& w) {
  std::vector<Run> runs;
  for (int i = 0; i < w.size(); ++i) {
    if (!runs.empty() && runs.back().symbol == w[i]) {
      ++runs.back().count;
    } else {
      runs.push_back({w[i], 1});
    }
  }
  return runs;
}

// A parsed level j of the <=2 descendant language relative to root
// a_1...a_m: the block pairs (a_j^p a_{j+1}^q); the leading item of every
// level after the first has no a_j part, recorded as p = 0.
struct LevelParse {
  std::vector<std::pair<long long, long long>> items;  // (p, q) exponents
};

// Backtracking parse of the run sequence against the normal form
// a1+ a2+ (a1+ a2+)* a3+ (a2+ a3+)* ... a_m+ (a_{m-1}+ a_m+)*.
// Preference: extend the current level with another pair before moving on.
struct Le2Parser {
  const std::vector<Run>& runs;
  const std::vector<Symbol>& root;
  std::vector<std::vector<char>> dead;  // memoized failures per (run, level)

  Le2Parser(const std::vector<Run>& r, const std::vector<Symbol>& v)
      : runs(r), root(v), dead(r.size() + 1, std::vector<char>(v.size(), 0)) {}

  bool parse(std::size_t idx, std::size_t level, std::vector<LevelParse>& out) {
    const std::size_t m = root.size();
    if (level + 2 == m && idx == runs.size()) return true;  // finished the last level
    if (dead[idx][level]) return false;
    // Another (a_level, a_{level+1}) pair at the current level.
    if (idx + 1 < runs.size() && runs[idx].symbol == root[level] &&
        runs[idx + 1].symbol == root[level + 1]) {
      out[level].items.push_back({runs[idx].count, runs[idx + 1].count});
      if (parse(idx + 2, level, out)) return true;
      out[level].items.pop_back();
    }
    // Start the next level with its mandatory a_{level+2} block.
    if (level + 2 < m && idx < runs.size() && runs[idx].symbol == root[level + 2]) {
      out[level + 1].items.push_back({0, runs[idx].count});
      if (parse(idx + 1, level + 1, out)) return true;
      out[level + 1].items.pop_back();
    }
    dead[idx][level] = 1;
    return false;
  }
};

std::vector<LevelParse> parse_le2(const Word& w, const std::vector<Symbol>& root) {
  std::vector<Run> runs = run_decompose(w);
  std::vector<LevelParse> out(root.size() > 1 ? root.size() - 1 : 0);
  if (root.size() == 1) return out;
  Le2Parser parser(runs, root);
  // The first level opens with a mandatory (a1, a2) pair.
  if (runs.size() < 2 || runs[0].symbol != root[0] || runs[1].symbol != root[1]) {
    throw std::logic_error("word does not match its <=2 root normal form");
  }
  out[0].items.push_back({runs[0].count, runs[1].count});
  if (!parser.parse(2, 0, out)) {
    throw std::logic_error("word does not match its <=2 root normal form");
  }
  return out;
}

}  // namespace

Word join_le2(const Word& a, const Word& b) {
  Word root = root_bounded(a, 2);
  if (root != root_bounded(b, 2)) {
    throw std::invalid_argument("join_le2 requires <=2-congruent words");
  }
  const std::vector<Symbol>& v = root.symbols();
  if (v.size() == 1) {
    // Single-letter root: both words are powers of that letter.
    return a.size() >= b.size() ? a : b;
  }
  std::vector<LevelParse> pa = parse_le2(a, v);
  std::vector<LevelParse> pb = parse_le2(b, v);
  std::vector<Symbol> out;
  auto emit = [&](Symbol s, long long count) {
    out.insert(out.end(), static_cast<std::size_t>(count), s);
  };
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    const auto& xs = pa[j].items;
    const auto& ys = pb[j].items;
    if (xs.size() == ys.size()) {
      // Equal pair counts: itemwise maxima only inflate runs of both words.
      for (std::size_t i = 0; i < xs.size(); ++i) {
        emit(v[j], std::max(xs[i].first, ys[i].first));
        emit(v[j + 1], std::max(xs[i].second, ys[i].second));
      }
    } else {
      // Different pair counts: fall back to uniform exponents, reachable
      // from both sides by pair splitting followed by run inflation.
      long long g = 1, h = 1;
      for (const auto& it : xs) {
        g = std::max(g, it.first);
        h = std::max(h, it.second);
      }
      for (const auto& it : ys) {
        g = std::max(g, it.first);
        h = std::max(h, it.second);
      }
      const std::size_t gamma = std::max(xs.size(), ys.size());
      for (std::size_t i = 0; i < gamma; ++i) {
        if (!(i == 0 && j > 0)) emit(v[j], g);  // levels past the first open with a bare a_{j+1} block
        emit(v[j + 1], h);
      }
    }
  }
  return Word(std::move(out), std::max(a.alphabet(), b.alphabet()));
}

}  // namespace tandem
