#include "tandem/codes.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <unordered_set>

#include "tandem/roots.hpp"

namespace tandem {

std::string code_mode_name(CodeMode mode) {
  switch (mode) {
    case CodeMode::kFixedAll: return "fixed-all";
    case CodeMode::kFixedT: return "fixed-t";
    case CodeMode::kLe2: return "le2";
    case CodeMode::kLe3: return "le3";
  }
  throw std::invalid_argument("unknown code mode");
}

CodeMode parse_code_mode(std::string_view name) {
  if (name == "fixed-all") return CodeMode::kFixedAll;
  if (name == "fixed-t") return CodeMode::kFixedT;
  if (name == "le2") return CodeMode::kLe2;
  if (name == "le3") return CodeMode::kLe3;
  throw ParseError("unknown code mode: " + std::string(name));
}

bool Codebook::contains(const Word& w) const {
  return std::binary_search(codewords.begin(), codewords.end(), w);
}

LengthSet Codebook::channel_lengths() const {
  switch (mode) {
    case CodeMode::kFixedAll:
    case CodeMode::kFixedT: return LengthSet::fixed(k);
    case CodeMode::kLe2: return LengthSet::up_to(2);
    case CodeMode::kLe3: return LengthSet::up_to(3);
  }
  throw std::invalid_argument("unknown code mode");
}

namespace {

void visit_compositions(int length, int weight, std::vector<long long>& cur,
                        const std::function<void(const std::vector<long long>&)>& visit) {
  if (length == 1) {
    cur.push_back(weight);
    visit(cur);
    cur.pop_back();
    return;
  }
  for (int first = 0; first <= weight; ++first) {
    cur.push_back(first);
    visit_compositions(length - 1, weight - first, cur, visit);
    cur.pop_back();
  }
}

long long l1_vector_distance(const std::vector<long long>& a, const std::vector<long long>& b) {
  long long d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

void visit_rll_words(int q, int length, int k, std::vector<Symbol>& cur,
                     const std::function<void(const std::vector<Symbol>&)>& visit) {
  if (length == 0) {
    visit(cur);
    return;
  }
  int trailing = 0;
  for (auto it = cur.rbegin(); it != cur.rend() && *it == 0; ++it) ++trailing;
  for (Symbol s = 0; s < q; ++s) {
    if (s == 0 && trailing + 1 >= k) continue;
    cur.push_back(s);
    visit_rll_words(q, length - 1, k, cur, visit);
    cur.pop_back();
  }
}

void visit_all_words(int q, int length, std::vector<Symbol>& cur,
                     const std::function<void(const std::vector<Symbol>&)>& visit) {
  if (length == 0) {
    visit(cur);
    return;
  }
  for (Symbol s = 0; s < q; ++s) {
    cur.push_back(s);
    visit_all_words(q, length - 1, cur, visit);
    cur.pop_back();
  }
}

Codebook finalize(Codebook code, std::vector<Word> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  code.codewords = std::move(words);
  return code;
}

}  // namespace

L1Code gen_l1_code(int m, int w, int d) {
  if (m < 1 || w < 0 || d < 1) throw std::invalid_argument("gen_l1_code requires m >= 1, w >= 0, d >= 1");
  L1Code code{m, w, d, {}};
  std::vector<long long> cur;
  visit_compositions(m, w, cur, [&](const std::vector<long long>& candidate) {
    for (const auto& admitted : code.words) {
      if (l1_vector_distance(admitted, candidate) < d) return;
    }
    code.words.push_back(candidate);
  });
  return code;
}

std::vector<Word> irr_fixed_words(int q, int n, int k) {
  if (n < k) throw std::invalid_argument("irr_fixed_words requires n >= k");
  std::vector<Word> out;
  std::vector<Symbol> prefix, tail;
  visit_all_words(q, k, prefix, [&](const std::vector<Symbol>& y) {
    visit_rll_words(q, n - k, k, tail, [&](const std::vector<Symbol>& z) {
      out.push_back(phi_inverse({Word(y, q), Word(z, q)}));
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> irr_bounded_words(int q, int n, int k_bound) {
  if (k_bound != 2 && k_bound != 3) throw std::invalid_argument("k_bound must be 2 or 3");
  std::vector<Word> out;
  std::vector<Symbol> cur;
  // Prefix-pruned enumeration: a square in a prefix survives in every
  // extension, so extensions only need to check squares ending at the new
  // last position.
  const std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(Word(cur, q));
      return;
    }
    for (Symbol s = 0; s < q; ++s) {
      cur.push_back(s);
      bool ok = true;
      const int len = static_cast<int>(cur.size());
      for (int half = 1; half <= k_bound && 2 * half <= len && ok; ++half) {
        bool equal = true;
        for (int j = 0; j < half && equal; ++j) {
          equal = cur[static_cast<std::size_t>(len - 2 * half + j)] ==
                  cur[static_cast<std::size_t>(len - half + j)];
        }
        ok = !equal;
      }
      if (ok) extend(remaining - 1);
      cur.pop_back();
    }
  };
  extend(n);
  return out;  // lexicographic by construction
}

Codebook build_fixed_all(int q, int n, int k) {
  if (q < 2 || k < 1 || n < k) throw std::invalid_argument("build_fixed_all requires q >= 2, n >= k >= 1");
  Codebook code;
  code.q = q;
  code.n = n;
  code.mode = CodeMode::kFixedAll;
  code.k = k;
  code.t = -1;
  std::vector<Word> words;
  for (int i = 0; i * k < n - k + 1; ++i) {
    // Irreducible words of length n - ik, zero-padded back to length n.
    std::vector<Symbol> prefix, tail;
    visit_all_words(q, k, prefix, [&](const std::vector<Symbol>& y) {
      visit_rll_words(q, n - (i + 1) * k, k, tail, [&](const std::vector<Symbol>& z) {
        std::vector<Symbol> padded = z;
        padded.insert(padded.end(), static_cast<std::size_t>(i * k), 0);
        words.push_back(phi_inverse({Word(y, q), Word(padded, q)}));
      });
    });
  }
  return finalize(std::move(code), std::move(words));
}

Codebook build_fixed_t(int q, int n, int k, long long t) {
  if (q < 2 || k < 1 || n < k) throw std::invalid_argument("build_fixed_t requires q >= 2, n >= k >= 1");
  if (t < 0) throw std::invalid_argument("build_fixed_t requires t >= 0");
  Codebook code;
  code.q = q;
  code.n = n;
  code.mode = CodeMode::kFixedT;
  code.k = k;
  code.t = t;
  // Signature membership is decided per (vector length, weight) component
  // code; admission sets are memoized across tails.
  std::map<std::pair<int, int>, std::set<std::vector<long long>>> component_codes;
  auto admitted = [&](const ZeroSignature& sig, int m, int w) {
    auto it = component_codes.find({m, w});
    if (it == component_codes.end()) {
      // Correcting t duplications needs signature distance > 2t: a received
      // word sits at most t above each candidate signature, and the weights
      // of same-bucket signatures are equal, so distance 2(t+1) is the
      // tight requirement.  Weight-w vectors are never further than 2w
      // apart, so the requirement saturates there.
      const int dist = static_cast<int>(std::min<long long>(2 * (t + 1), 2ll * w + 2));
      L1Code c = gen_l1_code(m, w, dist);
      it = component_codes.emplace(std::pair{m, w},
                                   std::set<std::vector<long long>>(c.words.begin(), c.words.end()))
               .first;
    }
    return it->second.count(sig.counts) > 0;
  };
  std::vector<Word> words;
  std::vector<Symbol> tail;
  visit_all_words(q, n - k, tail, [&](const std::vector<Symbol>& zsyms) {
    const Word z(zsyms, q);
    const Word reduced = mu(z, k);
    const ZeroSignature sig = sigma(z, k);
    const int m = hamming_weight(reduced) + 1;
    const int w = (n - k - reduced.size()) / k;
    if (!admitted(sig, m, w)) return;
    std::vector<Symbol> prefix;
    visit_all_words(q, k, prefix, [&](const std::vector<Symbol>& y) {
      words.push_back(phi_inverse({Word(y, q), z}));
    });
  });
  return finalize(std::move(code), std::move(words));
}

namespace {

Codebook build_bounded(int q, int n, int k_bound) {
  if (q < 2 || n < 1) throw std::invalid_argument("bounded constructions require q >= 2, n >= 1");
  Codebook code;
  code.q = q;
  code.n = n;
  code.mode = k_bound == 2 ? CodeMode::kLe2 : CodeMode::kLe3;
  code.k = k_bound;
  code.t = -1;
  std::vector<Word> words;
  for (int i = 1; i <= n; ++i) {
    for (const Word& w : irr_bounded_words(q, i, k_bound)) {
      words.push_back(suffix_extend(w, n - i));
    }
  }
  return finalize(std::move(code), std::move(words));
}

}  // namespace

Codebook build_le2(int q, int n) { return build_bounded(q, n, 2); }

Codebook build_le3(int q, int n) { return build_bounded(q, n, 3); }

Word decode_fixed_all(const Codebook& code, const Word& received) {
  if (received.size() < code.k) throw DecodeError("received word shorter than the transform order");
  const TransformPair p = phi(received, code.k);
  const Word reduced = mu(p.z, code.k);
  const int padding = code.n - code.k - reduced.size();
  if (padding < 0) throw DecodeError("received word is not a descendant of any length-n word");
  std::vector<Symbol> padded = reduced.symbols();
  padded.insert(padded.end(), static_cast<std::size_t>(padding), 0);
  const Word decoded = phi_inverse({p.y, Word(std::move(padded), code.q)});
  if (!code.contains(decoded)) throw DecodeError("received word decodes outside the codebook");
  return decoded;
}

Word decode_fixed_t(const Codebook& code, const Word& received, long long t) {
  if (received.size() < code.k) throw DecodeError("received word shorter than the transform order");
  if (received.size() < code.n || (received.size() - code.n) % code.k != 0) {
    throw DecodeError("received length is not n plus a multiple of k");
  }
  const TransformPair pr = phi(received, code.k);
  const Word reduced = mu(pr.z, code.k);
  const ZeroSignature sig_r = sigma(pr.z, code.k);
  const Word* match = nullptr;
  for (const Word& c : code.codewords) {
    const TransformPair pc = phi(c, code.k);
    if (pc.y != pr.y || mu(pc.z, code.k) != reduced) continue;
    const ZeroSignature sig_c = sigma(pc.z, code.k);
    bool below = true;
    long long gap = 0;
    for (std::size_t i = 0; i < sig_c.counts.size(); ++i) {
      if (sig_c.counts[i] > sig_r.counts[i]) {
        below = false;
        break;
      }
      gap += sig_r.counts[i] - sig_c.counts[i];
    }
    if (!below || gap > t) continue;
    if (match != nullptr) {
      // Bucket signature distance > 2t makes this unreachable.
      throw std::logic_error("ambiguous decode: code distance violated");
    }
    match = &c;
  }
  if (match == nullptr) throw DecodeError("no codeword within radius t of the received word");
  return *match;
}

Word decode_bounded(const Codebook& code, const Word& received) {
  const Word root = root_bounded(received, code.k);
  if (root.size() > code.n) throw DecodeError("root longer than the code length");
  return suffix_extend(root, code.n - root.size());
}

Word decode(const Codebook& code, const Word& received) {
  switch (code.mode) {
    case CodeMode::kFixedAll: return decode_fixed_all(code, received);
    case CodeMode::kFixedT: return decode_fixed_t(code, received, code.t);
    case CodeMode::kLe2:
    case CodeMode::kLe3: return decode_bounded(code, received);
  }
  throw std::invalid_argument("unknown code mode");
}

bool verify_code(const std::vector<Word>& words, const LengthSet& lengths, std::optional<int> t,
                 int max_len) {
  std::vector<std::vector<Word>> cones;
  cones.reserve(words.size());
  for (const Word& w : words) {
    cones.push_back(t ? descendant_cone_within(w, lengths, *t, max_len)
                      : descendant_cone_all(w, lengths, max_len));
  }
  for (std::size_t i = 0; i < cones.size(); ++i) {
    std::unordered_set<Word, WordHash> seen(cones[i].begin(), cones[i].end());
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      for (const Word& w : cones[j]) {
        if (seen.count(w)) return false;
      }
    }
  }
  return true;
}

bool verify_code(const Codebook& code, std::optional<int> t, int max_len) {
  return verify_code(code.codewords, code.channel_lengths(), t, max_len);
}

void write_codebook(const Codebook& code, std::ostream& os) {
  os << "# q=" << code.q << '\n';
  os << "# n=" << code.n << '\n';
  os << "# mode=" << code_mode_name(code.mode) << '\n';
  os << "# k=" << code.k << '\n';
  os << "# t=";
  if (code.t < 0) {
    os << '*';
  } else {
    os << code.t;
  }
  os << '\n';
  for (const Word& w : code.codewords) os << w.str() << '\n';
}

Codebook read_codebook(std::istream& is) {
  Codebook code;
  std::string line;
  std::map<std::string, std::string> header;
  std::vector<Word> words;
  bool in_header = true;
  std::vector<std::string> word_lines;
  while (std::getline(is, line)) {
    if (in_header && line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("malformed codebook header line: " + line);
      header[line.substr(2, eq - 2)] = line.substr(eq + 1);
      continue;
    }
    in_header = false;
    if (!line.empty()) word_lines.push_back(line);
  }
  for (const char* key : {"q", "n", "mode", "k", "t"}) {
    if (!header.count(key)) throw ParseError(std::string("codebook header missing ") + key);
  }
  code.q = std::stoi(header.at("q"));
  code.n = std::stoi(header.at("n"));
  code.mode = parse_code_mode(header.at("mode"));
  code.k = std::stoi(header.at("k"));
  code.t = header.at("t") == "*" ? -1 : std::stoll(header.at("t"));
  for (const std::string& w : word_lines) {
    words.push_back(Word::parse(w, code.q));
    if (words.back().size() != code.n) throw ParseError("codeword length differs from header n");
  }
  return finalize(std::move(code), std::move(words));
}

}  // namespace tandem
