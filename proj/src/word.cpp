#include "tandem/word.hpp"

#include <algorithm>
#include <unordered_set>

namespace tandem {

namespace {

char symbol_to_char(Symbol s) {
  if (s < 0) throw std::invalid_argument("negative symbol");
  if (s < 10) return static_cast<char>('0' + s);
  if (s < 36) return static_cast<char>('a' + (s - 10));
  throw std::invalid_argument("symbol out of text range (q > 36)");
}

Symbol char_to_symbol(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
  throw ParseError(std::string("invalid symbol character '") + c + "'");
}

}  // namespace

Word::Word(std::vector<Symbol> symbols, int alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
  if (alphabet_ < 1) throw std::invalid_argument("alphabet size must be >= 1");
  for (Symbol s : symbols_) {
    if (s < 0 || s >= alphabet_) throw std::invalid_argument("symbol out of alphabet range");
  }
}

Word Word::parse(std::string_view text, int alphabet) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) {
    Symbol s = char_to_symbol(c);
    if (s >= alphabet) {
      throw ParseError("symbol '" + std::string(1, c) + "' not in Z_" + std::to_string(alphabet));
    }
    out.push_back(s);
  }
  return Word(std::move(out), alphabet);
}

Word Word::prefix(int t) const { return substr(0, t); }

Word Word::suffix(int t) const { return substr(size() - t, t); }

Word Word::substr(int pos, int len) const {
  if (pos < 0 || len < 0 || pos + len > size()) throw std::out_of_range("substr out of range");
  return Word(std::vector<Symbol>(symbols_.begin() + pos, symbols_.begin() + pos + len),
              alphabet_);
}

Word Word::appended(Symbol s) const {
  std::vector<Symbol> out = symbols_;
  out.push_back(s);
  return Word(std::move(out), alphabet_);
}

Word Word::repeated(int times) const {
  std::vector<Symbol> out;
  out.reserve(symbols_.size() * static_cast<std::size_t>(std::max(times, 0)));
  for (int i = 0; i < times; ++i) out.insert(out.end(), symbols_.begin(), symbols_.end());
  return Word(std::move(out), alphabet_);
}

std::string Word::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(symbol_to_char(s));
  return out;
}

Word concat(const Word& a, const Word& b) {
  std::vector<Symbol> out = a.symbols();
  out.insert(out.end(), b.symbols().begin(), b.symbols().end());
  return Word(std::move(out), std::max(a.alphabet(), b.alphabet()));
}

std::size_t WordHash::operator()(const Word& w) const {
  // FNV-1a over the symbols.
  std::size_t h = 1469598103934665603ull;
  for (Symbol s : w.symbols()) {
    h ^= static_cast<std::size_t>(s) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

LengthSet::LengthSet(Kind kind, std::vector<int> lengths)
    : kind_(kind), lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw std::invalid_argument("length set must be nonempty");
  for (int k : lengths_) {
    if (k < 1) throw std::invalid_argument("duplication lengths must be >= 1");
  }
}

LengthSet LengthSet::fixed(int k) { return LengthSet(Kind::kFixed, {k}); }

LengthSet LengthSet::up_to(int k) {
  std::vector<int> all;
  for (int i = 1; i <= k; ++i) all.push_back(i);
  return LengthSet(Kind::kUpTo, std::move(all));
}

LengthSet LengthSet::explicit_set(std::vector<int> lengths) {
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  return LengthSet(Kind::kExplicit, std::move(lengths));
}

LengthSet LengthSet::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> int {
    if (s.empty()) throw ParseError("empty length");
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw ParseError("invalid length literal: " + std::string(s));
      v = v * 10 + (c - '0');
      if (v > 1000000) throw ParseError("length literal too large");
    }
    if (v < 1) throw ParseError("lengths must be >= 1");
    return v;
  };
  if (text.substr(0, 2) == "<=") return up_to(parse_int(text.substr(2)));
  if (text.find(',') != std::string_view::npos) {
    std::vector<int> vals;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      vals.push_back(parse_int(text.substr(pos, next - pos)));
      pos = next + 1;
    }
    return explicit_set(std::move(vals));
  }
  return fixed(parse_int(text));
}

bool LengthSet::contains(int k) const {
  if (k < 1) return false;
  switch (kind_) {
    case Kind::kFixed: return k == lengths_.front();
    case Kind::kUpTo: return k <= lengths_.back();
    case Kind::kExplicit: return std::binary_search(lengths_.begin(), lengths_.end(), k);
  }
  return false;
}

std::string LengthSet::str() const {
  switch (kind_) {
    case Kind::kFixed: return std::to_string(lengths_.front());
    case Kind::kUpTo: return "<=" + std::to_string(lengths_.back());
    case Kind::kExplicit: {
      std::string out;
      for (std::size_t i = 0; i < lengths_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(lengths_[i]);
      }
      return out;
    }
  }
  return {};
}

Word duplicate(const Word& x, int i, int k) {
  if (i < 0 || k < 1 || i + k > x.size()) return x;
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(x.size() + k));
  const auto& s = x.symbols();
  out.insert(out.end(), s.begin(), s.begin() + i + k);
  out.insert(out.end(), s.begin() + i, s.begin() + i + k);
  out.insert(out.end(), s.begin() + i + k, s.end());
  return Word(std::move(out), x.alphabet());
}

bool is_square_at(const Word& x, int i, int half_length) {
  if (i < 0 || half_length < 1 || i + 2 * half_length > x.size()) return false;
  for (int j = 0; j < half_length; ++j) {
    if (x[i + j] != x[i + half_length + j]) return false;
  }
  return true;
}

Word deduplicate(const Word& x, int i, int k) {
  if (!is_square_at(x, i, k)) return Word::empty(x.alphabet());
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(x.size() - k));
  const auto& s = x.symbols();
  out.insert(out.end(), s.begin(), s.begin() + i + k);
  out.insert(out.end(), s.begin() + i + 2 * k, s.end());
  return Word(std::move(out), x.alphabet());
}

std::vector<Square> find_squares(const Word& x, const LengthSet& lengths) {
  std::vector<Square> out;
  for (int i = 0; i < x.size(); ++i) {
    for (int len : lengths.lengths()) {
      if (is_square_at(x, i, len)) out.push_back({i, len});
    }
  }
  return out;  // sorted by (i, len) by construction
}

bool overlapping(const Square& a, const Square& b) {
  const bool intervals_meet = (a.start <= b.start && b.start <= a.start + 2 * a.half_length - 1) ||
                              (b.start <= a.start && a.start <= b.start + 2 * b.half_length - 1);
  if (!intervals_meet) return false;
  // Coincident squares with equal halves are the same square, not an overlap.
  if (a.start == b.start && a.half_length == b.half_length) return false;
  return true;
}

Word suffix_extend(const Word& x, int count) {
  if (x.is_empty()) throw std::invalid_argument("suffix_extend requires a nonempty word");
  if (count < 0) throw std::invalid_argument("suffix_extend count must be >= 0");
  std::vector<Symbol> out = x.symbols();
  out.insert(out.end(), static_cast<std::size_t>(count), out.back());
  return Word(std::move(out), x.alphabet());
}

namespace {

// One round of all genuine duplications applicable to w, pruned at max_len.
void push_duplications(const Word& w, const LengthSet& lengths, std::optional<int> max_len,
                       std::unordered_set<Word, WordHash>& seen, std::vector<Word>& out) {
  for (int k : lengths.lengths()) {
    if (k > w.size()) break;  // lengths are sorted ascending
    if (max_len && w.size() + k > *max_len) continue;
    for (int i = 0; i + k <= w.size(); ++i) {
      Word d = duplicate(w, i, k);
      if (seen.insert(d).second) out.push_back(std::move(d));
    }
  }
}

std::vector<Word> sorted(std::unordered_set<Word, WordHash>&& set) {
  std::vector<Word> out(std::make_move_iterator(set.begin()), std::make_move_iterator(set.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Word> descendant_cone(const Word& x, const LengthSet& lengths, int steps,
                                  std::optional<int> max_len) {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  std::vector<Word> level{x};
  if (max_len && x.size() > *max_len) level.clear();
  for (int s = 0; s < steps; ++s) {
    std::unordered_set<Word, WordHash> seen;
    std::vector<Word> next;
    for (const Word& w : level) push_duplications(w, lengths, max_len, seen, next);
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

std::vector<Word> descendant_cone_within(const Word& x, const LengthSet& lengths, int steps,
                                         std::optional<int> max_len) {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  std::unordered_set<Word, WordHash> seen;
  std::vector<Word> frontier;
  if (!max_len || x.size() <= *max_len) {
    seen.insert(x);
    frontier.push_back(x);
  }
  for (int s = 0; s < steps && !frontier.empty(); ++s) {
    std::vector<Word> next;
    for (const Word& w : frontier) push_duplications(w, lengths, max_len, seen, next);
    frontier = std::move(next);
  }
  return sorted(std::move(seen));
}

std::vector<Word> descendant_cone_all(const Word& x, const LengthSet& lengths, int max_len) {
  if (max_len < x.size()) {
    throw std::invalid_argument("max_len must be >= |x| for the unbounded cone");
  }
  std::unordered_set<Word, WordHash> seen{x};
  std::vector<Word> stack{x};
  while (!stack.empty()) {
    Word w = std::move(stack.back());
    stack.pop_back();
    std::vector<Word> fresh;
    push_duplications(w, lengths, max_len, seen, fresh);
    for (Word& d : fresh) stack.push_back(std::move(d));
  }
  return sorted(std::move(seen));
}

std::vector<Word> ancestor_cone(const Word& y, const LengthSet& lengths) {
  std::unordered_set<Word, WordHash> seen{y};
  std::vector<Word> stack{y};
  while (!stack.empty()) {
    Word w = std::move(stack.back());
    stack.pop_back();
    for (const Square& sq : find_squares(w, lengths)) {
      Word a = deduplicate(w, sq.start, sq.half_length);
      if (seen.insert(a).second) stack.push_back(std::move(a));
    }
  }
  return sorted(std::move(seen));
}

}  // namespace tandem
