#include "ncrs/words.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncrs {

Alphabet Alphabet::standard(std::size_t k) {
  if (k == 0) throw std::invalid_argument("alphabet needs at least one letter");
  if (k == 1) return Alphabet({"X"});
  if (k == 2) return Alphabet({"X", "Y"});
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("X" + std::to_string(i));
  return Alphabet(std::move(names));
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("alphabet needs at least one letter");
  if (names_.size() > 255) throw std::invalid_argument("alphabet too large");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty letter name");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate letter '" + names_[i] + "'");
  }
}

Alphabet Alphabet::parse(std::string_view list) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string name(list.substr(start, comma - start));
    name.erase(0, name.find_first_not_of(' '));
    name.erase(name.find_last_not_of(' ') + 1);
    names.push_back(name);
    start = comma + 1;
  }
  return Alphabet(std::move(names));
}

int Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Word Word::prepend(Letter x) const {
  std::vector<Letter> l;
  l.reserve(letters_.size() + 1);
  l.push_back(x);
  l.insert(l.end(), letters_.begin(), letters_.end());
  return Word(std::move(l));
}

Word Word::parent() const {
  if (letters_.empty()) throw std::logic_error("the empty word has no parent");
  return Word(std::vector<Letter>(letters_.begin() + 1, letters_.end()));
}

Word Word::reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

Word Word::operator+(const Word& o) const {
  auto l = letters_;
  l.insert(l.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(l));
}

std::string Word::to_string(const Alphabet& a) const {
  std::string s;
  for (auto x : letters_) s += a.name(x);
  return s;
}

Word Word::parse(std::string_view text, const Alphabet& a) {
  std::vector<Letter> l;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == '*' || text[pos] == ' ') {
      ++pos;
      continue;
    }
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto& n = a.name(i);
      if (n.size() > best_len && text.substr(pos, n.size()) == n) {
        best = static_cast<int>(i);
        best_len = n.size();
      }
    }
    if (best < 0) throw std::invalid_argument("unknown letter at offset " + std::to_string(pos) + " in word '" +
                                              std::string(text) + "'");
    l.push_back(static_cast<Letter>(best));
    pos += best_len;
  }
  return Word(std::move(l));
}

std::strong_ordering rl_lex_compare(const Word& u, const Word& v) {
  std::size_t i = u.size(), j = v.size();
  while (i > 0 && j > 0) {
    if (u[i - 1] != v[j - 1]) return u[i - 1] <=> v[j - 1];
    --i;
    --j;
  }
  return i <=> j;
}

std::vector<Word> children(const Word& w, std::size_t k) {
  std::vector<Word> c;
  c.reserve(k);
  for (std::size_t x = 0; x < k; ++x) c.push_back(w.prepend(static_cast<Word::Letter>(x)));
  return c;
}

std::vector<Word> enumerate_words(std::size_t k, std::size_t maxlen) {
  std::vector<Word> all{Word()};
  std::size_t level_start = 0;
  for (std::size_t len = 1; len <= maxlen; ++len) {
    std::size_t level_end = all.size();
    std::vector<Word> next;
    for (std::size_t i = level_start; i < level_end; ++i)
      for (auto& c : children(all[i], k)) next.push_back(std::move(c));
    std::sort(next.begin(), next.end(), RlLexLess{});
    level_start = level_end;
    for (auto& w : next) all.push_back(std::move(w));
  }
  return all;
}

// ---------------------------------------------------------------- FullTree

FullTree::FullTree(std::size_t k, std::vector<Word> interior) : k_(k), interior_(std::move(interior)) {
  std::sort(interior_.begin(), interior_.end(), RlLexLess{});
  interior_.erase(std::unique(interior_.begin(), interior_.end()), interior_.end());
  for (const auto& w : interior_) {
    for (auto x : w.letters())
      if (x >= k_) throw std::invalid_argument("tree word uses a letter outside the alphabet");
    if (!w.empty() && !is_interior(w.parent())) throw std::invalid_argument("interior set is not ancestor closed");
  }
  if (interior_.empty()) {
    leaves_.push_back(Word());
    return;
  }
  for (const auto& w : interior_)
    for (auto& c : children(w, k_))
      if (!is_interior(c)) leaves_.push_back(std::move(c));
  std::sort(leaves_.begin(), leaves_.end(), RlLexLess{});
}

bool FullTree::is_interior(const Word& w) const {
  return std::binary_search(interior_.begin(), interior_.end(), w, RlLexLess{});
}

std::string FullTree::to_string(const Alphabet& a) const {
  std::string s = "{";
  for (std::size_t i = 0; i < interior_.size(); ++i) {
    if (i) s += ",";
    s += interior_[i].empty() ? "∅" : interior_[i].to_string(a);
  }
  return s + "}";
}

namespace {

struct InteriorLess {
  bool operator()(const std::vector<Word>& a, const std::vector<Word>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), RlLexLess{});
  }
};

}  // namespace

std::vector<FullTree> full_trees(std::size_t k, std::size_t n) {
  std::set<std::vector<Word>, InteriorLess> level{{}};
  for (std::size_t size = 1; size <= n; ++size) {
    std::set<std::vector<Word>, InteriorLess> next;
    for (const auto& interior : level) {
      FullTree t(k, interior);
      for (const auto& leaf : t.leaves()) {
        auto grown = interior;
        grown.push_back(leaf);
        std::sort(grown.begin(), grown.end(), RlLexLess{});
        next.insert(std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<FullTree> out;
  for (const auto& interior : level) out.emplace_back(k, interior);
  return out;
}

std::vector<FullTree> subtrees(const FullTree& t) {
  const auto& in = t.interior();
  if (in.size() > 20) throw std::invalid_argument("subtrees: tree too large");
  std::vector<FullTree> out;
  for (std::uint32_t mask = 0; mask < (1u << in.size()); ++mask) {
    std::vector<Word> chosen;
    bool closed = true;
    for (std::size_t i = 0; i < in.size() && closed; ++i) {
      if (!(mask >> i & 1)) continue;
      if (!in[i].empty()) {
        auto it = std::lower_bound(in.begin(), in.end(), in[i].parent(), RlLexLess{});
        closed = (mask >> (it - in.begin())) & 1;
      }
      chosen.push_back(in[i]);
    }
    if (closed) out.emplace_back(t.arity(), std::move(chosen));
  }
  return out;
}

}  // namespace ncrs
