#pragma once

// Alphabets, words of the free monoid, the right-to-left lexicographic order
// and finite full subtrees of the k-regular tree of words.

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ncrs {

/// Ordered list of distinct letter names; list order is the letter order.
class Alphabet {
 public:
  /// "X","Y" for k = 2; "X" for k = 1; "X1".."Xk" otherwise.
  static Alphabet standard(std::size_t k);
  explicit Alphabet(std::vector<std::string> names);
  /// Comma separated names, e.g. "X,Y".
  static Alphabet parse(std::string_view list);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of a letter name, or -1.
  int index_of(std::string_view name) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

/// A word X_{i1}…X_{il}, leftmost letter first.  Letters are alphabet indices.
class Word {
 public:
  using Letter = std::uint8_t;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  /// X·w.
  Word prepend(Letter x) const;
  /// Drops the first letter: the parent of X·w in the word tree is w.
  Word parent() const;
  Word reversed() const;
  Word operator+(const Word& o) const;

  /// Concatenated letter names, e.g. "XYX"; the empty word prints as "".
  std::string to_string(const Alphabet& a) const;
  /// Inverse of to_string.  Letters are matched greedily by longest name.
  static Word parse(std::string_view text, const Alphabet& a);

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Right-to-left lexicographic comparison: compare from the last letter; a
/// proper suffix is smaller.  Total, not graded by length.
std::strong_ordering rl_lex_compare(const Word& u, const Word& v);

struct RlLexLess {
  bool operator()(const Word& u, const Word& v) const { return rl_lex_compare(u, v) < 0; }
};

/// Children X₁w, …, X_kw in letter order.
std::vector<Word> children(const Word& w, std::size_t k);

/// Strict total order by (length, rl-lex).
struct GradedLess {
  bool operator()(const Word& u, const Word& v) const {
    if (u.size() != v.size()) return u.size() < v.size();
    return rl_lex_compare(u, v) < 0;
  }
};

/// All words of length ≤ maxlen sorted by (length, rl-lex).
std::vector<Word> enumerate_words(std::size_t k, std::size_t maxlen);

/// Finite full subtree described by its interior vertices.  The interior set
/// is closed under Word::parent and contains ∅ whenever it is non-empty.
class FullTree {
 public:
  /// Throws std::invalid_argument if the set is not ancestor closed.
  FullTree(std::size_t k, std::vector<Word> interior);

  std::size_t arity() const { return k_; }
  /// Interior vertices sorted by rl-lex.
  const std::vector<Word>& interior() const { return interior_; }
  /// ({∅} ∪ children of interior) ∖ interior, sorted by rl-lex.
  const std::vector<Word>& leaves() const { return leaves_; }
  bool is_interior(const Word& w) const;

  std::string to_string(const Alphabet& a) const;

  bool operator==(const FullTree& o) const { return k_ == o.k_ && interior_ == o.interior_; }

 private:
  std::size_t k_;
  std::vector<Word> interior_;
  std::vector<Word> leaves_;
};

/// Every full tree with exactly n interior vertices, ordered by the sorted
/// interior lists (rl-lex, lexicographically).
std::vector<FullTree> full_trees(std::size_t k, std::size_t n);

/// Ancestor-closed subsets of the interior of t (including the empty set and
/// t itself), as full trees.
std::vector<FullTree> subtrees(const FullTree& t);

}  // namespace ncrs
