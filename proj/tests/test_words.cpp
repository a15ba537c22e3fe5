#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "ncrs/words.hpp"

using namespace ncrs;

namespace {

const Alphabet XY = Alphabet::standard(2);

Word w(const char* s) { return Word::parse(s, XY); }

Word random_word(std::mt19937& rng, std::size_t k, std::size_t maxlen) {
  std::vector<Word::Letter> l(rng() % (maxlen + 1));
  for (auto& x : l) x = static_cast<Word::Letter>(rng() % k);
  return Word(l);
}

std::size_t catalan(std::size_t n) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace

TEST_CASE("alphabets") {
  CHECK(Alphabet::standard(2).names() == std::vector<std::string>{"X", "Y"});
  CHECK(Alphabet::standard(3).names() == std::vector<std::string>{"X1", "X2", "X3"});
  CHECK(Alphabet::parse("a, b").index_of("b") == 1);
  CHECK_THROWS(Alphabet::parse("X,X"));
}

TEST_CASE("word parsing and printing") {
  CHECK(w("XYX").to_string(XY) == "XYX");
  CHECK(w("X*Y") == w("XY"));
  CHECK(w("").empty());
  CHECK_THROWS(w("XZ"));
  auto a3 = Alphabet::standard(3);
  auto u = Word::parse("X1X3X2", a3);
  CHECK(u.letters() == std::vector<Word::Letter>{0, 2, 1});
}

TEST_CASE("rl-lex order examples") {
  CHECK(rl_lex_compare(w(""), w("X")) < 0);
  CHECK(rl_lex_compare(w("XX"), w("YX")) < 0);
  CHECK(rl_lex_compare(w("YX"), w("XY")) < 0);
  CHECK(rl_lex_compare(w("XY"), w("YY")) < 0);
  CHECK(rl_lex_compare(w("XX"), w("Y")) < 0);
  CHECK(rl_lex_compare(w("XY"), w("XY")) == 0);
}

TEST_CASE("rl-lex is a total order satisfying the tree axioms") {
  std::mt19937 rng(11);
  for (int i = 0; i < 2000; ++i) {
    auto a = random_word(rng, 2, 5), b = random_word(rng, 2, 5), c = random_word(rng, 2, 5);
    auto ab = rl_lex_compare(a, b), ba = rl_lex_compare(b, a);
    CHECK((ab < 0) == (ba > 0));
    CHECK((ab == 0) == (a == b));
    if (ab < 0 && rl_lex_compare(b, c) < 0) CHECK(rl_lex_compare(a, c) < 0);
    for (Word::Letter x = 0; x < 2; ++x) {
      CHECK(rl_lex_compare(a, a.prepend(x)) < 0);
      // Prepending preserves the order unless a is a proper suffix of b.
      bool suffix = a.size() < b.size() && std::equal(a.letters().rbegin(), a.letters().rend(), b.letters().rbegin());
      if (ab < 0 && !suffix) CHECK(rl_lex_compare(a.prepend(x), b.prepend(x)) < 0);
    }
  }
  // The suffix exception is real: ∅ < X but YX < Y.
  CHECK(rl_lex_compare(w(""), w("X")) < 0);
  CHECK(rl_lex_compare(w("YX"), w("Y")) < 0);
}

TEST_CASE("children and enumeration") {
  auto c = children(w(""), 2);
  CHECK(c == std::vector<Word>{w("X"), w("Y")});
  CHECK(children(w("YX"), 2) == std::vector<Word>{w("XYX"), w("YYX")});
  CHECK(enumerate_words(2, 1) == std::vector<Word>{w(""), w("X"), w("Y")});
  auto all = enumerate_words(2, 2);
  CHECK(all == std::vector<Word>{w(""), w("X"), w("Y"), w("XX"), w("YX"), w("XY"), w("YY")});
  CHECK(enumerate_words(3, 4).size() == 1 + 3 + 9 + 27 + 81);
}

TEST_CASE("full trees") {
  auto t0 = full_trees(2, 0);
  REQUIRE(t0.size() == 1);
  CHECK(t0[0].interior().empty());
  CHECK(t0[0].leaves() == std::vector<Word>{w("")});

  auto t2 = full_trees(2, 2);
  REQUIRE(t2.size() == 2);
  CHECK(t2[0].interior() == std::vector<Word>{w(""), w("X")});
  CHECK(t2[1].interior() == std::vector<Word>{w(""), w("Y")});
  CHECK(t2[0].leaves() == std::vector<Word>{w("XX"), w("YX"), w("Y")});

  for (std::size_t n = 0; n <= 6; ++n) CHECK(full_trees(2, n).size() == catalan(n));
  for (const auto& t : full_trees(3, 3)) CHECK(t.leaves().size() == 1 + 3 * 2);

  CHECK_THROWS(FullTree(2, {w("X")}));
  FullTree t(2, {w(""), w("X"), w("XX"), w("YX"), w("XYX"), w("YYX"), w("Y")});
  CHECK(t.is_interior(w("YYX")));
}

TEST_CASE("subtrees are the ancestor-closed subsets") {
  FullTree t(2, {w(""), w("X"), w("Y")});
  auto s = subtrees(t);
  // {}, {∅}, {∅,X}, {∅,Y}, {∅,X,Y}
  CHECK(s.size() == 5);
  FullTree chain(2, {w(""), w("X"), w("XX")});
  CHECK(subtrees(chain).size() == 4);
}
