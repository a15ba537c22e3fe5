#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "ncrs/magnus.hpp"

using namespace ncrs;

namespace {

FreeGroupWord g(std::vector<FreeGroupWord::Syllable> s) { return FreeGroupWord::reduce(s); }

// Brute-force count of reduced words by formula norm: enumerate every
// reduced word with Σ|α| ≤ 2l directly and bucket them.
std::size_t brute_count(std::size_t k, std::size_t l) {
  std::set<std::string> seen;
  std::vector<FreeGroupWord::Syllable> cur;
  auto rec = [&](auto&& self, long budget) -> void {
    auto w = FreeGroupWord::reduce(cur);
    if (magnus_norm_formula(w) == l) seen.insert(w.to_string());
    if (budget == 0) return;
    for (std::size_t gen = 1; gen <= k; ++gen)
      for (long e : {1L, -1L}) {
        cur.emplace_back(gen, e);  // letters one at a time, not syllables
        self(self, budget - 1);
        cur.pop_back();
      }
  };
  rec(rec, static_cast<long>(2 * l));
  return seen.size();
}

}  // namespace

TEST_CASE("free group reduction") {
  CHECK(g({{1, 1}, {1, -1}}).is_identity());
  CHECK(g({{1, 2}, {2, 1}, {2, -1}, {1, 3}}).syllables() == std::vector<FreeGroupWord::Syllable>{{1, 5}});
  CHECK(g({{1, 1}, {2, -1}, {1, 3}}).syllables() == std::vector<FreeGroupWord::Syllable>{{1, 1}, {2, -1}, {1, 3}});
  CHECK(FreeGroupWord::parse("g1*g2^-1*g1^3") == g({{1, 1}, {2, -1}, {1, 3}}));
  CHECK(FreeGroupWord::parse("g1*g2^-1*g1^3").to_string() == "g1*g2^-1*g1^3");
  CHECK(FreeGroupWord::parse("1").is_identity());
  CHECK_THROWS(FreeGroupWord::parse("g1*"));
  CHECK_THROWS(FreeGroupWord::parse("h1"));
  auto w = FreeGroupWord::parse("g2^2*g1^-1");
  CHECK((w * w.inverse()).is_identity());
}

TEST_CASE("norm formula") {
  CHECK(magnus_norm_formula(FreeGroupWord::parse("g1*g2^-1*g1^3")) == 4);
  CHECK(magnus_norm_formula(FreeGroupWord()) == 0);
  CHECK(magnus_norm_formula(FreeGroupWord::parse("g1^-1*g2^-1")) == 2);
}

TEST_CASE("Magnus images") {
  Field q;
  auto XY = Alphabet::standard(2);
  CHECK(equals(mu(FreeGroupWord(), q, 2), LinearPresentation::constant(q.one(), XY)));
  auto m = mu(FreeGroupWord::parse("g1*g2^-1"), q, 2);
  auto expected = mul(from_terms(q, XY, {{Word(), q.one()}, {Word::parse("X", XY), q.one()}}),
                      inverse(from_terms(q, XY, {{Word(), q.one()}, {Word::parse("Y", XY), q.one()}})));
  CHECK(equals(m, expected));
  CHECK(norm(m) == 1);
  auto g1 = FreeGroupWord::parse("g1");
  CHECK(equals(mul(mu(g1, q, 2), mu(g1.inverse(), q, 2)), LinearPresentation::constant(q.one(), XY)));
  CHECK_THROWS(mu(FreeGroupWord::parse("g3"), q, 2));
}

TEST_CASE("computed norm equals the formula") {
  for (auto f : {Field::prime(2), Field::prime(3), Field()})
    for (std::size_t l = 0; l <= 3; ++l)
      for (const auto& w : words_of_norm(2, l)) {
        auto m = mu(w, f, 2);
        CHECK(norm(m) == l);
        if (!w.is_identity()) CHECK(norm(m) >= 1);
      }
  std::mt19937 rng(61);
  for (int i = 0; i < 20; ++i) {
    std::vector<FreeGroupWord::Syllable> raw;
    for (int j = 0, n = 1 + rng() % 5; j < n; ++j)
      raw.emplace_back(1 + rng() % 3, static_cast<long>(rng() % 7) - 3);
    auto w = FreeGroupWord::reduce(raw);
    CHECK(norm(mu(w, Field::prime(3), 3)) == magnus_norm_formula(w));
  }
}

TEST_CASE("positive words are isometric") {
  Field q;
  auto w = FreeGroupWord::parse("g1^2*g2*g1^3");
  CHECK(norm(mu(w, q, 2)) == 6);
}

TEST_CASE("counting by length") {
  CHECK(count_by_length(2, 1) == 6);
  CHECK(count_by_length(2, 2) == 24);
  CHECK(count_by_length(3, 1) == 12);
  auto s = length_series(2, 4);
  for (std::size_t l = 1; l <= 4; ++l) CHECK(s[l] == count_by_length(2, l));
  for (std::size_t l = 1; l <= 3; ++l) {
    CHECK(words_of_norm(2, l).size() == count_by_length(2, l));
    CHECK(brute_count(2, l) == count_by_length(2, l));
  }
  CHECK(words_of_norm(3, 1).size() == 12);
}

TEST_CASE("distinct Magnus images by norm") {
  auto f2 = Field::prime(2);
  for (std::size_t l = 1; l <= 2; ++l) {
    std::set<std::string> images;
    for (const auto& w : words_of_norm(2, l)) images.insert(normalize(mu(w, f2, 2)).bytes());
    CHECK(images.size() == count_by_length(2, l));
  }
}
