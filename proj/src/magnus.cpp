#include "ncrs/magnus.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace ncrs {

FreeGroupWord FreeGroupWord::reduce(const std::vector<Syllable>& raw) {
  FreeGroupWord g;
  auto& out = g.syllables_;
  for (const auto& [gen, e] : raw) {
    if (gen == 0) throw std::invalid_argument("free group generators are numbered from 1");
    if (e == 0) continue;
    if (!out.empty() && out.back().first == gen) {
      out.back().second += e;
      if (out.back().second == 0) out.pop_back();
    } else {
      out.emplace_back(gen, e);
    }
  }
  return g;
}

FreeGroupWord FreeGroupWord::parse(std::string_view text) {
  std::vector<Syllable> raw;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("group word: " + what + " at offset " + std::to_string(pos));
  };
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto number = [&](bool allow_sign) {
    std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string s(text.substr(start, pos - start));
    if (s.empty() || s == "-" || s == "+") fail("expected a number");
    return std::stol(s);
  };
  skip();
  if (pos == text.size() || text.substr(pos) == "1") return {};
  while (true) {
    skip();
    if (pos >= text.size() || (text[pos] != 'g' && text[pos] != 'G')) fail("expected a generator g<i>");
    ++pos;
    long gen = number(false);
    long e = 1;
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      e = number(true);
    }
    if (gen <= 0) fail("generator index must be positive");
    raw.emplace_back(static_cast<std::size_t>(gen), e);
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '*') fail("expected '*'");
    ++pos;
  }
  return reduce(raw);
}

FreeGroupWord FreeGroupWord::inverse() const {
  FreeGroupWord g;
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) g.syllables_.emplace_back(it->first, -it->second);
  return g;
}

FreeGroupWord FreeGroupWord::operator*(const FreeGroupWord& o) const {
  auto raw = syllables_;
  raw.insert(raw.end(), o.syllables_.begin(), o.syllables_.end());
  return reduce(raw);
}

std::string FreeGroupWord::to_string() const {
  if (syllables_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < syllables_.size(); ++i) {
    if (i) s += '*';
    s += "g" + std::to_string(syllables_[i].first);
    if (syllables_[i].second != 1) s += "^" + std::to_string(syllables_[i].second);
  }
  return s;
}

LinearPresentation mu(const FreeGroupWord& g, const Field& f, std::size_t k) {
  const auto a = Alphabet::standard(k);
  auto acc = LinearPresentation::constant(f.one(), a);
  for (const auto& [gen, e] : g.syllables()) {
    if (gen > k) throw std::invalid_argument("mu: generator g" + std::to_string(gen) + " outside F_" + std::to_string(k));
    Word x({static_cast<Word::Letter>(gen - 1)});
    // (1 + X)⁻¹ = 1/(1 − (−1)X).
    LinearPresentation base = [&] {
      if (e > 0) return from_terms(f, a, {{Word(), f.one()}, {x, f.one()}});
      Vector l = zero_vector(f, k);
      l[gen - 1] = -f.one();
      return geometric(f, a, l);
    }();
    acc = minimize(mul(acc, power(base, static_cast<unsigned long>(std::labs(e)))));
  }
  return acc;
}

std::size_t magnus_norm_formula(const FreeGroupWord& g) {
  const auto& s = g.syllables();
  std::size_t total = 0, descents = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    total += static_cast<std::size_t>(std::labs(s[j].second));
    if (j + 1 < s.size() && s[j].second > 0 && s[j + 1].second < 0) ++descents;
  }
  return total - descents;
}

mpz_class count_by_length(std::size_t k, std::size_t l) {
  if (l == 0) return 1;
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), k, 2 * l - 1);
  return p * static_cast<unsigned long>(k + 1);
}

std::vector<mpz_class> length_series(std::size_t k, std::size_t maxl) {
  // 1 + k(k+1)t/(1 − k²t): c₀ = 1, c₁ = k(k+1), c_{l+1} = k²·c_l.
  std::vector<mpz_class> c{1};
  if (maxl >= 1) c.push_back(mpz_class(static_cast<unsigned long>(k * (k + 1))));
  for (std::size_t l = 2; l <= maxl; ++l) c.push_back(c.back() * static_cast<unsigned long>(k * k));
  return c;
}

std::vector<FreeGroupWord> words_of_norm(std::size_t k, std::size_t l) {
  // Each syllable contributes |α| and each descent saves at most half of the
  // two syllables involved, so Σ|α| ≤ 2l.
  std::vector<FreeGroupWord> out;
  std::vector<FreeGroupWord::Syllable> cur;
  auto rec = [&](auto&& self, std::size_t budget) -> void {
    auto g = FreeGroupWord::reduce(cur);
    if (magnus_norm_formula(g) == l) out.push_back(g);
    for (std::size_t gen = 1; gen <= k; ++gen) {
      if (!cur.empty() && cur.back().first == gen) continue;
      for (long e = 1; static_cast<std::size_t>(e) <= budget; ++e)
        for (long sign : {1L, -1L}) {
          cur.emplace_back(gen, sign * e);
          self(self, budget - static_cast<std::size_t>(e));
          cur.pop_back();
        }
    }
  };
  rec(rec, 2 * l);
  return out;
}

}  // namespace ncrs
