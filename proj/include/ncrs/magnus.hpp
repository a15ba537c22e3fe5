#pragma once

// The Magnus representation g_j ↦ 1 + X_j of the free group F_k into the
// special rational units, and the closed form of its norm.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncrs/series.hpp"

namespace ncrs {

/// Reduced free-group word g_{i1}^{α1}⋯g_{im}^{αm}; generators are 1-based.
class FreeGroupWord {
 public:
  using Syllable = std::pair<std::size_t, long>;

  FreeGroupWord() = default;
  /// Reduces: merges equal neighbours and drops zero exponents, repeatedly.
  static FreeGroupWord reduce(const std::vector<Syllable>& raw);
  /// "g1*g2^-1*g1^3"; "1" or "" is the identity.
  static FreeGroupWord parse(std::string_view text);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  FreeGroupWord inverse() const;
  FreeGroupWord operator*(const FreeGroupWord& o) const;
  std::string to_string() const;

  bool operator==(const FreeGroupWord&) const = default;

 private:
  std::vector<Syllable> syllables_;
};

LinearPresentation mu(const FreeGroupWord& g, const Field& f, std::size_t k);

/// Σ|α_j| − #{j : α_j > 0 > α_{j+1}}.
std::size_t magnus_norm_formula(const FreeGroupWord& g);

/// (1+k)·k^{2l−1} for l ≥ 1.
mpz_class count_by_length(std::size_t k, std::size_t l);
/// Coefficients of 1 + k(k+1)t/(1 − k²t) up to t^maxl.
std::vector<mpz_class> length_series(std::size_t k, std::size_t maxl);

/// Every reduced word over k generators whose formula norm is exactly l.
std::vector<FreeGroupWord> words_of_norm(std::size_t k, std::size_t l);

}  // namespace ncrs
