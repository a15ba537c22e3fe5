#pragma once

// Deterministic automata with outputs, finite shift monoids, support
// automata, the language calculus on characteristic series, and automatic
// sequences.  Automata read words from right to left, matching the shift
// convention ρ(Xw) = ρ(X)ρ(w): a state is a vector M(w)s.

#include <string>
#include <vector>

#include "ncrs/series.hpp"

namespace ncrs {

struct FiniteAutomaton {
  Field field;
  std::size_t letters = 0;
  std::size_t initial = 0;
  std::vector<std::vector<std::size_t>> delta;  // delta[state][letter]
  std::vector<Scalar> output;
  std::vector<std::string> labels;  // optional, for DOT

  std::size_t states() const { return delta.size(); }
  /// State reached after reading w right to left.
  std::size_t run(const Word& w) const;
  Scalar output_of(const Word& w) const { return output.at(run(w)); }
  bool accepts(const Word& w) const { return !output_of(w).is_zero(); }

  /// Graphviz text; accepting states are double circles.
  std::string to_dot(const Alphabet& a, const std::string& name = "automaton") const;
};

class ShiftMonoid {
 public:
  const std::vector<Matrix>& elements() const { return elements_; }
  /// cayley()[e][x] = index of M(X)·element e.
  const std::vector<std::vector<std::size_t>>& cayley() const { return cayley_; }
  std::size_t size() const { return elements_.size(); }
  /// Cayley graph from the identity with outputs γᵀ·m·s.
  FiniteAutomaton automaton(const LinearPresentation& A) const;

 private:
  friend ShiftMonoid shift_monoid(const LinearPresentation& A, std::size_t cap);
  std::vector<Matrix> elements_;  // elements_[0] is the identity
  std::vector<std::vector<std::size_t>> cayley_;
};

/// Closure of {M(X)} under products, identity included.  Throws CapExceeded
/// beyond cap elements.
ShiftMonoid shift_monoid(const LinearPresentation& A, std::size_t cap = 100000);

/// Accepts w iff coeff(A, w) ≠ 0.  Exact orbit over 𝔽_p; over ℚ a boolean
/// abstraction when every entry is non-negative, else the exact orbit of the
/// minimized presentation (finite when the coefficients are).
FiniteAutomaton support_automaton(const LinearPresentation& A, std::size_t cap = 100000);

/// States are the orbit vectors M(w)s of the minimized presentation, outputs
/// γᵀv.  Throws CapExceeded when the orbit is larger than cap.
FiniteAutomaton automaton_for_sequence(const LinearPresentation& A, std::size_t cap = 100000);

/// Σ_w output(run(w))·w; the characteristic series when outputs are 0/1.
LinearPresentation char_series(const FiniteAutomaton& G, const Alphabet& a);

// Regular languages as 0/1 series over ℚ.  Every result is re-extracted
// through a support automaton and re-encoded, so it is again a 0/1
// presentation; NotCharacteristic reports any other coefficient.
LinearPresentation lang_union(const LinearPresentation& A, const LinearPresentation& B);
LinearPresentation lang_intersect(const LinearPresentation& A, const LinearPresentation& B);
LinearPresentation lang_diff(const LinearPresentation& A, const LinearPresentation& B);
LinearPresentation lang_concat(const LinearPresentation& A, const LinearPresentation& B);
LinearPresentation lang_star(const LinearPresentation& A);

enum class Numeration { Bijective, Pointed };

/// Digits of n least significant first: 1..k (bijective) or 0..k−1
/// (pointed), as letter indices 0..k−1.
Word numeration_word(unsigned long long n, std::size_t k, Numeration enc);
/// s(n) = coeff(A, numeration_word(n)).
Scalar autoseq_sample(const LinearPresentation& A, unsigned long long n, Numeration enc = Numeration::Bijective);

}  // namespace ncrs
