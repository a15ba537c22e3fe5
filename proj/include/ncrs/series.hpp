#pragma once

// Recognisable series in non-commuting variables, carried by linear
// presentations: coeff(A, w) = γᵀ·M(w₁)⋯M(w_l)·s.  Binary operations build
// block presentations and never minimize on their own; call minimize or
// normalize explicitly.

#include <string>
#include <utility>
#include <vector>

#include "ncrs/errors.hpp"
#include "ncrs/linalg.hpp"
#include "ncrs/words.hpp"

namespace ncrs {

class LinearPresentation {
 public:
  /// matrices[i] is M(X_i); all square of size initial.size().
  LinearPresentation(Field f, Alphabet alphabet, std::vector<Matrix> matrices, Vector initial, Vector final);

  static LinearPresentation zero(const Field& f, const Alphabet& a);
  static LinearPresentation constant(const Scalar& c, const Alphabet& a);

  const Field& field() const { return field_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t dim() const { return initial_.size(); }
  std::size_t letters() const { return matrices_.size(); }
  const Matrix& matrix(std::size_t letter) const { return matrices_.at(letter); }
  const std::vector<Matrix>& matrices() const { return matrices_; }
  const Vector& initial() const { return initial_; }
  const Vector& final() const { return final_; }

  /// Constant coefficient ε(A) = γᵀs.
  Scalar epsilon() const;
  /// M(w)·v.
  Vector act(const Word& w, Vector v) const;

 private:
  Field field_;
  Alphabet alphabet_;
  std::vector<Matrix> matrices_;
  Vector initial_, final_;
};

/// Truncation of a series to words of length ≤ max_degree, in (length,
/// rl-lex) order.  Zero coefficients are stored.
struct Jet {
  std::size_t max_degree = 0;
  std::vector<Word> words;
  Vector coefficients;

  Scalar at(const Word& w) const;
  /// "1 + X + 2*Y + 2*X*X + …", zero terms omitted; "0" if all vanish.
  std::string to_string(const Alphabet& a) const;
};

LinearPresentation from_terms(const Field& f, const Alphabet& a, const std::vector<std::pair<Word, Scalar>>& terms);
LinearPresentation monomial(const Field& f, const Alphabet& a, const Word& w, const Scalar& c);
/// 1/(1 − Σ λ_j X_j).
LinearPresentation geometric(const Field& f, const Alphabet& a, const Vector& lambdas);

Scalar coeff(const LinearPresentation& A, const Word& w);
/// Parallel over the words of each level.
Jet jet(const LinearPresentation& A, std::size_t n);
Jet jet_serial(const LinearPresentation& A, std::size_t n);
LinearPresentation shift(const LinearPresentation& A, const Word& w);

LinearPresentation add(const LinearPresentation& A, const LinearPresentation& B);
LinearPresentation scale(const Scalar& c, const LinearPresentation& A);
LinearPresentation negate(const LinearPresentation& A);
LinearPresentation subtract(const LinearPresentation& A, const LinearPresentation& B);
LinearPresentation mul(const LinearPresentation& A, const LinearPresentation& B);
/// The (a+1)-dimensional block presentation of A⁻¹ before minimization.
LinearPresentation inverse_unreduced(const LinearPresentation& A);
LinearPresentation inverse(const LinearPresentation& A);
/// 1/(1 − A) for ε(A) = 0, on the basis {A_i/(1−A)} ∪ {1/(1−A)}.  Built
/// without subtraction, so non-negative inputs give non-negative output.
LinearPresentation star_unreduced(const LinearPresentation& A);
LinearPresentation hadamard(const LinearPresentation& A, const LinearPresentation& B);
LinearPresentation shuffle(const LinearPresentation& A, const LinearPresentation& B);
/// Over 𝔽_p: the shuffle inverse A^{ш(p−1)}/ε(A)^p.
LinearPresentation shuffle_inverse_char_p(const LinearPresentation& A);
/// Derivation with ∂X_d = 1 and ∂X = 0 otherwise: coeff(∂A, w) sums A over
/// all insertions of X_d into w.
LinearPresentation derive(const LinearPresentation& A, std::size_t letter);
LinearPresentation reverse(const LinearPresentation& A);
/// X_j ↦ Σ_l C(j,l)·X_l.
LinearPresentation subst_linear(const LinearPresentation& A, const Matrix& C);
/// A∘B = A(BX₁,…,BX_k)·B.
LinearPresentation compose(const LinearPresentation& A, const LinearPresentation& B);
/// A^n for n ≥ 0 by repeated squaring, minimizing between steps.
LinearPresentation power(const LinearPresentation& A, unsigned long n);

/// Reachable-then-observable reduction; the result has dim = complexity.
LinearPresentation minimize(const LinearPresentation& A);

/// The canonical minimal tree presentation: interior words in discovery
/// (= rl-lex) order, their ε values, and for each leaf its coordinates in the
/// interior basis.
class NormalPresentation {
 public:
  NormalPresentation(Field f, Alphabet a, std::vector<Word> interior, Vector eps, std::vector<Word> leaves,
                     std::vector<Vector> mu);

  const Field& field() const { return field_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t dim() const { return interior_.size(); }
  const std::vector<Word>& interior() const { return interior_; }
  const Vector& eps() const { return eps_; }
  const std::vector<Word>& leaves() const { return leaves_; }
  const std::vector<Vector>& mu() const { return mu_; }

  LinearPresentation to_presentation() const;
  /// Canonical text; equal series ⇔ equal bytes.
  std::string bytes() const;

  bool operator==(const NormalPresentation& o) const;

 private:
  Field field_;
  Alphabet alphabet_;
  std::vector<Word> interior_;
  Vector eps_;
  std::vector<Word> leaves_;
  std::vector<Vector> mu_;
};

NormalPresentation normalize(const LinearPresentation& A);
/// Series of a tree presentation (T, ε, μ); mu holds one row per leaf of T in
/// T.leaves() order, indexed by T.interior().
LinearPresentation from_tree(const Field& f, const Alphabet& a, const FullTree& T, const Vector& eps,
                             const std::vector<Vector>& mu);

/// Structural equality of normal forms.
bool equals(const LinearPresentation& A, const LinearPresentation& B);
/// normalize(A − B) is empty.
bool equals_by_difference(const LinearPresentation& A, const LinearPresentation& B);
bool is_zero_series(const LinearPresentation& A);

std::size_t complexity(const LinearPresentation& A);
/// ‖A‖ = dim(Ā + 𝕂) − 1 for special units; throws NotSpecialUnit otherwise.
std::size_t norm(const LinearPresentation& A);
std::size_t saturation_level(const LinearPresentation& A);

/// H(u, v) = coeff(A, uv) over words of length ≤ n in (length, rl-lex) order.
Matrix hankel_block(const LinearPresentation& A, std::size_t n);
Matrix hankel_block_serial(const LinearPresentation& A, std::size_t n);

}  // namespace ncrs
