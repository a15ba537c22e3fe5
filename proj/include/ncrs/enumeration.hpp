#pragma once

// Counting rational series over 𝔽_q: E_n (by complexity), F_n (special
// units by norm), Ẽ_n (polynomials by complexity) and the common
// interpolation P_n(q, s), through tree sums for any k and through the fast
// recursions for k = 2.  Plus a brute-force census used as an oracle.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "ncrs/words.hpp"

namespace ncrs {

/// Polynomial in q with integer coefficients, lowest degree first.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpz_class> coeffs);
  static QPoly constant(const mpz_class& c);
  /// c·q^e.
  static QPoly monomial(std::size_t e, const mpz_class& c = 1);

  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// −1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  mpz_class coeff(std::size_t e) const { return e < c_.size() ? c_[e] : mpz_class(0); }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
  QPoly shifted(std::size_t e) const;  // ·q^e
  /// Exact division by q^e; throws DivisibilityViolation otherwise.
  QPoly divided_by_q_power(std::size_t e) const;
  mpz_class evaluate(const mpz_class& q) const;

  /// Descending powers, e.g. "q^3 - q^2"; var names the variable.
  std::string to_string(const std::string& var = "q") const;

  bool operator==(const QPoly&) const = default;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// Polynomial in (q, s) with integer coefficients.
class QSPoly {
 public:
  QSPoly() = default;
  /// p(q)·s^e.
  static QSPoly from_qpoly(const QPoly& p, std::size_t s_power = 0);

  QSPoly operator+(const QSPoly& o) const;
  QSPoly operator-(const QSPoly& o) const;
  QSPoly operator*(const QPoly& p) const;

  /// Coefficient of q^i s^j.
  mpz_class coeff(std::size_t i, std::size_t j) const;
  QPoly at_s_one() const;
  QPoly at_s_q() const;
  /// P(q₀, s) as a polynomial in s.
  QPoly at_q(const mpz_class& q0) const;
  /// The Laurent polynomial P(q, q^e) as exponent ↦ non-zero coefficient.
  std::map<long, mpz_class> at_s_q_power(long e) const;

  /// Descending by total q-power then s-power, e.g. "q^3*s - q^2*s".
  std::string to_string() const;

  bool operator==(const QSPoly&) const = default;

 private:
  std::map<std::pair<std::size_t, std::size_t>, mpz_class> c_;  // zero entries never stored
};

QPoly E_T(const FullTree& T);
QPoly F_T(const FullTree& T);
QPoly E_n_generic(std::size_t k, std::size_t n);
QPoly F_n_generic(std::size_t k, std::size_t n);
/// q^n Σ_{T, |V°|=n} Π_L q^{#{X ∈ V° : X < L}}: the tree-sum form of w_n.
QPoly w_tree_sum(std::size_t n);

/// Memoized tables of the k = 2 recursions.  Not thread-safe; use one
/// instance per thread.
class FastRecursion {
 public:
  /// polynomial_variant selects the w̃/p̃ recursion behind Ẽ_n.
  explicit FastRecursion(bool polynomial_variant = false) : tilde_(polynomial_variant) {}

  const QPoly& w(std::size_t n);
  const QPoly& p(std::size_t j, std::size_t n);
  /// E_n, or Ẽ_n for the polynomial variant.
  const QPoly& E(std::size_t n);
  const QPoly& F(std::size_t n);
  const QSPoly& P(std::size_t n);

 private:
  bool tilde_;
  std::vector<QPoly> w_;
  std::map<std::pair<std::size_t, std::size_t>, QPoly> p_;
  std::vector<QPoly> E_, F_;
  std::vector<QSPoly> P_;
};

QPoly fast_w(std::size_t n);
QPoly fast_p(std::size_t j, std::size_t n);
QPoly fast_E(std::size_t n);
QPoly fast_F(std::size_t n);
QPoly fast_Etilde(std::size_t n);
QSPoly P_n(std::size_t n);

struct CensusResult {
  /// complexity (mode all) or norm (units) ↦ number of distinct series.
  std::map<std::size_t, std::size_t> counts;
  std::size_t presentations = 0;  // tree presentations enumerated
};

/// Enumerates every tree presentation over 𝔽_q (q prime) with k letters and
/// at most n interior vertices (n + 1 for units, which reports norms ≤ n),
/// normalizes and deduplicates.  Sharded over OpenMP threads.
CensusResult census(std::uint32_t q, std::size_t k, std::size_t n, bool units);
CensusResult census_serial(std::uint32_t q, std::size_t k, std::size_t n, bool units);

}  // namespace ncrs
