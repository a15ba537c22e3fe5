#pragma once

// Exact scalars over ℚ (GMP rationals) or a prime field 𝔽_p.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace ncrs {

class Scalar;

/// Thrown when two scalars from different fields meet, or a literal does not
/// parse in the requested field.
class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Descriptor of the active coefficient field.  Either ℚ or 𝔽_p, p prime.
class Field {
 public:
  enum class Kind { Rational, Prime };

  Field() = default;  // ℚ

  static Field rationals() { return Field(); }
  /// Throws FieldError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  /// "q" or "Q" for ℚ; "f<p>" for 𝔽_p.
  static Field from_flag(std::string_view flag);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  Scalar from_mpz(const mpz_class& n) const;
  /// Decimal literal: "3", "-2/5" for ℚ; any integer (reduced mod p) for 𝔽_p.
  Scalar parse(std::string_view text) const;

  std::string flag() const;

  bool operator==(const Field&) const = default;

 private:
  friend class Scalar;
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::Rational;
  std::uint32_t p_ = 0;
};

/// One field element.  Canonical form is unique per value, so equality is
/// structural: reduced fraction with positive denominator, or residue in
/// [0, p).
class Scalar {
 public:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
    bool operator==(const Residue&) const = default;
  };

  Scalar() : rep_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) { std::get<mpq_class>(rep_).canonicalize(); }
  explicit Scalar(Residue r) : rep_(r) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  /// a += b * c without temporaries for the common 𝔽_p case.
  void add_product(const Scalar& b, const Scalar& c);

  bool operator==(const Scalar& o) const;
  /// Total order used only for canonical containers: by numerator then
  /// denominator over ℚ, by residue over 𝔽_p.
  std::strong_ordering operator<=>(const Scalar& o) const;

  /// Strictly positive rational; always false over 𝔽_p.
  bool is_positive() const;
  bool is_negative() const;

  const mpq_class* rational() const { return std::get_if<mpq_class>(&rep_); }
  const Residue* residue() const { return std::get_if<Residue>(&rep_); }

  std::string to_string() const;

 private:
  std::variant<Residue, mpq_class> rep_;
};

inline std::string to_string(const Scalar& s) { return s.to_string(); }

}  // namespace ncrs
