#include "ncrs/field.hpp"

#include <charconv>

namespace ncrs {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t reduce(const mpz_class& n, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

[[noreturn]] void mismatch() { throw FieldError("scalar operands belong to different fields"); }

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw FieldError("field characteristic " + std::to_string(p) + " is not a supported prime");
  Field f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  return f;
}

Field Field::from_flag(std::string_view flag) {
  if (flag == "q" || flag == "Q") return rationals();
  if (flag.size() >= 2 && (flag[0] == 'f' || flag[0] == 'F')) {
    std::uint32_t p = 0;
    auto body = flag.substr(1);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size()) return prime(p);
  }
  throw FieldError("unknown field '" + std::string(flag) + "' (expected q or f<p>)");
}

std::string Field::flag() const { return is_rational() ? "q" : "f" + std::to_string(p_); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
  if (is_rational()) return Scalar(mpq_class(static_cast<long>(n)));
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar(Scalar::Residue{static_cast<std::uint32_t>(r), p_});
}

Scalar Field::from_mpz(const mpz_class& n) const {
  if (is_rational()) return Scalar(mpq_class(n));
  return Scalar(Scalar::Residue{reduce(n, p_), p_});
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return from_mpz(mpz_class(s, 10));
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(s.substr(slash + 1), 10);
    if (den == 0) throw FieldError("zero denominator in '" + s + "'");
    return from_mpz(num) / from_mpz(den);
  } catch (const std::invalid_argument&) {
    throw FieldError("malformed scalar literal '" + s + "'");
  } catch (const std::domain_error&) {
    throw FieldError("denominator of '" + s + "' vanishes in " + flag());
  }
}

Field Scalar::field() const {
  if (auto r = residue()) return Field(Field::Kind::Prime, r->modulus);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (auto r = residue()) return r->value == 0;
  return sgn(*rational()) == 0;
}

bool Scalar::is_one() const {
  if (auto r = residue()) return r->value == 1;
  return *rational() == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (auto a = residue()) {
    auto b = o.residue();
    if (!b || b->modulus != a->modulus) mismatch();
    std::uint64_t v = std::uint64_t(a->value) + b->value;
    if (v >= a->modulus) v -= a->modulus;
    return Scalar(Residue{static_cast<std::uint32_t>(v), a->modulus});
  }
  auto b = o.rational();
  if (!b) mismatch();
  return Scalar(mpq_class(*rational() + *b));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  if (auto a = residue()) return Scalar(Residue{a->value == 0 ? 0 : a->modulus - a->value, a->modulus});
  return Scalar(mpq_class(-*rational()));
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (auto a = residue()) {
    auto b = o.residue();
    if (!b || b->modulus != a->modulus) mismatch();
    return Scalar(Residue{static_cast<std::uint32_t>(std::uint64_t(a->value) * b->value % a->modulus),
                          a->modulus});
  }
  auto b = o.rational();
  if (!b) mismatch();
  return Scalar(mpq_class(*rational() * *b));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (auto a = residue()) return Scalar(Residue{pow_mod(a->value, a->modulus - 2, a->modulus), a->modulus});
  return Scalar(mpq_class(1 / *rational()));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

void Scalar::add_product(const Scalar& b, const Scalar& c) {
  if (auto a = std::get_if<Residue>(&rep_)) {
    auto x = b.residue();
    auto y = c.residue();
    if (!x || !y || x->modulus != a->modulus || y->modulus != a->modulus) mismatch();
    a->value = static_cast<std::uint32_t>((a->value + std::uint64_t(x->value) * y->value) % a->modulus);
    return;
  }
  auto x = b.rational();
  auto y = c.rational();
  if (!x || !y) mismatch();
  auto& q = std::get<mpq_class>(rep_);
  q += (*x) * (*y);
}

bool Scalar::operator==(const Scalar& o) const { return rep_ == o.rep_; }

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
  if (rep_.index() != o.rep_.index()) return rep_.index() <=> o.rep_.index();
  if (auto a = residue()) {
    auto b = o.residue();
    if (auto c = a->modulus <=> b->modulus; c != 0) return c;
    return a->value <=> b->value;
  }
  const auto& x = *rational();
  const auto& y = *o.rational();
  int c = cmp(x.get_num(), y.get_num());
  if (c == 0) c = cmp(x.get_den(), y.get_den());
  return c <=> 0;
}

bool Scalar::is_positive() const { return rational() && sgn(*rational()) > 0; }
bool Scalar::is_negative() const { return rational() && sgn(*rational()) < 0; }

std::string Scalar::to_string() const {
  if (auto a = residue()) return std::to_string(a->value);
  return rational()->get_str();
}

}  // namespace ncrs
