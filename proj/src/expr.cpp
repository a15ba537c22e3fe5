#include "ncrs/expr.hpp"

#include <cctype>

namespace ncrs {

namespace {

using Kind = Expression::Kind;
using Ptr = std::unique_ptr<Expression>;

Ptr node(Kind k, std::size_t offset) {
  auto e = std::make_unique<Expression>();
  e->kind = k;
  e->offset = offset;
  return e;
}

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& a, const Field& f) : s_(text), a_(a), f_(f) {}

  Ptr parse() {
    auto e = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  Ptr binary(Kind k, std::size_t at, Ptr l, Ptr r) {
    auto e = node(k, at);
    e->args.push_back(std::move(l));
    e->args.push_back(std::move(r));
    return e;
  }

  Ptr expr() {
    auto l = term();
    while (true) {
      skip();
      std::size_t at = pos_;
      if (eat('+'))
        l = binary(Kind::Add, at, std::move(l), term());
      else if (eat('-'))
        l = binary(Kind::Sub, at, std::move(l), term());
      else
        return l;
    }
  }

  Ptr term() {
    auto l = unary();
    while (true) {
      skip();
      std::size_t at = pos_;
      if (!eat('*')) return l;
      l = binary(Kind::Mul, at, std::move(l), unary());
    }
  }

  Ptr unary() {
    skip();
    std::size_t at = pos_;
    if (eat('-')) {
      auto e = node(Kind::Neg, at);
      e->args.push_back(unary());
      return e;
    }
    return power();
  }

  Ptr power() {
    auto base = factor();
    skip();
    std::size_t at = pos_;
    if (!eat('^')) return base;
    skip();
    auto digits = integer();
    if (digits.empty()) fail("expected a non-negative integer exponent");
    auto e = node(Kind::Pow, at);
    e->exponent = std::stoul(digits);
    e->args.push_back(std::move(base));
    return e;
  }

  std::string integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ - start > 18) {
      pos_ = start;
      fail("integer too long");
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  // integer ('/' integer)?
  Scalar literal() {
    std::size_t at = pos_;
    auto num = integer();
    Scalar v = f_.parse(num);
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      auto den = integer();
      if (den.empty()) fail("expected a denominator");
      Scalar d = f_.parse(den);
      if (d.is_zero()) {
        pos_ = at;
        fail("zero denominator");
      }
      v = v / d;
    }
    return v;
  }

  Scalar signed_literal() {
    skip();
    bool neg = eat('-');
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
    auto v = literal();
    return neg ? -v : v;
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::size_t variable() {
    skip();
    std::size_t at = pos_;
    auto name = identifier();
    if (name.empty()) fail("expected a variable");
    int i = a_.index_of(name);
    if (i < 0) {
      pos_ = at;
      fail("unknown variable '" + name + "'");
    }
    return static_cast<std::size_t>(i);
  }

  Ptr call(const std::string& name, std::size_t at) {
    static const std::vector<std::pair<std::string, Kind>> unary_calls = {
        {"inv", Kind::Inverse}, {"rev", Kind::Reverse}};
    static const std::vector<std::pair<std::string, Kind>> binary_calls = {
        {"had", Kind::Hadamard}, {"sh", Kind::Shuffle}, {"comp", Kind::Compose}};
    for (const auto& [n, k] : unary_calls)
      if (n == name) {
        auto e = node(k, at);
        e->args.push_back(expr());
        expect(')');
        return e;
      }
    for (const auto& [n, k] : binary_calls)
      if (n == name) {
        auto e = node(k, at);
        e->args.push_back(expr());
        expect(',');
        e->args.push_back(expr());
        expect(')');
        return e;
      }
    if (name == "d") {
      auto e = node(Kind::Derive, at);
      e->args.push_back(expr());
      expect(',');
      e->letter = variable();
      expect(')');
      return e;
    }
    if (name == "geo") {
      auto e = node(Kind::Geometric, at);
      do e->lambdas.push_back(signed_literal());
      while (eat(','));
      expect(')');
      if (e->lambdas.size() != a_.size()) {
        pos_ = at;
        fail("geo needs " + std::to_string(a_.size()) + " parameters");
      }
      return e;
    }
    pos_ = at;
    fail("unknown function '" + name + "'");
  }

  Ptr factor() {
    skip();
    std::size_t at = pos_;
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = node(Kind::Const, at);
      e->value = literal();
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      auto name = identifier();
      if (eat('(')) return call(name, at);
      int i = a_.index_of(name);
      if (i < 0) {
        pos_ = at;
        fail("unknown variable '" + name + "'");
      }
      auto e = node(Kind::Var, at);
      e->letter = static_cast<std::size_t>(i);
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const Alphabet& a_;
  const Field& f_;
  std::size_t pos_ = 0;
};

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Const: return "Const";
    case Kind::Var: return "Var";
    case Kind::Add: return "Add";
    case Kind::Sub: return "Sub";
    case Kind::Neg: return "Neg";
    case Kind::Mul: return "Mul";
    case Kind::Pow: return "Pow";
    case Kind::Inverse: return "Inverse";
    case Kind::Hadamard: return "Hadamard";
    case Kind::Shuffle: return "Shuffle";
    case Kind::Compose: return "Compose";
    case Kind::Derive: return "Derive";
    case Kind::Reverse: return "Reverse";
    case Kind::Geometric: return "Geometric";
  }
  return "?";
}

}  // namespace

std::string Expression::to_string(const Alphabet& a) const {
  switch (kind) {
    case Kind::Const: return "Const " + value.to_string();
    case Kind::Var: return "Var " + a.name(letter);
    case Kind::Geometric: {
      std::string s = "Geometric(";
      for (std::size_t i = 0; i < lambdas.size(); ++i) s += (i ? ", " : "") + lambdas[i].to_string();
      return s + ")";
    }
    default: break;
  }
  std::string s = std::string(kind_name(kind)) + "(";
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + args[i]->to_string(a);
  if (kind == Kind::Pow) s += ", " + std::to_string(exponent);
  if (kind == Kind::Derive) s += ", " + a.name(letter);
  return s + ")";
}

std::unique_ptr<Expression> parse_expression(std::string_view text, const Alphabet& a, const Field& f) {
  return Parser(text, a, f).parse();
}

LinearPresentation eval(const Expression& e, const Alphabet& a, const Field& f) {
  auto arg = [&](std::size_t i) { return eval(*e.args[i], a, f); };
  switch (e.kind) {
    case Kind::Const: return LinearPresentation::constant(e.value, a);
    case Kind::Var: return monomial(f, a, Word({static_cast<Word::Letter>(e.letter)}), f.one());
    case Kind::Geometric: return minimize(geometric(f, a, e.lambdas));
    case Kind::Add: return minimize(add(arg(0), arg(1)));
    case Kind::Sub: return minimize(subtract(arg(0), arg(1)));
    case Kind::Neg: return negate(arg(0));
    case Kind::Mul: return minimize(mul(arg(0), arg(1)));
    case Kind::Pow: return power(arg(0), e.exponent);
    case Kind::Inverse: {
      auto A = arg(0);
      if (A.epsilon().is_zero())
        throw NotInvertible("inv at offset " + std::to_string(e.offset) + ": constant term is zero");
      return inverse(A);
    }
    case Kind::Hadamard: return minimize(hadamard(arg(0), arg(1)));
    case Kind::Shuffle: return minimize(shuffle(arg(0), arg(1)));
    case Kind::Compose: return minimize(compose(arg(0), arg(1)));
    case Kind::Derive: return minimize(derive(arg(0), e.letter));
    case Kind::Reverse: return minimize(reverse(arg(0)));
  }
  throw std::logic_error("eval: unknown node");
}

LinearPresentation eval(std::string_view text, const Alphabet& a, const Field& f) {
  return eval(*parse_expression(text, a, f), a, f);
}

}  // namespace ncrs
