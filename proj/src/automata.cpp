#include "ncrs/automata.hpp"

#include <deque>
#include <map>
#include <sstream>

namespace ncrs {

std::size_t FiniteAutomaton::run(const Word& w) const {
  std::size_t s = initial;
  for (std::size_t i = w.size(); i-- > 0;) s = delta.at(s).at(w[i]);
  return s;
}

std::string FiniteAutomaton::to_dot(const Alphabet& a, const std::string& name) const {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=circle];\n  start [shape=point];\n";
  for (std::size_t s = 0; s < states(); ++s) {
    std::string label = s < labels.size() ? labels[s] : std::to_string(s);
    out << "  " << s << " [label=\"" << label;
    if (!output[s].is_zero() && !output[s].is_one()) out << " / " << output[s].to_string();
    out << "\"" << (output[s].is_zero() ? "" : ", shape=doublecircle") << "];\n";
  }
  out << "  start -> " << initial << ";\n";
  for (std::size_t s = 0; s < states(); ++s) {
    // One edge per target, letters merged.
    std::map<std::size_t, std::string> edges;
    for (std::size_t x = 0; x < letters; ++x) {
      auto& l = edges[delta[s][x]];
      l += (l.empty() ? "" : ",") + a.name(x);
    }
    for (const auto& [t, l] : edges) out << "  " << s << " -> " << t << " [label=\"" << l << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------- shift monoid

ShiftMonoid shift_monoid(const LinearPresentation& A, std::size_t cap) {
  ShiftMonoid m;
  std::map<std::vector<Scalar>, std::size_t> index;
  auto id = Matrix::identity(A.field(), A.dim());
  index.emplace(id.data(), 0);
  m.elements_.push_back(std::move(id));
  for (std::size_t e = 0; e < m.elements_.size(); ++e) {
    std::vector<std::size_t> row;
    for (std::size_t x = 0; x < A.letters(); ++x) {
      Matrix p = A.matrix(x) * m.elements_[e];
      auto [it, fresh] = index.emplace(p.data(), m.elements_.size());
      if (fresh) {
        if (m.elements_.size() >= cap) throw CapExceeded("shift monoid exceeds " + std::to_string(cap) + " elements");
        m.elements_.push_back(std::move(p));
      }
      row.push_back(it->second);
    }
    m.cayley_.push_back(std::move(row));
  }
  return m;
}

FiniteAutomaton ShiftMonoid::automaton(const LinearPresentation& A) const {
  FiniteAutomaton G;
  G.field = A.field();
  G.letters = A.letters();
  G.delta = cayley_;
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    G.output.push_back(dot(A.final(), elements_[e].apply(A.initial()), A.field()));
    G.labels.push_back("m" + std::to_string(e));
  }
  return G;
}

// ---------------------------------------------------------------- orbits

namespace {

template <class State, class Step, class Out, class Label>
FiniteAutomaton orbit(const Field& f, std::size_t k, State start, Step step, Out out, Label label, std::size_t cap) {
  FiniteAutomaton G;
  G.field = f;
  G.letters = k;
  std::map<State, std::size_t> index;
  std::vector<State> states{start};
  index.emplace(std::move(start), 0);
  for (std::size_t s = 0; s < states.size(); ++s) {
    std::vector<std::size_t> row;
    for (std::size_t x = 0; x < k; ++x) {
      State t = step(states[s], x);
      auto [it, fresh] = index.emplace(t, states.size());
      if (fresh) {
        if (states.size() >= cap) throw CapExceeded("orbit exceeds " + std::to_string(cap) + " states");
        states.push_back(std::move(t));
      }
      row.push_back(it->second);
    }
    G.delta.push_back(std::move(row));
  }
  for (const auto& s : states) {
    G.output.push_back(out(s));
    G.labels.push_back(label(s));
  }
  return G;
}

bool non_negative(const LinearPresentation& A) {
  auto ok = [](const Scalar& s) { return !s.is_negative(); };
  for (const auto& m : A.matrices())
    for (const auto& x : m.data())
      if (!ok(x)) return false;
  for (const auto& x : A.initial())
    if (!ok(x)) return false;
  for (const auto& x : A.final())
    if (!ok(x)) return false;
  return true;
}

FiniteAutomaton exact_orbit(const LinearPresentation& A, std::size_t cap) {
  auto m = minimize(A);
  const auto& f = m.field();
  return orbit(
      f, m.letters(), m.initial(), [&](const Vector& v, std::size_t x) { return m.matrix(x).apply(v); },
      [&](const Vector& v) { return dot(m.final(), v, f); }, [](const Vector& v) { return to_string(v); }, cap);
}

// Support of M(w)s as a bit pattern; exact under non-negativity.
FiniteAutomaton boolean_orbit(const LinearPresentation& A, std::size_t cap) {
  const auto& f = A.field();
  const std::size_t n = A.dim();
  using Bits = std::vector<bool>;
  Bits start(n);
  for (std::size_t i = 0; i < n; ++i) start[i] = !A.initial()[i].is_zero();
  auto step = [&](const Bits& v, std::size_t x) {
    Bits r(n);
    const auto& M = A.matrix(x);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n && !r[i]; ++j) r[i] = v[j] && !M(i, j).is_zero();
    return r;
  };
  auto out = [&](const Bits& v) {
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] && !A.final()[i].is_zero()) return f.one();
    return f.zero();
  };
  auto label = [](const Bits& v) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) {
        s += (first ? "" : ",") + std::to_string(i);
        first = false;
      }
    return s + "}";
  };
  return orbit(f, A.letters(), start, step, out, label, cap);
}

}  // namespace

FiniteAutomaton automaton_for_sequence(const LinearPresentation& A, std::size_t cap) { return exact_orbit(A, cap); }

FiniteAutomaton support_automaton(const LinearPresentation& A, std::size_t cap) {
  if (!A.field().is_rational()) return exact_orbit(A, cap);
  if (non_negative(A)) return boolean_orbit(A, cap);
  try {
    return exact_orbit(A, cap);
  } catch (const CapExceeded&) {
    throw NegativeEntries("support: presentation has negative entries and an infinite orbit");
  }
}

LinearPresentation char_series(const FiniteAutomaton& G, const Alphabet& a) {
  const auto& f = G.field;
  const std::size_t n = G.states();
  if (G.letters != a.size()) throw std::invalid_argument("char_series: automaton and alphabet sizes differ");
  std::vector<Matrix> M(a.size(), Matrix(f, n, n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t x = 0; x < a.size(); ++x) M[x](G.delta[s][x], s) = f.one();
  return LinearPresentation(f, a, std::move(M), unit_vector(f, n, G.initial), G.output);
}

// ---------------------------------------------------------------- languages

namespace {

void require_rational(const LinearPresentation& A) {
  if (!A.field().is_rational()) throw Mismatch("language operations run over Q");
}

// Re-encodes the support of A; exact-orbit outputs must already be 0/1.
LinearPresentation reencode(const LinearPresentation& A) {
  auto G = support_automaton(A);
  for (auto& o : G.output) {
    if (!o.is_zero() && !o.is_one() && !non_negative(A))
      throw NotCharacteristic("language: coefficient " + o.to_string() + " is neither 0 nor 1");
    if (!o.is_zero()) o = A.field().one();
  }
  return char_series(G, A.alphabet());
}

// Characteristic series of the non-empty words.
LinearPresentation nonempty_words(const Field& f, const Alphabet& a) {
  FiniteAutomaton G;
  G.field = f;
  G.letters = a.size();
  G.delta = {std::vector<std::size_t>(a.size(), 1), std::vector<std::size_t>(a.size(), 1)};
  G.output = {f.zero(), f.one()};
  return char_series(G, a);
}

}  // namespace

LinearPresentation lang_intersect(const LinearPresentation& A, const LinearPresentation& B) {
  require_rational(A);
  return reencode(hadamard(A, B));
}

LinearPresentation lang_diff(const LinearPresentation& A, const LinearPresentation& B) {
  require_rational(A);
  return reencode(subtract(A, hadamard(A, B)));
}

LinearPresentation lang_union(const LinearPresentation& A, const LinearPresentation& B) {
  require_rational(A);
  return reencode(subtract(add(A, B), hadamard(A, B)));
}

LinearPresentation lang_concat(const LinearPresentation& A, const LinearPresentation& B) {
  require_rational(A);
  return reencode(mul(A, B));
}

LinearPresentation lang_star(const LinearPresentation& A) {
  require_rational(A);
  auto without_empty = hadamard(A, nonempty_words(A.field(), A.alphabet()));
  return reencode(star_unreduced(without_empty));
}

// ---------------------------------------------------------------- automatic sequences

Word numeration_word(unsigned long long n, std::size_t k, Numeration enc) {
  if (k == 0) throw std::invalid_argument("numeration: empty alphabet");
  std::vector<Word::Letter> digits;
  if (enc == Numeration::Bijective) {
    while (n > 0) {
      unsigned long long d = n % k;
      if (d == 0) d = k;
      digits.push_back(static_cast<Word::Letter>(d - 1));
      n = (n - d) / k;
    }
  } else {
    while (n > 0) {
      digits.push_back(static_cast<Word::Letter>(n % k));
      n /= k;
    }
  }
  return Word(std::move(digits));
}

Scalar autoseq_sample(const LinearPresentation& A, unsigned long long n, Numeration enc) {
  return coeff(A, numeration_word(n, A.letters(), enc));
}

}  // namespace ncrs
