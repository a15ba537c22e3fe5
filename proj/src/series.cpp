#include "ncrs/series.hpp"

#include <map>
#include <set>

namespace ncrs {

namespace {

void require_compatible(const LinearPresentation& A, const LinearPresentation& B, const char* op) {
  if (!(A.field() == B.field())) throw Mismatch(std::string(op) + ": operands over different fields");
  if (!(A.alphabet() == B.alphabet())) throw Mismatch(std::string(op) + ": operands over different alphabets");
}

Matrix zeros(const Field& f, std::size_t r, std::size_t c) { return Matrix(f, r, c); }

// Levels of the word tree in (length, rl-lex) order: the word at index i of
// level l is X_{i mod k}·(word i / k of level l−1).
Jet jet_impl(const LinearPresentation& A, std::size_t n, bool parallel) {
  const auto& f = A.field();
  const std::size_t k = A.letters();
  Jet J;
  J.max_degree = n;
  std::vector<Word> level_words{Word()};
  std::vector<Vector> level_vecs{A.initial()};
  J.words.push_back(Word());
  J.coefficients.push_back(dot(A.final(), A.initial(), f));
  for (std::size_t len = 1; len <= n; ++len) {
    const std::size_t count = level_words.size() * k;
    std::vector<Word> words(count);
    std::vector<Vector> vecs(count);
    Vector coefs(count);
#pragma omp parallel for schedule(static) if (parallel)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      const std::size_t parent = static_cast<std::size_t>(i) / k;
      const auto x = static_cast<Word::Letter>(static_cast<std::size_t>(i) % k);
      words[i] = level_words[parent].prepend(x);
      vecs[i] = A.matrix(x).apply(level_vecs[parent]);
      coefs[i] = dot(A.final(), vecs[i], f);
    }
    for (std::size_t i = 0; i < count; ++i) {
      J.words.push_back(words[i]);
      J.coefficients.push_back(coefs[i]);
    }
    level_words = std::move(words);
    level_vecs = std::move(vecs);
  }
  return J;
}

Matrix hankel_impl(const LinearPresentation& A, std::size_t n, bool parallel) {
  const auto& f = A.field();
  auto words = enumerate_words(A.letters(), n);
  const std::size_t m = words.size();
  std::vector<Vector> left(m), right(m);
#pragma omp parallel for schedule(static) if (parallel)
  for (long long i = 0; i < static_cast<long long>(m); ++i) {
    Vector l = A.final();
    for (auto x : words[i].letters()) l = A.matrix(x).apply_left(l);
    left[i] = std::move(l);
    right[i] = A.act(words[i], A.initial());
  }
  Matrix H(f, m, m);
#pragma omp parallel for schedule(static) if (parallel)
  for (long long i = 0; i < static_cast<long long>(m); ++i)
    for (std::size_t j = 0; j < m; ++j) H(i, j) = dot(left[i], right[j], f);
  return H;
}

// Series of a tree presentation: basis = interior words, ρ(X)A_u = A_{Xu}
// when Xu is interior, else the μ-row of the leaf Xu.
LinearPresentation tree_series(const Field& f, const Alphabet& a, const std::vector<Word>& interior,
                               const Vector& eps, const std::vector<Word>& leaves, const std::vector<Vector>& mu) {
  const std::size_t n = interior.size(), k = a.size();
  if (eps.size() != n) throw std::invalid_argument("tree presentation: eps has wrong length");
  if (mu.size() != leaves.size()) throw std::invalid_argument("tree presentation: one μ row per leaf expected");
  if (n == 0) return LinearPresentation::zero(f, a);
  std::map<Word, std::size_t, RlLexLess> in_idx, leaf_idx;
  for (std::size_t i = 0; i < n; ++i) in_idx[interior[i]] = i;
  for (std::size_t i = 0; i < leaves.size(); ++i) leaf_idx[leaves[i]] = i;
  std::vector<Matrix> M(k, Matrix(f, n, n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t x = 0; x < k; ++x) {
      Word child = interior[u].prepend(static_cast<Word::Letter>(x));
      if (auto it = in_idx.find(child); it != in_idx.end()) {
        M[x](it->second, u) = f.one();
        continue;
      }
      auto lt = leaf_idx.find(child);
      if (lt == leaf_idx.end()) throw std::invalid_argument("tree presentation: missing leaf " + child.to_string(a));
      const auto& row = mu[lt->second];
      if (row.size() != n) throw std::invalid_argument("tree presentation: μ row has wrong length");
      for (std::size_t v = 0; v < n; ++v) M[x](v, u) = row[v];
    }
  auto root = in_idx.find(Word());
  if (root == in_idx.end()) throw std::invalid_argument("tree presentation: ∅ must be interior");
  return LinearPresentation(f, a, std::move(M), unit_vector(f, n, root->second), eps);
}

}  // namespace

// ---------------------------------------------------------------- LinearPresentation

LinearPresentation::LinearPresentation(Field f, Alphabet alphabet, std::vector<Matrix> matrices, Vector initial,
                                       Vector final)
    : field_(f),
      alphabet_(std::move(alphabet)),
      matrices_(std::move(matrices)),
      initial_(std::move(initial)),
      final_(std::move(final)) {
  const std::size_t a = initial_.size();
  if (matrices_.size() != alphabet_.size()) throw std::invalid_argument("presentation: one matrix per letter expected");
  if (final_.size() != a) throw std::invalid_argument("presentation: initial and final vectors differ in length");
  for (const auto& m : matrices_) {
    if (m.rows() != a || m.cols() != a) throw std::invalid_argument("presentation: matrix has wrong shape");
    if (a > 0 && !(m.field() == field_)) throw Mismatch("presentation: matrix over another field");
  }
  for (const auto* v : {&initial_, &final_})
    for (const auto& x : *v)
      if (!(x.field() == field_)) throw Mismatch("presentation: vector entry over another field");
}

LinearPresentation LinearPresentation::zero(const Field& f, const Alphabet& a) {
  return LinearPresentation(f, a, std::vector<Matrix>(a.size(), Matrix(f, 0, 0)), {}, {});
}

LinearPresentation LinearPresentation::constant(const Scalar& c, const Alphabet& a) {
  auto f = c.field();
  return LinearPresentation(f, a, std::vector<Matrix>(a.size(), Matrix(f, 1, 1)), {f.one()}, {c});
}

Scalar LinearPresentation::epsilon() const { return dot(final_, initial_, field_); }

Vector LinearPresentation::act(const Word& w, Vector v) const {
  for (std::size_t i = w.size(); i-- > 0;) v = matrices_.at(w[i]).apply(v);
  return v;
}

// ---------------------------------------------------------------- Jet

Scalar Jet::at(const Word& w) const {
  for (std::size_t i = 0; i < words.size(); ++i)
    if (words[i] == w) return coefficients[i];
  throw std::out_of_range("jet: word longer than the jet degree");
}

std::string Jet::to_string(const Alphabet& a) const {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& c = coefficients[i];
    if (c.is_zero()) continue;
    bool neg = c.is_negative();
    Scalar mag = neg ? -c : c;
    std::string word;
    for (std::size_t j = 0; j < words[i].size(); ++j) {
      if (j) word += '*';
      word += a.name(words[i][j]);
    }
    std::string term;
    if (word.empty())
      term = mag.to_string();
    else if (mag.is_one())
      term = word;
    else
      term = mag.to_string() + "*" + word;
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- constructors

LinearPresentation monomial(const Field& f, const Alphabet& a, const Word& w, const Scalar& c) {
  const std::size_t l = w.size(), n = l + 1;
  std::vector<Matrix> M(a.size(), Matrix(f, n, n));
  for (std::size_t i = 1; i <= l; ++i) M.at(w[i - 1])(i - 1, i) = f.one();
  Vector gamma = zero_vector(f, n);
  gamma[0] = c;
  return LinearPresentation(f, a, std::move(M), unit_vector(f, n, l), std::move(gamma));
}

LinearPresentation from_terms(const Field& f, const Alphabet& a, const std::vector<std::pair<Word, Scalar>>& terms) {
  auto acc = LinearPresentation::zero(f, a);
  for (const auto& [w, c] : terms) acc = add(acc, monomial(f, a, w, c));
  return minimize(acc);
}

LinearPresentation geometric(const Field& f, const Alphabet& a, const Vector& lambdas) {
  if (lambdas.size() != a.size()) throw std::invalid_argument("geometric: one coefficient per letter expected");
  std::vector<Matrix> M;
  for (const auto& l : lambdas) {
    Matrix m(f, 1, 1);
    m(0, 0) = l;
    M.push_back(std::move(m));
  }
  return LinearPresentation(f, a, std::move(M), {f.one()}, {f.one()});
}

// ---------------------------------------------------------------- evaluation

Scalar coeff(const LinearPresentation& A, const Word& w) {
  for (auto x : w.letters())
    if (x >= A.letters()) throw std::invalid_argument("coeff: word uses a letter outside the alphabet");
  return dot(A.final(), A.act(w, A.initial()), A.field());
}

Jet jet(const LinearPresentation& A, std::size_t n) { return jet_impl(A, n, true); }
Jet jet_serial(const LinearPresentation& A, std::size_t n) { return jet_impl(A, n, false); }

LinearPresentation shift(const LinearPresentation& A, const Word& w) {
  return LinearPresentation(A.field(), A.alphabet(), A.matrices(), A.act(w, A.initial()), A.final());
}

// ---------------------------------------------------------------- rational operations

LinearPresentation add(const LinearPresentation& A, const LinearPresentation& B) {
  require_compatible(A, B, "add");
  const auto& f = A.field();
  const std::size_t a = A.dim(), b = B.dim();
  std::vector<Matrix> M;
  for (std::size_t x = 0; x < A.letters(); ++x)
    M.push_back(block(A.matrix(x), zeros(f, a, b), zeros(f, b, a), B.matrix(x)));
  return LinearPresentation(f, A.alphabet(), std::move(M), concat(A.initial(), B.initial()),
                            concat(A.final(), B.final()));
}

LinearPresentation scale(const Scalar& c, const LinearPresentation& A) {
  return LinearPresentation(A.field(), A.alphabet(), A.matrices(), scaled(c, A.initial()), A.final());
}

LinearPresentation negate(const LinearPresentation& A) { return scale(-A.field().one(), A); }

LinearPresentation subtract(const LinearPresentation& A, const LinearPresentation& B) { return add(A, negate(B)); }

LinearPresentation mul(const LinearPresentation& A, const LinearPresentation& B) {
  require_compatible(A, B, "mul");
  const auto& f = A.field();
  const std::size_t a = A.dim(), b = B.dim();
  const Scalar epsA = A.epsilon();
  std::vector<Matrix> M;
  for (std::size_t x = 0; x < A.letters(); ++x) {
    Matrix coupling = outer(A.matrix(x).apply(A.initial()), B.final(), f);
    M.push_back(block(B.matrix(x), zeros(f, b, a), coupling, A.matrix(x)));
  }
  return LinearPresentation(f, A.alphabet(), std::move(M), concat(B.initial(), zero_vector(f, a)),
                            concat(scaled(epsA, B.final()), A.final()));
}

LinearPresentation inverse_unreduced(const LinearPresentation& A) {
  const auto& f = A.field();
  const Scalar c = A.epsilon();
  if (c.is_zero()) throw NotInvertible("inverse: constant coefficient is zero");
  const Scalar cinv = c.inverse();
  const std::size_t a = A.dim(), n = a + 1;
  std::vector<Matrix> M;
  for (std::size_t x = 0; x < A.letters(); ++x) {
    const Matrix& Mx = A.matrix(x);
    Vector Ms = Mx.apply(A.initial());
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < a; ++i) {
      Scalar g = A.final()[i] * cinv;
      for (std::size_t l = 0; l < a; ++l) m(l, i) = Mx(l, i) - g * Ms[l];
    }
    for (std::size_t l = 0; l < a; ++l) m(l, a) = -(cinv * Ms[l]);
    M.push_back(std::move(m));
  }
  Vector gamma;
  for (const auto& g : A.final()) gamma.push_back(g * cinv);
  gamma.push_back(cinv);
  return LinearPresentation(f, A.alphabet(), std::move(M), unit_vector(f, n, a), std::move(gamma));
}

LinearPresentation inverse(const LinearPresentation& A) { return minimize(inverse_unreduced(A)); }

LinearPresentation star_unreduced(const LinearPresentation& A) {
  const auto& f = A.field();
  if (!A.epsilon().is_zero()) throw MathError("star: constant coefficient must be zero");
  const std::size_t a = A.dim(), n = a + 1;
  std::vector<Matrix> M;
  for (std::size_t x = 0; x < A.letters(); ++x) {
    const Matrix& Mx = A.matrix(x);
    Vector Ms = Mx.apply(A.initial());
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t l = 0; l < a; ++l) m(l, i) = Mx(l, i) + A.final()[i] * Ms[l];
    for (std::size_t l = 0; l < a; ++l) m(l, a) = Ms[l];
    M.push_back(std::move(m));
  }
  Vector gamma = A.final();
  gamma.push_back(f.one());
  return LinearPresentation(f, A.alphabet(), std::move(M), unit_vector(f, n, a), std::move(gamma));
}

LinearPresentation hadamard(const LinearPresentation& A, const LinearPresentation& B) {
  require_compatible(A, B, "hadamard");
  std::vector<Matrix> M;
  for (std::size_t x = 0; x < A.letters(); ++x) M.push_back(kron(A.matrix(x), B.matrix(x)));
  return LinearPresentation(A.field(), A.alphabet(), std::move(M), kron(A.initial(), B.initial()),
                            kron(A.final(), B.final()));
}

LinearPresentation shuffle(const LinearPresentation& A, const LinearPresentation& B) {
  require_compatible(A, B, "shuffle");
  const auto& f = A.field();
  const auto Ia = Matrix::identity(f, A.dim()), Ib = Matrix::identity(f, B.dim());
  std::vector<Matrix> M;
  for (std::size_t x = 0; x < A.letters(); ++x) M.push_back(kron(A.matrix(x), Ib) + kron(Ia, B.matrix(x)));
  return LinearPresentation(f, A.alphabet(), std::move(M), kron(A.initial(), B.initial()),
                            kron(A.final(), B.final()));
}

LinearPresentation shuffle_inverse_char_p(const LinearPresentation& A) {
  const auto& f = A.field();
  if (f.is_rational()) throw CharZero("shuffle inverse: only available over a prime field");
  const Scalar c = A.epsilon();
  if (c.is_zero()) throw NotInvertible("shuffle inverse: constant coefficient is zero");
  // For ε(U) = 1, U^{ш p} = 1, so U^{ш(p−1)} is the inverse.
  auto base = minimize(scale(c.inverse(), A));
  auto acc = LinearPresentation::constant(f.one(), A.alphabet());
  for (unsigned long e = f.characteristic() - 1; e > 0; e >>= 1) {
    if (e & 1) acc = minimize(shuffle(acc, base));
    if (e > 1) base = minimize(shuffle(base, base));
  }
  return scale(c.inverse(), acc);
}

LinearPresentation derive(const LinearPresentation& A, std::size_t letter) {
  const auto& f = A.field();
  if (letter >= A.letters()) throw std::invalid_argument("derive: letter outside the alphabet");
  const std::size_t a = A.dim();
  const Matrix& Md = A.matrix(letter);
  // ρ(X)∂A = ∂ρ(X)A + ρ(X)ρ(X_d)A for every letter X (not only X = X_d).
  std::vector<Matrix> M;
  for (std::size_t x = 0; x < A.letters(); ++x)
    M.push_back(block(A.matrix(x), A.matrix(x) * Md, zeros(f, a, a), A.matrix(x)));
  // ε(∂A_i) is the coefficient of X_d in A_i.
  Vector eps_d = Md.apply_left(A.final());
  return LinearPresentation(f, A.alphabet(), std::move(M), concat(zero_vector(f, a), A.initial()),
                            concat(A.final(), eps_d));
}

LinearPresentation reverse(const LinearPresentation& A) {
  std::vector<Matrix> M;
  for (const auto& m : A.matrices()) M.push_back(m.transpose());
  return LinearPresentation(A.field(), A.alphabet(), std::move(M), A.final(), A.initial());
}

LinearPresentation subst_linear(const LinearPresentation& A, const Matrix& C) {
  const std::size_t k = A.letters();
  if (C.rows() != k || C.cols() != k) throw std::invalid_argument("subst_linear: matrix must be k×k");
  if (!(C.field() == A.field())) throw Mismatch("subst_linear: substitution over another field");
  std::vector<Matrix> M(k, Matrix(A.field(), A.dim(), A.dim()));
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t j = 0; j < k; ++j)
      if (!C(j, l).is_zero()) M[l] = M[l] + A.matrix(j).scaled(C(j, l));
  return LinearPresentation(A.field(), A.alphabet(), std::move(M), A.initial(), A.final());
}

LinearPresentation compose(const LinearPresentation& A, const LinearPresentation& B) {
  require_compatible(A, B, "compose");
  const auto& f = A.field();
  const auto Ia = Matrix::identity(f, A.dim());
  const auto sg = outer(B.initial(), B.final(), f);
  std::vector<Matrix> M;
  for (std::size_t x = 0; x < A.letters(); ++x) M.push_back(kron(Ia, B.matrix(x)) + kron(A.matrix(x), sg));
  return LinearPresentation(f, A.alphabet(), std::move(M), kron(A.initial(), B.initial()),
                            kron(A.final(), B.final()));
}

LinearPresentation power(const LinearPresentation& A, unsigned long n) {
  auto acc = LinearPresentation::constant(A.field().one(), A.alphabet());
  auto base = minimize(A);
  for (; n > 0; n >>= 1) {
    if (n & 1) acc = minimize(mul(acc, base));
    if (n > 1) base = minimize(mul(base, base));
  }
  return acc;
}

// ---------------------------------------------------------------- minimization

LinearPresentation minimize(const LinearPresentation& A) {
  const auto& f = A.field();
  const std::size_t k = A.letters();

  // Reachable part: span of M(w)s, basis in discovery order.
  SpanBuilder reach(f, A.dim());
  std::vector<Vector> basis;
  if (reach.insert(A.initial())) basis.push_back(A.initial());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t x = 0; x < k; ++x) {
      Vector v = A.matrix(x).apply(basis[i]);
      if (reach.insert(v)) basis.push_back(std::move(v));
    }
  const std::size_t m = basis.size();
  if (m == 0) return LinearPresentation::zero(f, A.alphabet());

  std::vector<Matrix> R(k, Matrix(f, m, m));
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t j = 0; j < m; ++j) {
      auto c = reach.coordinates(A.matrix(x).apply(basis[j]));
      for (std::size_t i = 0; i < m; ++i) R[x](i, j) = (*c)[i];
    }
  Vector gamma(m);
  for (std::size_t j = 0; j < m; ++j) gamma[j] = dot(A.final(), basis[j], f);

  // Unobservable part: the largest M-stable subspace inside ker γᵀ.
  Subspace K = kernel_basis(Matrix::from_rows(f, {gamma}, m));
  while (true) {
    Subspace next = K;
    for (std::size_t x = 0; x < k && next.dim() > 0; ++x) next = intersect(next, preimage(R[x], K));
    if (next == K) break;
    K = std::move(next);
  }
  Subspace Q = K.annihilator();  // rows q with q·K = 0; the quotient map
  const std::size_t d = Q.dim();
  if (d == 0) return LinearPresentation::zero(f, A.alphabet());

  // M''·Q = Q·M, coordinates read off at the echelon pivots.
  std::vector<Matrix> M(k, Matrix(f, d, d));
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t i = 0; i < d; ++i) {
      Vector row = R[x].apply_left(Q.basis()[i]);
      for (std::size_t j = 0; j < d; ++j) M[x](i, j) = row[Q.pivots()[j]];
    }
  Vector s(d), g(d);
  for (std::size_t i = 0; i < d; ++i) {
    s[i] = Q.basis()[i][0];  // the reachable initial vector is e₁
    g[i] = gamma[Q.pivots()[i]];
  }
  return LinearPresentation(f, A.alphabet(), std::move(M), std::move(s), std::move(g));
}

// ---------------------------------------------------------------- normal form

NormalPresentation::NormalPresentation(Field f, Alphabet a, std::vector<Word> interior, Vector eps,
                                       std::vector<Word> leaves, std::vector<Vector> mu)
    : field_(f),
      alphabet_(std::move(a)),
      interior_(std::move(interior)),
      eps_(std::move(eps)),
      leaves_(std::move(leaves)),
      mu_(std::move(mu)) {}

LinearPresentation NormalPresentation::to_presentation() const {
  return tree_series(field_, alphabet_, interior_, eps_, leaves_, mu_);
}

std::string NormalPresentation::bytes() const {
  auto word = [&](const Word& w) { return w.empty() ? std::string("1") : w.to_string(alphabet_); };
  std::string s = field_.flag() + "|";
  for (std::size_t i = 0; i < alphabet_.size(); ++i) s += (i ? "," : "") + alphabet_.name(i);
  s += "|";
  for (std::size_t i = 0; i < interior_.size(); ++i)
    s += (i ? "," : "") + word(interior_[i]) + "=" + eps_[i].to_string();
  s += "|";
  for (std::size_t i = 0; i < leaves_.size(); ++i) {
    s += (i ? ";" : "") + word(leaves_[i]) + ":";
    for (std::size_t j = 0; j < mu_[i].size(); ++j) s += (j ? "," : "") + mu_[i][j].to_string();
  }
  return s;
}

bool NormalPresentation::operator==(const NormalPresentation& o) const {
  return field_ == o.field_ && alphabet_ == o.alphabet_ && interior_ == o.interior_ && eps_ == o.eps_ &&
         leaves_ == o.leaves_ && mu_ == o.mu_;
}

NormalPresentation normalize(const LinearPresentation& A) {
  const auto m = minimize(A);
  const auto& f = m.field();
  const std::size_t k = m.letters(), a = m.dim();
  if (a == 0) return NormalPresentation(f, m.alphabet(), {}, {}, {Word()}, {Vector{}});

  // Greedy over the frontier: the smallest pending word becomes interior
  // when its shift is independent of the shifts already collected.
  std::map<Word, Vector, RlLexLess> frontier;
  frontier.emplace(Word(), m.initial());
  SpanBuilder span(f, a);
  std::vector<Word> interior, leaves;
  Vector eps;
  std::vector<Vector> mu;
  while (!frontier.empty()) {
    auto node = frontier.extract(frontier.begin());
    const Word& w = node.key();
    Vector& v = node.mapped();
    if (auto c = span.coordinates(v)) {
      leaves.push_back(w);
      mu.push_back(std::move(*c));
      continue;
    }
    span.insert(v);
    interior.push_back(w);
    eps.push_back(dot(m.final(), v, f));
    for (std::size_t x = 0; x < k; ++x) {
      auto xl = static_cast<Word::Letter>(x);
      frontier.emplace(w.prepend(xl), m.matrix(x).apply(v));
    }
  }
  for (auto& row : mu) row.resize(a, f.zero());
  return NormalPresentation(f, m.alphabet(), std::move(interior), std::move(eps), std::move(leaves), std::move(mu));
}

LinearPresentation from_tree(const Field& f, const Alphabet& a, const FullTree& T, const Vector& eps,
                             const std::vector<Vector>& mu) {
  if (T.arity() != a.size()) throw std::invalid_argument("from_tree: tree arity differs from the alphabet size");
  return tree_series(f, a, T.interior(), eps, T.leaves(), mu);
}

bool equals(const LinearPresentation& A, const LinearPresentation& B) {
  require_compatible(A, B, "equals");
  return normalize(A) == normalize(B);
}

bool equals_by_difference(const LinearPresentation& A, const LinearPresentation& B) {
  return is_zero_series(subtract(A, B));
}

bool is_zero_series(const LinearPresentation& A) { return minimize(A).dim() == 0; }

std::size_t complexity(const LinearPresentation& A) { return minimize(A).dim(); }

std::size_t norm(const LinearPresentation& A) {
  if (!A.epsilon().is_one()) throw NotSpecialUnit("norm: constant coefficient must be 1");
  const auto m = minimize(A);
  const auto& f = m.field();
  const std::size_t a = m.dim();
  // The constant 1 lies in the closure iff some v with M(X)v = 0 for all X
  // has γᵀv ≠ 0.
  std::vector<Vector> rows;
  for (const auto& M : m.matrices())
    for (std::size_t r = 0; r < a; ++r) rows.emplace_back(M.row(r).begin(), M.row(r).end());
  auto common = kernel_basis(Matrix::from_rows(f, rows, a));
  for (const auto& v : common.basis())
    if (!dot(m.final(), v, f).is_zero()) return a - 1;
  return a;
}

std::size_t saturation_level(const LinearPresentation& A) {
  const auto m = minimize(A);
  const auto& f = m.field();
  Subspace K = kernel_basis(Matrix::from_rows(f, {m.final()}, m.dim()));
  for (std::size_t n = 0;; ++n) {
    Subspace next = K;
    for (std::size_t x = 0; x < m.letters(); ++x) next = intersect(next, preimage(m.matrix(x), K));
    if (next == K) return n;
    K = std::move(next);
  }
}

Matrix hankel_block(const LinearPresentation& A, std::size_t n) { return hankel_impl(A, n, true); }
Matrix hankel_block_serial(const LinearPresentation& A, std::size_t n) { return hankel_impl(A, n, false); }

}  // namespace ncrs
