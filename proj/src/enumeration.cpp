#include "ncrs/enumeration.hpp"

#include <omp.h>

#include <algorithm>
#include <set>

#include "ncrs/errors.hpp"
#include "ncrs/series.hpp"

namespace ncrs {

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const mpz_class& c) { return QPoly({c}); }

QPoly QPoly::monomial(std::size_t e, const mpz_class& c) {
  std::vector<mpz_class> v(e + 1);
  v[e] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpz_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::shifted(std::size_t e) const {
  if (is_zero()) return {};
  std::vector<mpz_class> r(e);
  r.insert(r.end(), c_.begin(), c_.end());
  return QPoly(std::move(r));
}

QPoly QPoly::divided_by_q_power(std::size_t e) const {
  for (std::size_t i = 0; i < std::min(e, c_.size()); ++i)
    if (c_[i] != 0) throw DivisibilityViolation("polynomial is not divisible by q^" + std::to_string(e));
  if (e >= c_.size()) return {};
  return QPoly(std::vector<mpz_class>(c_.begin() + static_cast<long>(e), c_.end()));
}

mpz_class QPoly::evaluate(const mpz_class& q) const {
  mpz_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + c_[i];
  return acc;
}

namespace {

// Appends "± c*m" to out, where m is a monomial text ("" for 1).
void append_term(std::string& out, const mpz_class& c, const std::string& m) {
  mpz_class mag = abs(c);
  std::string t;
  if (m.empty())
    t = mag.get_str();
  else if (mag == 1)
    t = m;
  else
    t = mag.get_str() + "*" + m;
  if (out.empty())
    out = (c < 0 ? "-" : "") + t;
  else
    out += (c < 0 ? " - " : " + ") + t;
}

std::string power_text(const char* var, std::size_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string QPoly::to_string(const std::string& var) const {
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != 0) append_term(out, c_[i], power_text(var.c_str(), i));
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- QSPoly

QSPoly QSPoly::from_qpoly(const QPoly& p, std::size_t s_power) {
  QSPoly r;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i] != 0) r.c_[{i, s_power}] = p.coeffs()[i];
  return r;
}

QSPoly QSPoly::operator+(const QSPoly& o) const {
  QSPoly r = *this;
  for (const auto& [k, v] : o.c_) {
    auto& x = r.c_[k];
    x += v;
    if (x == 0) r.c_.erase(k);
  }
  return r;
}

QSPoly QSPoly::operator-(const QSPoly& o) const {
  QSPoly r = *this;
  for (const auto& [k, v] : o.c_) {
    auto& x = r.c_[k];
    x -= v;
    if (x == 0) r.c_.erase(k);
  }
  return r;
}

QSPoly QSPoly::operator*(const QPoly& p) const {
  QSPoly r;
  for (const auto& [k, v] : c_)
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      if (p.coeffs()[i] == 0) continue;
      auto& x = r.c_[{k.first + i, k.second}];
      x += v * p.coeffs()[i];
    }
  std::erase_if(r.c_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

mpz_class QSPoly::coeff(std::size_t i, std::size_t j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? mpz_class(0) : it->second;
}

QPoly QSPoly::at_s_one() const {
  std::vector<mpz_class> r;
  for (const auto& [k, v] : c_) {
    if (r.size() <= k.first) r.resize(k.first + 1);
    r[k.first] += v;
  }
  return QPoly(std::move(r));
}

QPoly QSPoly::at_q(const mpz_class& q0) const {
  std::vector<mpz_class> r;
  for (const auto& [k, v] : c_) {
    if (r.size() <= k.second) r.resize(k.second + 1);
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), q0.get_mpz_t(), k.first);
    r[k.second] += v * p;
  }
  return QPoly(std::move(r));
}

QPoly QSPoly::at_s_q() const {
  std::vector<mpz_class> r;
  for (const auto& [k, v] : c_) {
    std::size_t e = k.first + k.second;
    if (r.size() <= e) r.resize(e + 1);
    r[e] += v;
  }
  return QPoly(std::move(r));
}

std::map<long, mpz_class> QSPoly::at_s_q_power(long e) const {
  std::map<long, mpz_class> r;
  for (const auto& [k, v] : c_) r[static_cast<long>(k.first) + e * static_cast<long>(k.second)] += v;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

std::string QSPoly::to_string() const {
  std::string out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    auto q = power_text("q", it->first.first), s = power_text("s", it->first.second);
    std::string m = q.empty() ? s : (s.empty() ? q : q + "*" + s);
    append_term(out, it->second, m);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- tree sums

namespace {

// Σ_{L ∈ leaves(T)} #{X ∈ words : X < L}.
std::size_t below_leaves(const FullTree& T, const std::vector<Word>& words) {
  std::size_t total = 0;
  for (const auto& L : T.leaves())
    for (const auto& X : words)
      if (rl_lex_compare(X, L) < 0) ++total;
  return total;
}

struct TreeSum {
  bool units;  // F instead of E
  std::map<std::string, QPoly> memo;

  QPoly operator()(const FullTree& T) {
    auto key = std::to_string(T.arity()) + T.to_string(Alphabet::standard(T.arity()));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const auto& in = T.interior();
    std::size_t main_exp = units ? in.size() + T.leaves().size() - 1 : in.size();
    main_exp += below_leaves(T, in);
    QPoly r = QPoly::monomial(main_exp);
    for (const auto& sub : subtrees(T)) {
      if (sub.interior().size() == in.size()) continue;
      std::vector<Word> rest;
      std::set_difference(in.begin(), in.end(), sub.interior().begin(), sub.interior().end(),
                          std::back_inserter(rest), RlLexLess{});
      r -= (*this)(sub).shifted(below_leaves(T, rest));
    }
    memo.emplace(key, r);
    return r;
  }
};

}  // namespace

QPoly E_T(const FullTree& T) { return TreeSum{false, {}}(T); }
QPoly F_T(const FullTree& T) { return TreeSum{true, {}}(T); }

QPoly E_n_generic(std::size_t k, std::size_t n) {
  TreeSum sum{false, {}};
  QPoly r;
  for (const auto& T : full_trees(k, n)) r += sum(T);
  return r;
}

QPoly F_n_generic(std::size_t k, std::size_t n) {
  TreeSum sum{true, {}};
  QPoly r;
  for (const auto& T : full_trees(k, n)) r += sum(T);
  return r;
}

QPoly w_tree_sum(std::size_t n) {
  QPoly r;
  for (const auto& T : full_trees(2, n)) r += QPoly::monomial(n + below_leaves(T, T.interior()));
  return r;
}

// ---------------------------------------------------------------- fast recursions

const QPoly& FastRecursion::w(std::size_t n) {
  if (w_.empty()) w_.push_back(QPoly::constant(1));
  while (w_.size() <= n) {
    const std::size_t m = w_.size() - 1;  // computing w_{m+1}
    QPoly acc;
    for (std::size_t j = 0; j <= m; ++j) acc += (w_[j] * w_[m - j]).shifted(j * (m + 1 - j));
    w_.push_back(acc.shifted(tilde_ ? 1 : 3 + m));
  }
  return w_[n];
}

const QPoly& FastRecursion::p(std::size_t j, std::size_t n) {
  if (j > n) throw std::invalid_argument("p_{j,n} needs j ≤ n");
  auto key = std::make_pair(j, n);
  if (auto it = p_.find(key); it != p_.end()) return it->second;
  QPoly r;
  if (j == 0) {
    r = w(n).divided_by_q_power(n);
  } else {
    for (std::size_t h = 0; h <= n - j; ++h) r += (w(h) * p(j - 1, n - 1 - h)).shifted(h * (n - 1 - h));
  }
  return p_.emplace(key, std::move(r)).first->second;
}

const QPoly& FastRecursion::E(std::size_t n) {
  while (E_.size() <= n) {
    const std::size_t m = E_.size();
    QPoly r = w(m);
    for (std::size_t j = 0; j < m; ++j) r -= p(j, m) * E_[j];
    E_.push_back(std::move(r));
  }
  return E_[n];
}

const QPoly& FastRecursion::F(std::size_t n) {
  while (F_.size() <= n) {
    const std::size_t m = F_.size();
    QPoly r = w(m).shifted(m);
    for (std::size_t j = 0; j < m; ++j) r -= p(j, m) * F_[j];
    F_.push_back(std::move(r));
  }
  return F_[n];
}

const QSPoly& FastRecursion::P(std::size_t n) {
  while (P_.size() <= n) {
    const std::size_t m = P_.size();
    QSPoly r = QSPoly::from_qpoly(w(m), m);
    for (std::size_t j = 0; j < m; ++j) r = r - P_[j] * p(j, m);
    P_.push_back(std::move(r));
  }
  return P_[n];
}

QPoly fast_w(std::size_t n) { return FastRecursion().w(n); }
QPoly fast_p(std::size_t j, std::size_t n) { return FastRecursion().p(j, n); }
QPoly fast_E(std::size_t n) { return FastRecursion().E(n); }
QPoly fast_F(std::size_t n) { return FastRecursion().F(n); }
QPoly fast_Etilde(std::size_t n) { return FastRecursion(true).E(n); }
QSPoly P_n(std::size_t n) { return FastRecursion().P(n); }

// ---------------------------------------------------------------- census

namespace {

// Free parameters of tree presentations on T: ε on interior words (the root
// is pinned to 1 for units) and μ(L, X) for X < L.
struct TreeShape {
  FullTree tree;
  std::vector<std::size_t> free_eps;                        // interior indices
  std::vector<std::pair<std::size_t, std::size_t>> free_mu;  // (leaf, interior)

  std::size_t parameters() const { return free_eps.size() + free_mu.size(); }
};

TreeShape shape_of(const FullTree& T, bool units) {
  TreeShape s{T, {}, {}};
  const auto& in = T.interior();
  for (std::size_t i = 0; i < in.size(); ++i)
    if (!(units && in[i].empty())) s.free_eps.push_back(i);
  for (std::size_t l = 0; l < T.leaves().size(); ++l)
    for (std::size_t i = 0; i < in.size(); ++i)
      if (rl_lex_compare(in[i], T.leaves()[l]) < 0) s.free_mu.emplace_back(l, i);
  return s;
}

// Canonical key and statistic (complexity or norm) of the index-th
// presentation on the shape, or nothing when it falls outside the census.
std::optional<std::pair<std::string, std::size_t>> census_point(const TreeShape& s, const Field& f,
                                                                const Alphabet& a, unsigned long long index,
                                                                std::size_t n, bool units) {
  const auto& in = s.tree.interior();
  const std::uint32_t q = f.characteristic();
  Vector eps = zero_vector(f, in.size());
  if (units) eps[0] = f.one();  // ∅ is the first interior word
  std::vector<Vector> mu(s.tree.leaves().size(), zero_vector(f, in.size()));
  for (auto i : s.free_eps) {
    eps[i] = f.from_int(static_cast<long long>(index % q));
    index /= q;
  }
  for (auto [l, i] : s.free_mu) {
    mu[l][i] = f.from_int(static_cast<long long>(index % q));
    index /= q;
  }
  auto normal = normalize(from_tree(f, a, s.tree, eps, mu));
  std::size_t stat = units ? norm(normal.to_presentation()) : normal.dim();
  if (stat > n) return std::nullopt;
  return std::make_pair(normal.bytes(), stat);
}

CensusResult census_impl(std::uint32_t q, std::size_t k, std::size_t n, bool units, bool parallel) {
  const Field f = Field::prime(q);
  const Alphabet a = Alphabet::standard(k);
  std::vector<TreeShape> shapes;
  const std::size_t max_interior = units ? n + 1 : n;
  for (std::size_t size = units ? 1 : 0; size <= max_interior; ++size)
    for (const auto& T : full_trees(k, size)) shapes.push_back(shape_of(T, units));

  CensusResult result;
  std::map<std::string, std::size_t> seen;
  for (const auto& s : shapes) {
    unsigned long long total = 1;
    for (std::size_t i = 0; i < s.parameters(); ++i) total *= q;
    result.presentations += total;
    const int threads = parallel ? omp_get_max_threads() : 1;
    std::vector<std::map<std::string, std::size_t>> local(threads);
#pragma omp parallel for schedule(dynamic, 256) num_threads(threads) if (parallel)
    for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
      auto point = census_point(s, f, a, static_cast<unsigned long long>(idx), n, units);
      if (point) local[omp_get_thread_num()].insert(std::move(*point));
    }
    for (auto& m : local) seen.merge(m);
  }
  for (const auto& [key, stat] : seen) ++result.counts[stat];
  return result;
}

}  // namespace

CensusResult census(std::uint32_t q, std::size_t k, std::size_t n, bool units) {
  return census_impl(q, k, n, units, true);
}

CensusResult census_serial(std::uint32_t q, std::size_t k, std::size_t n, bool units) {
  return census_impl(q, k, n, units, false);
}

}  // namespace ncrs
