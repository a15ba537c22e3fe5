#include "ncrs/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace ncrs {

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = f.one();
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b, const Field& f) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Scalar acc = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc.add_product(a[i], b[i]);
  return acc;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector scaled(const Scalar& c, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector r;
  r.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) r.push_back(x * y);
  return r;
}

Vector concat(const Vector& a, const Vector& b) {
  Vector r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::string to_string(std::span<const Scalar> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].to_string();
  }
  return s + ")";
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_ints: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.from_int(rows[r][c]);
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  Vector out(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) out[r].add_product(a, v[c]);
    }
  return out;
}

Vector Matrix::apply_left(std::span<const Scalar> w) const {
  if (w.size() != rows_) throw std::invalid_argument("apply_left: dimension mismatch");
  Vector out(cols_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r) {
    if (w[r].is_zero()) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (!a.is_zero()) out[c].add_product(w[r], a);
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix m(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const auto& b = o(k, j);
        if (!b.is_zero()) m(i, j).add_product(a, b);
      }
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m = *this;
  for (auto& x : m.data_) x = c * x;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

bool Matrix::is_zero() const { return ncrs::is_zero(data_); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return m;
}

Matrix block(const Matrix& tl, const Matrix& tr, const Matrix& bl, const Matrix& br) {
  if (tl.rows() != tr.rows() || bl.rows() != br.rows() || tl.cols() != bl.cols() || tr.cols() != br.cols())
    throw std::invalid_argument("block: inconsistent block shapes");
  Matrix m(tl.field(), tl.rows() + bl.rows(), tl.cols() + tr.cols());
  auto put = [&m](const Matrix& b, std::size_t r0, std::size_t c0) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
  };
  put(tl, 0, 0);
  put(tr, 0, tl.cols());
  put(bl, tl.rows(), 0);
  put(br, tl.rows(), tl.cols());
  return m;
}

Matrix outer(const Vector& col, const Vector& row, const Field& f) {
  Matrix m(f, col.size(), row.size());
  for (std::size_t i = 0; i < col.size(); ++i)
    for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = col[i] * row[j];
  return m;
}

// ---------------------------------------------------------------- echelon

namespace {

struct Echelon {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form of the given rows (zero rows dropped).
Echelon rref(const Field& f, std::size_t n, std::vector<Vector> rows) {
  Echelon e;
  std::size_t next = 0;
  for (std::size_t col = 0; col < n && next < rows.size(); ++col) {
    std::size_t piv = next;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[next], rows[piv]);
    Scalar inv = rows[next][col].inverse();
    for (auto& x : rows[next]) x = x * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col].is_zero()) continue;
      Scalar c = -rows[r][col];
      for (std::size_t k = col; k < n; ++k)
        if (!rows[next][k].is_zero()) rows[r][k].add_product(c, rows[next][k]);
    }
    e.pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  e.rows = std::move(rows);
  (void)f;
  return e;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  return rref(m.field(), m.cols(), std::move(rows)).rows.size();
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

Subspace Subspace::full(const Field& f, std::size_t ambient) {
  Subspace s(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vector(f, ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw std::invalid_argument("span: vector has wrong length");
  auto e = rref(f, ambient, vectors);
  Subspace s(f, ambient);
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

bool Subspace::contains(const Vector& v) const { return extend_span(v).contained; }

Subspace::Extension Subspace::extend_span(const Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("extend_span: vector has wrong length");
  Vector residual = v;
  Vector coords;
  coords.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = v[pivots_[i]];
    coords.push_back(c);
    if (c.is_zero()) continue;
    Scalar neg = -c;
    for (std::size_t k = 0; k < ambient_; ++k)
      if (!basis_[i][k].is_zero()) residual[k].add_product(neg, basis_[i][k]);
  }
  if (is_zero(residual)) return {*this, true, std::move(coords)};
  auto vectors = basis_;
  vectors.push_back(v);
  return {span(field_, ambient_, vectors), false, std::nullopt};
}

Subspace Subspace::annihilator() const {
  return kernel_basis(Matrix::from_rows(field_, basis_, ambient_));
}

Subspace kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  std::size_t n = m.cols();
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  auto e = rref(f, n, std::move(rows));
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(f, n, free);
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, n, basis);
}

Subspace preimage(const Matrix& m, const Subspace& s) {
  if (m.rows() != s.ambient()) throw std::invalid_argument("preimage: dimension mismatch");
  // S = ker(Ann), so M⁻¹(S) = ker(Ann·M).
  auto ann = s.annihilator();
  Matrix a = Matrix::from_rows(m.field(), ann.basis(), s.ambient());
  return kernel_basis(a * m);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
  auto rows = a.annihilator().basis();
  auto bann = b.annihilator();
  for (const auto& r : bann.basis()) rows.push_back(r);
  return kernel_basis(Matrix::from_rows(a.field(), rows, a.ambient()));
}

// ---------------------------------------------------------------- SpanBuilder

SpanBuilder::SpanBuilder(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

Vector SpanBuilder::reduce(Vector& v) const {
  Vector combo = zero_vector(field_, inserted_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = v[pivots_[i]];
    if (c.is_zero()) continue;
    Scalar neg = -c;
    for (std::size_t k = 0; k < ambient_; ++k)
      if (!rows_[i][k].is_zero()) v[k].add_product(neg, rows_[i][k]);
    for (std::size_t k = 0; k < combos_[i].size(); ++k)
      if (!combos_[i][k].is_zero()) combo[k].add_product(c, combos_[i][k]);
  }
  return combo;
}

std::optional<Vector> SpanBuilder::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("coordinates: vector has wrong length");
  Vector r = v;
  Vector combo = reduce(r);
  if (!is_zero(r)) return std::nullopt;
  return combo;
}

bool SpanBuilder::insert(const Vector& v) {
  if (v.size() != ambient_) throw std::invalid_argument("insert: vector has wrong length");
  Vector r = v;
  Vector combo = reduce(r);
  std::size_t piv = 0;
  while (piv < ambient_ && r[piv].is_zero()) ++piv;
  if (piv == ambient_) return false;
  Scalar inv = r[piv].inverse();
  for (auto& x : r) x = x * inv;
  // r = v − Σ combo·inserted, so the new row is (e_new − combo)/pivot.
  combo.push_back(field_.from_int(-1));
  for (auto& x : combo) x = -x * inv;
  inserted_.push_back(v);
  rows_.push_back(std::move(r));
  combos_.push_back(std::move(combo));
  pivots_.push_back(piv);
  return true;
}

}  // namespace ncrs
