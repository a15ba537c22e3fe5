#pragma once

// Dense exact linear algebra: vectors, matrices, subspaces in canonical
// reduced echelon form, and an incremental basis that keeps coordinates
// relative to the vectors in insertion order.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncrs/field.hpp"

namespace ncrs {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b, const Field& f);
Vector add(const Vector& a, const Vector& b);
Vector scaled(const Scalar& c, const Vector& v);
Vector kron(const Vector& a, const Vector& b);
Vector concat(const Vector& a, const Vector& b);
std::string to_string(std::span<const Scalar> v);

/// Dense row-major matrix.  Zero-sized dimensions are allowed.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  /// Rows must all have the same length.
  static Matrix from_rows(const Field& f, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_ints(const Field& f, const std::vector<std::vector<long long>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  Vector apply(std::span<const Scalar> v) const;
  /// Row vector times matrix: wᵀ·M.
  Vector apply_left(std::span<const Scalar> w) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  bool is_zero() const;

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  const std::vector<Scalar>& data() const { return data_; }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
/// Block matrix [[tl, tr], [bl, br]].
Matrix block(const Matrix& tl, const Matrix& tr, const Matrix& bl, const Matrix& br);
Matrix outer(const Vector& col, const Vector& row, const Field& f);

std::size_t rank(const Matrix& m);

/// A linear subspace of 𝕂^n stored as its reduced row echelon basis, which
/// is canonical: equal subspaces compare equal structurally.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient);  // {0}
  static Subspace full(const Field& f, std::size_t ambient);
  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vector>& vectors);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;

  struct Extension;
  /// Tests v against the subspace; coordinates are relative to the stored
  /// echelon basis.
  Extension extend_span(const Vector& v) const;

  /// Rows spanning {u : b·u = 0 for all basis vectors b}.
  Subspace annihilator() const;

  bool operator==(const Subspace& o) const = default;

 private:
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

struct Subspace::Extension {
  Subspace space;  // unchanged when contained
  bool contained;
  std::optional<Vector> coords;
};

Subspace kernel_basis(const Matrix& m);
/// {v : M v ∈ S}.
Subspace preimage(const Matrix& m, const Subspace& s);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Incremental basis over 𝕂^n.  Vectors are accepted in insertion order;
/// coordinates of dependent vectors are expressed in that order.
class SpanBuilder {
 public:
  SpanBuilder(Field f, std::size_t ambient);

  std::size_t size() const { return inserted_.size(); }
  const std::vector<Vector>& vectors() const { return inserted_; }

  /// Coordinates of v in terms of the inserted vectors, or nullopt when v is
  /// independent of them.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// Adds v when independent; returns whether it was added.
  bool insert(const Vector& v);

 private:
  // Reduces v in place; returns the combination of inserted vectors that was
  // subtracted, indexed like inserted_.
  Vector reduce(Vector& v) const;

  Field field_;
  std::size_t ambient_;
  std::vector<Vector> inserted_;
  // Echelon rows with pivot entry 1 and their expression in inserted_.
  std::vector<Vector> rows_;
  std::vector<Vector> combos_;
  std::vector<std::size_t> pivots_;
};

}  // namespace ncrs
