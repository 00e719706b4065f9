#pragma once

// Dense exact linear algebra and canonical subspaces.

#include <cstddef>
#include <span>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& f, std::size_t n);
/// Standard basis vector e_i (0-based).
Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& s, std::span<const Scalar> v);

class Matrix {
 public:
  /// Zero matrix.
  Matrix(FieldSpec f, std::size_t rows, std::size_t cols);
  /// Row-major entries; throws DimensionMismatch if the grid is ragged,
  /// FieldMismatch if an entry lies in another field.
  Matrix(FieldSpec f, const std::vector<std::vector<Scalar>>& grid);

  static Matrix identity(FieldSpec f, std::size_t n);
  /// Convenience for tests and fixtures: entries are reduced into f.
  static Matrix from_ints(FieldSpec f, const std::vector<std::vector<std::int64_t>>& grid);
  /// Builds a square or rectangular matrix whose j-th column is cols[j].
  static Matrix from_columns(FieldSpec f, const std::vector<Vector>& cols);

  [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  [[nodiscard]] const Scalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Scalar> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  [[nodiscard]] Vector column(std::size_t c) const;
  [[nodiscard]] const std::vector<Scalar>& entries() const noexcept { return entries_; }

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Vector apply(std::span<const Scalar> x) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  /// Lexicographic on (rows, cols, row-major entries).
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);

/// Exact determinant by Gaussian elimination; NonSquare for non-square input.
Scalar det(const Matrix& m);

/// Inverse of a square matrix; Degenerate if singular.
Matrix inverse(const Matrix& m);

/// A subspace of F^n, held as the RREF of a spanning set with zero rows
/// dropped. The representation is canonical, so == is subspace equality.
class Subspace {
 public:
  static Subspace zero(FieldSpec f, std::size_t ambient_dim);
  static Subspace whole(FieldSpec f, std::size_t ambient_dim);
  /// Span of the given vectors (each of length ambient_dim).
  static Subspace span(FieldSpec f, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  /// Row space of m.
  static Subspace row_space(const Matrix& m);

  [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_; }
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
  [[nodiscard]] const std::vector<Vector>& basis() const noexcept { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Coordinates that are not pivots of the RREF basis; they index a
  /// canonical complement and hence a basis of the quotient F^n / this.
  [[nodiscard]] std::vector<std::size_t> complement_coordinates() const;

  [[nodiscard]] bool contains(std::span<const Scalar> v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;
  /// Remainder of v after eliminating against the pivots of this subspace.
  [[nodiscard]] Vector reduce(std::span<const Scalar> v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(FieldSpec f, std::size_t ambient) : field_(f), ambient_(ambient) {}

  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {x : m x = 0} as a subspace of F^cols.
Subspace kernel(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Image of s under m (span of m applied to the basis of s).
Subspace image(const Matrix& m, const Subspace& s);

}  // namespace leibniz
