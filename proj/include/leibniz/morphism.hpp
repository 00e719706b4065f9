#pragma once

#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// A linear transformation of an n-dimensional algebra, stored in column
/// convention: column j holds the coordinates of f(b_j). Composition f∘g is
/// the matrix product f * g.
class LinearMap {
 public:
  /// Throws NonSquare for a non-square matrix.
  explicit LinearMap(Matrix m);
  static LinearMap identity(const FieldSpec& f, std::size_t n) {
    return LinearMap(Matrix::identity(f, n));
  }
  static LinearMap zero(const FieldSpec& f, std::size_t n) { return LinearMap(Matrix(f, n, n)); }

  [[nodiscard]] const Matrix& matrix() const noexcept { return m_; }
  [[nodiscard]] std::size_t dim() const noexcept { return m_.rows(); }
  [[nodiscard]] const FieldSpec& field() const noexcept { return m_.field(); }
  [[nodiscard]] Vector operator()(std::span<const Scalar> x) const { return m_.apply(x); }
  /// Image of basis vector j.
  [[nodiscard]] Vector image_of_basis(std::size_t j) const { return m_.column(j); }
  [[nodiscard]] Subspace image(const Subspace& s) const { return leibniz::image(m_, s); }

  [[nodiscard]] LinearMap inverse() const { return LinearMap(leibniz::inverse(m_)); }

  friend LinearMap operator*(const LinearMap& f, const LinearMap& g) {
    return LinearMap(f.m_ * g.m_);
  }
  friend bool operator==(const LinearMap&, const LinearMap&) = default;
  friend auto operator<=>(const LinearMap& a, const LinearMap& b) { return a.m_ <=> b.m_; }

 private:
  Matrix m_;
};

struct HomomorphismViolation {
  std::size_t i, j;
  Vector lhs;  ///< f([b_i, b_j])
  Vector rhs;  ///< [f(b_i), f(b_j)]
};

/// f([b_i,b_j]) = [f(b_i), f(b_j)] on every basis pair. Empty result = pass.
std::vector<HomomorphismViolation> endomorphism_violations(const Algebra& a, const LinearMap& f);
bool is_endomorphism(const Algebra& a, const LinearMap& f);
bool is_automorphism(const Algebra& a, const LinearMap& f);

/// Matrix of x + Z -> f(x) + Z in the quotient basis given by the
/// non-pivot coordinates of Z. Throws NotInvariant unless f(Z) <= Z.
LinearMap induced_quotient_map(const LinearMap& f, const Subspace& z);

/// Drops the pivot coordinates of z from v after reducing modulo z; these
/// are the coordinates of v + Z in the canonical quotient basis.
Vector quotient_coordinates(const Subspace& z, std::span<const Scalar> v);

enum class MorphismKind { Automorphism, Endomorphism };

struct InvarianceCheck {
  std::string name;
  bool passed;
};

struct InvarianceReport {
  MorphismKind mode;
  std::vector<InvarianceCheck> checks;

  [[nodiscard]] bool all_passed() const;
};

/// Automorphism mode: f(S) = S for the three centers, [L,L], the Leibniz
/// kernel and every term of both central series. Endomorphism mode:
/// f(gamma_k) <= gamma_k for every lower central term.
/// Throws NotEndomorphism if f is not an endomorphism, or (automorphism
/// mode) is singular.
InvarianceReport invariance_report(const Algebra& a, const LinearMap& f, MorphismKind mode);

}  // namespace leibniz
