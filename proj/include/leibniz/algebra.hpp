#pragma once

// Finite-dimensional algebras given by structure constants, and their
// Leibniz-theoretic invariants.

#include <optional>
#include <string>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

/// Dense n*n*n structure-constant tensor: [b_i, b_j] = sum_k c(i,j,k) b_k.
/// Indices are 0-based here; file formats use 1-based indices.
class StructureConstants {
 public:
  StructureConstants(FieldSpec f, std::size_t dim);

  [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

  [[nodiscard]] const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  /// Throws DimensionMismatch on an out-of-range index, FieldMismatch on a
  /// foreign scalar.
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<Scalar> c_;
};

/// One basis triple where [[a,b],c] != [a,[b,c]] - [b,[a,c]].
struct LeibnizViolation {
  std::size_t i, j, k;
  Vector lhs;
  Vector rhs;
};

/// Checks the left Leibniz identity on all n^3 basis triples; by
/// trilinearity that covers every triple of elements. Empty result = pass.
std::vector<LeibnizViolation> check_left_leibniz(const StructureConstants& c);

class Algebra {
 public:
  /// Throws NotLeibniz if the table violates the left Leibniz identity.
  explicit Algebra(StructureConstants constants, std::vector<std::string> labels = {});
  /// Skips validation. Intended for counterexample tables.
  static Algebra unchecked(StructureConstants constants, std::vector<std::string> labels = {});

  [[nodiscard]] const FieldSpec& field() const noexcept { return c_.field(); }
  [[nodiscard]] std::size_t dim() const noexcept { return c_.dim(); }
  [[nodiscard]] const StructureConstants& constants() const noexcept { return c_; }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Coordinates of [b_i, b_j].
  [[nodiscard]] Vector basis_bracket(std::size_t i, std::size_t j) const;
  /// Bilinear extension of the table. Throws AlgebraMismatch if x or y has
  /// the wrong length or field.
  [[nodiscard]] Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;

  [[nodiscard]] Vector basis_vector(std::size_t i) const { return unit_vector(field(), dim(), i); }
  [[nodiscard]] Vector zero_element() const { return zero_vector(field(), dim()); }
  [[nodiscard]] Subspace whole() const { return Subspace::whole(field(), dim()); }
  [[nodiscard]] Subspace nothing() const { return Subspace::zero(field(), dim()); }

 private:
  struct NoCheck {};
  Algebra(StructureConstants constants, std::vector<std::string> labels, NoCheck);

  StructureConstants c_;
  std::vector<std::string> labels_;
};

/// span{[a,a] : a in L}, from the finite generating set [b_i,b_i] and
/// [b_i,b_j] + [b_j,b_i] (polarization).
Subspace leibniz_kernel(const Algebra& a);

/// [L, L].
Subspace derived_ideal(const Algebra& a);

struct Centers {
  Subspace left;       ///< {x : [x, y] = 0 for all y}
  Subspace right;      ///< {x : [y, x] = 0 for all y}
  Subspace two_sided;
};

Centers centers(const Algebra& a);

struct SeriesChain {
  enum class Direction { Ascending, Descending };
  Direction direction;
  /// terms.front() is <0> (ascending) or L (descending); the last term is the
  /// point where the chain stops changing and is not repeated.
  std::vector<Subspace> terms;
  bool stabilized;
};

/// zeta_0 = 0, zeta_{k+1} = {x : [x,b_i], [b_i,x] in zeta_k for all i}.
SeriesChain upper_central_series(const Algebra& a);

/// gamma_1 = L, gamma_{k+1} = [L, gamma_k].
SeriesChain lower_central_series(const Algebra& a);

/// c with gamma_{c+1} = 0 != gamma_c, or nullopt if the lower central series
/// stops above zero. The zero algebra has class 0.
std::optional<std::size_t> nilpotency_class(const Algebra& a);

enum class Side { Left, Right, Both };

/// {h in H : [h, M] = 0} (left), {h in H : [M, h] = 0} (right), or both.
/// Throws NotSubalgebra if H is not closed under the bracket.
Subspace annihilator(const Algebra& a, const Subspace& h, const Subspace& m, Side side);

bool is_subalgebra(const Algebra& a, const Subspace& s);

struct IdealFlags {
  bool left;   ///< [L, S] <= S
  bool right;  ///< [S, L] <= S
  bool two_sided;
};

IdealFlags is_ideal(const Algebra& a, const Subspace& s);

/// [L, L] = zeta(L) and the two have dimension 1.
bool is_extraspecial(const Algebra& a);

/// The three-dimensional algebra with [a1,a1] = a3, [a2,a2] = lambda a3 and
/// all other basis brackets zero.
struct Lei4 {
  Algebra algebra;
  Scalar lambda;
  /// X^2 + lambda has a root in the field. The algebra is still built, but
  /// the classical derivation of this type assumes the opposite.
  bool x2_plus_lambda_reducible;
};

/// Throws ZeroLambda for lambda = 0.
Lei4 build_lei4(const FieldSpec& f, const Scalar& lambda);

}  // namespace leibniz
