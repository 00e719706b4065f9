#pragma once

// The bilinear form an extraspecial algebra induces on L / zeta(L).

#include <optional>

#include "leibniz/morphism.hpp"

namespace leibniz {

/// Phi(x + Z, y + Z) = sigma where [x, y] = sigma * c, for a fixed
/// generator c of Z = zeta(L). The Gram matrix is taken over the canonical
/// quotient basis (non-pivot coordinates of Z).
struct BilinearForm {
  Matrix gram;
  Vector generator;
  /// Ambient coordinates of the quotient basis vectors, in order.
  std::vector<std::size_t> quotient_basis;

  [[nodiscard]] std::size_t dim() const noexcept { return gram.rows(); }
  [[nodiscard]] Scalar evaluate(std::span<const Scalar> u, std::span<const Scalar> v) const;
};

/// The canonical generator: the single RREF basis vector of zeta(L).
/// Throws NotExtraspecial if the algebra is not extraspecial.
Vector default_generator(const Algebra& a);

/// Throws NotExtraspecial, or BadGenerator if c is zero or outside zeta(L).
BilinearForm induced_form(const Algebra& a, const Vector& c);

/// The coefficient sigma with v = sigma * c. Throws BadGenerator if v is not
/// a multiple of c.
Scalar coefficient_along(std::span<const Scalar> v, std::span<const Scalar> c);

/// transpose(G) * gram * G == gram. Throws DimensionMismatch.
bool preserves_form(const LinearMap& g, const BilinearForm& phi);

/// The scalar mu with transpose(G) * gram * G == mu * gram, or nullopt if
/// there is none (or gram is zero). Throws DimensionMismatch.
std::optional<Scalar> similitude_factor(const LinearMap& g, const BilinearForm& phi);

}  // namespace leibniz
