#include "leibniz/form.hpp"

namespace leibniz {

Scalar coefficient_along(std::span<const Scalar> v, std::span<const Scalar> c) {
  if (v.size() != c.size()) throw Error(ErrorKind::DimensionMismatch, "length mismatch");
  std::size_t lead = 0;
  while (lead < c.size() && c[lead].is_zero()) ++lead;
  if (lead == c.size()) throw Error(ErrorKind::BadGenerator, "generator is zero");
  const auto sigma = v[lead] / c[lead];
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (v[k] != sigma * c[k]) throw Error(ErrorKind::BadGenerator, "value is not a multiple of c");
  }
  return sigma;
}

Vector default_generator(const Algebra& a) {
  if (!is_extraspecial(a)) throw Error(ErrorKind::NotExtraspecial, "algebra is not extraspecial");
  return centers(a).two_sided.basis().front();
}

BilinearForm induced_form(const Algebra& a, const Vector& c) {
  if (!is_extraspecial(a)) throw Error(ErrorKind::NotExtraspecial, "algebra is not extraspecial");
  if (c.size() != a.dim()) throw Error(ErrorKind::BadGenerator, "generator has the wrong length");
  const auto z = centers(a).two_sided;
  if (is_zero(c) || !z.contains(c)) {
    throw Error(ErrorKind::BadGenerator, "generator must be a nonzero central element");
  }
  auto basis = z.complement_coordinates();
  Matrix gram(a.field(), basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      gram(i, j) = coefficient_along(a.basis_bracket(basis[i], basis[j]), c);
    }
  }
  return {std::move(gram), c, std::move(basis)};
}

Scalar BilinearForm::evaluate(std::span<const Scalar> u, std::span<const Scalar> v) const {
  return Matrix::from_columns(gram.field(), {Vector(u.begin(), u.end())})
      .transpose()
      .apply(gram.apply(v))
      .front();
}

bool preserves_form(const LinearMap& g, const BilinearForm& phi) {
  if (g.dim() != phi.dim() || !(g.field() == phi.gram.field())) {
    throw Error(ErrorKind::DimensionMismatch, "map and form have different dimensions");
  }
  const auto& m = g.matrix();
  return m.transpose() * phi.gram * m == phi.gram;
}

std::optional<Scalar> similitude_factor(const LinearMap& g, const BilinearForm& phi) {
  if (g.dim() != phi.dim() || !(g.field() == phi.gram.field())) {
    throw Error(ErrorKind::DimensionMismatch, "map and form have different dimensions");
  }
  const auto& m = g.matrix();
  const auto image = m.transpose() * phi.gram * m;
  const auto& before = phi.gram.entries();
  const auto& after = image.entries();
  std::optional<Scalar> mu;
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i].is_zero()) {
      if (!after[i].is_zero()) return std::nullopt;
      continue;
    }
    const auto ratio = after[i] / before[i];
    if (mu && *mu != ratio) return std::nullopt;
    mu = ratio;
  }
  return mu;
}

}  // namespace leibniz
