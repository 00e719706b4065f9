#include "leibniz/morphism.hpp"

#include <algorithm>

namespace leibniz {

LinearMap::LinearMap(Matrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw Error(ErrorKind::NonSquare, "linear map matrix must be square");
}

namespace {

void require_compatible(const Algebra& a, const LinearMap& f) {
  if (f.dim() != a.dim() || !(f.field() == a.field())) {
    throw Error(ErrorKind::AlgebraMismatch, "map does not act on this algebra");
  }
}

}  // namespace

std::vector<HomomorphismViolation> endomorphism_violations(const Algebra& a, const LinearMap& f) {
  require_compatible(a, f);
  const auto n = a.dim();
  std::vector<Vector> images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j) images.push_back(f.image_of_basis(j));
  std::vector<HomomorphismViolation> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto lhs = f(a.basis_bracket(i, j));
      auto rhs = a.bracket(images[i], images[j]);
      if (lhs != rhs) out.push_back({i, j, std::move(lhs), std::move(rhs)});
    }
  }
  return out;
}

bool is_endomorphism(const Algebra& a, const LinearMap& f) {
  require_compatible(a, f);
  const auto n = a.dim();
  std::vector<Vector> images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j) images.push_back(f.image_of_basis(j));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (f(a.basis_bracket(i, j)) != a.bracket(images[i], images[j])) return false;
    }
  }
  return true;
}

bool is_automorphism(const Algebra& a, const LinearMap& f) {
  return is_endomorphism(a, f) && !det(f.matrix()).is_zero();
}

Vector quotient_coordinates(const Subspace& z, std::span<const Scalar> v) {
  const auto reduced = z.reduce(v);
  Vector out;
  for (auto c : z.complement_coordinates()) out.push_back(reduced[c]);
  return out;
}

LinearMap induced_quotient_map(const LinearMap& f, const Subspace& z) {
  if (f.dim() != z.ambient_dim() || !(f.field() == z.field())) {
    throw Error(ErrorKind::AmbientMismatch, "map and subspace do not match");
  }
  if (!z.contains(f.image(z))) throw Error(ErrorKind::NotInvariant, "f(Z) is not contained in Z");
  const auto complement = z.complement_coordinates();
  std::vector<Vector> cols;
  for (auto c : complement) cols.push_back(quotient_coordinates(z, f.image_of_basis(c)));
  if (cols.empty()) return LinearMap(Matrix(f.field(), 0, 0));
  return LinearMap(Matrix::from_columns(f.field(), cols));
}

bool InvarianceReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

InvarianceReport invariance_report(const Algebra& a, const LinearMap& f, MorphismKind mode) {
  require_compatible(a, f);
  if (!is_endomorphism(a, f)) throw Error(ErrorKind::NotEndomorphism, "f is not an endomorphism");
  if (mode == MorphismKind::Automorphism && det(f.matrix()).is_zero()) {
    throw Error(ErrorKind::NotEndomorphism, "f is singular, so not an automorphism");
  }

  InvarianceReport report{mode, {}};
  const auto lower = lower_central_series(a);
  if (mode == MorphismKind::Endomorphism) {
    for (std::size_t k = 0; k < lower.terms.size(); ++k) {
      const auto& term = lower.terms[k];
      report.checks.push_back(
          {"f(gamma_" + std::to_string(k + 1) + ") <= gamma_" + std::to_string(k + 1),
           term.contains(f.image(term))});
    }
    return report;
  }

  const auto equal = [&](const std::string& name, const Subspace& s) {
    report.checks.push_back({"f(" + name + ") = " + name, f.image(s) == s});
  };
  const auto c = centers(a);
  equal("zeta_left", c.left);
  equal("zeta_right", c.right);
  equal("zeta", c.two_sided);
  equal("[L,L]", derived_ideal(a));
  equal("Leib", leibniz_kernel(a));
  const auto upper = upper_central_series(a);
  for (std::size_t k = 0; k < upper.terms.size(); ++k) {
    equal("zeta_" + std::to_string(k), upper.terms[k]);
  }
  for (std::size_t k = 0; k < lower.terms.size(); ++k) {
    equal("gamma_" + std::to_string(k + 1), lower.terms[k]);
  }
  return report;
}

}  // namespace leibniz
