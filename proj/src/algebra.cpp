#include "leibniz/algebra.hpp"

#include <functional>

namespace leibniz {

StructureConstants::StructureConstants(FieldSpec f, std::size_t dim)
    : field_(f), dim_(dim), c_(dim * dim * dim, Scalar::zero(f)) {}

void StructureConstants::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) {
    throw Error(ErrorKind::DimensionMismatch, "structure constant index out of range");
  }
  if (!(value.field() == field_)) {
    throw Error(ErrorKind::FieldMismatch, "structure constant over the wrong field");
  }
  c_[(i * dim_ + j) * dim_ + k] = value;
}

namespace {

Vector table_bracket(const StructureConstants& c, std::span<const Scalar> x,
                     std::span<const Scalar> y) {
  const auto n = c.dim();
  Vector out = zero_vector(c.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const auto coeff = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const auto& cijk = c(i, j, k);
        if (!cijk.is_zero()) out[k] += coeff * cijk;
      }
    }
  }
  return out;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("a" + std::to_string(i));
  return out;
}

// Solves for the subspace of H on which every linear constraint vanishes.
// constraint(v) must be linear in v; its values for the basis of H are
// stacked as columns of a system in H-coordinates.
Subspace solve_within(const Subspace& h, const std::function<Vector(const Vector&)>& constraint) {
  const auto& f = h.field();
  if (h.dim() == 0) return h;
  std::vector<Vector> columns;
  for (const auto& v : h.basis()) columns.push_back(constraint(v));
  if (columns.front().empty()) return h;
  const auto system = Matrix::from_columns(f, columns);
  const auto coeffs = kernel(system);
  std::vector<Vector> vectors;
  for (const auto& t : coeffs.basis()) {
    Vector v = zero_vector(f, h.ambient_dim());
    for (std::size_t k = 0; k < h.dim(); ++k) {
      if (!t[k].is_zero()) v = add(v, scale(t[k], h.basis()[k]));
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span(f, h.ambient_dim(), vectors);
}

void append(Vector& out, const Vector& v) { out.insert(out.end(), v.begin(), v.end()); }

}  // namespace

std::vector<LeibnizViolation> check_left_leibniz(const StructureConstants& c) {
  const auto n = c.dim();
  const auto& f = c.field();
  std::vector<LeibnizViolation> out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = unit_vector(f, n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto b = unit_vector(f, n, j);
      const auto ab = table_bracket(c, a, b);
      for (std::size_t k = 0; k < n; ++k) {
        const auto e = unit_vector(f, n, k);
        auto lhs = table_bracket(c, ab, e);
        const auto a_bc = table_bracket(c, a, table_bracket(c, b, e));
        const auto b_ac = table_bracket(c, b, table_bracket(c, a, e));
        auto rhs = add(a_bc, scale(-Scalar::one(f), b_ac));
        if (lhs != rhs) out.push_back({i, j, k, std::move(lhs), std::move(rhs)});
      }
    }
  }
  return out;
}

Algebra::Algebra(StructureConstants constants, std::vector<std::string> labels)
    : Algebra(std::move(constants), std::move(labels), NoCheck{}) {
  const auto violations = check_left_leibniz(c_);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw Error(ErrorKind::NotLeibniz,
                "left Leibniz identity fails at basis triple (" + std::to_string(v.i + 1) + "," +
                    std::to_string(v.j + 1) + "," + std::to_string(v.k + 1) + ")");
  }
}

Algebra::Algebra(StructureConstants constants, std::vector<std::string> labels, NoCheck)
    : c_(std::move(constants)), labels_(std::move(labels)) {
  if (labels_.empty()) labels_ = default_labels(c_.dim());
  if (labels_.size() != c_.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "label count differs from dimension");
  }
}

Algebra Algebra::unchecked(StructureConstants constants, std::vector<std::string> labels) {
  return Algebra(std::move(constants), std::move(labels), NoCheck{});
}

Vector Algebra::basis_bracket(std::size_t i, std::size_t j) const {
  Vector out;
  out.reserve(dim());
  for (std::size_t k = 0; k < dim(); ++k) out.push_back(c_(i, j, k));
  return out;
}

Vector Algebra::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != dim() || y.size() != dim()) {
    throw Error(ErrorKind::AlgebraMismatch, "element length differs from algebra dimension");
  }
  for (const auto* v : {&x, &y}) {
    for (const auto& s : *v) {
      if (!(s.field() == field())) {
        throw Error(ErrorKind::AlgebraMismatch, "element coordinates over the wrong field");
      }
    }
  }
  return table_bracket(c_, x, y);
}

Subspace leibniz_kernel(const Algebra& a) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    gens.push_back(a.basis_bracket(i, i));
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      gens.push_back(add(a.basis_bracket(i, j), a.basis_bracket(j, i)));
    }
  }
  return Subspace::span(a.field(), a.dim(), gens);
}

Subspace derived_ideal(const Algebra& a) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) gens.push_back(a.basis_bracket(i, j));
  }
  return Subspace::span(a.field(), a.dim(), gens);
}

Centers centers(const Algebra& a) {
  const auto n = a.dim();
  auto left = solve_within(a.whole(), [&](const Vector& x) {
    Vector out;
    for (std::size_t j = 0; j < n; ++j) append(out, a.bracket(x, a.basis_vector(j)));
    return out;
  });
  auto right = solve_within(a.whole(), [&](const Vector& x) {
    Vector out;
    for (std::size_t j = 0; j < n; ++j) append(out, a.bracket(a.basis_vector(j), x));
    return out;
  });
  auto both = intersect(left, right);
  return {std::move(left), std::move(right), std::move(both)};
}

SeriesChain upper_central_series(const Algebra& a) {
  SeriesChain chain{SeriesChain::Direction::Ascending, {a.nothing()}, false};
  while (true) {
    const auto& current = chain.terms.back();
    auto next = solve_within(a.whole(), [&](const Vector& x) {
      Vector out;
      for (std::size_t i = 0; i < a.dim(); ++i) {
        const auto b = a.basis_vector(i);
        append(out, current.reduce(a.bracket(x, b)));
        append(out, current.reduce(a.bracket(b, x)));
      }
      return out;
    });
    if (next == current) break;
    chain.terms.push_back(std::move(next));
  }
  chain.stabilized = true;
  return chain;
}

SeriesChain lower_central_series(const Algebra& a) {
  SeriesChain chain{SeriesChain::Direction::Descending, {a.whole()}, false};
  while (true) {
    const auto& current = chain.terms.back();
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (const auto& v : current.basis()) gens.push_back(a.bracket(a.basis_vector(i), v));
    }
    auto next = Subspace::span(a.field(), a.dim(), gens);
    if (next == current) break;
    chain.terms.push_back(std::move(next));
  }
  chain.stabilized = true;
  return chain;
}

std::optional<std::size_t> nilpotency_class(const Algebra& a) {
  const auto chain = lower_central_series(a);
  if (chain.terms.back().dim() != 0) return std::nullopt;
  // terms = gamma_1 .. gamma_{c+1} with gamma_{c+1} = 0.
  return chain.terms.size() - 1;
}

bool is_subalgebra(const Algebra& a, const Subspace& s) {
  for (const auto& u : s.basis()) {
    for (const auto& v : s.basis()) {
      if (!s.contains(a.bracket(u, v))) return false;
    }
  }
  return true;
}

IdealFlags is_ideal(const Algebra& a, const Subspace& s) {
  bool left = true;
  bool right = true;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto b = a.basis_vector(i);
    for (const auto& v : s.basis()) {
      left = left && s.contains(a.bracket(b, v));
      right = right && s.contains(a.bracket(v, b));
    }
  }
  return {left, right, left && right};
}

Subspace annihilator(const Algebra& a, const Subspace& h, const Subspace& m, Side side) {
  if (!(h.field() == a.field()) || h.ambient_dim() != a.dim() || !(m.field() == a.field()) ||
      m.ambient_dim() != a.dim()) {
    throw Error(ErrorKind::AmbientMismatch, "subspaces do not live in the algebra");
  }
  if (!is_subalgebra(a, h)) throw Error(ErrorKind::NotSubalgebra, "H is not a subalgebra");
  const bool use_left = side != Side::Right;
  const bool use_right = side != Side::Left;
  return solve_within(h, [&](const Vector& x) {
    Vector out;
    for (const auto& v : m.basis()) {
      if (use_left) append(out, a.bracket(x, v));
      if (use_right) append(out, a.bracket(v, x));
    }
    return out;
  });
}

bool is_extraspecial(const Algebra& a) {
  const auto derived = derived_ideal(a);
  return derived.dim() == 1 && derived == centers(a).two_sided;
}

Lei4 build_lei4(const FieldSpec& f, const Scalar& lambda) {
  if (!(lambda.field() == f)) throw Error(ErrorKind::FieldMismatch, "lambda over the wrong field");
  if (lambda.is_zero()) throw Error(ErrorKind::ZeroLambda, "Lei4(3,F) requires lambda != 0");
  StructureConstants c(f, 3);
  c.set(0, 0, 2, Scalar::one(f));
  c.set(1, 1, 2, lambda);
  return {Algebra(std::move(c), {"a1", "a2", "a3"}), lambda, x2_plus_lambda_has_root(f, lambda)};
}

}  // namespace leibniz
