#include "leibniz/theorem1.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace leibniz {

CharBranch branch_of(const FieldSpec& f) {
  return f.characteristic() == 2 ? CharBranch::Char2 : CharBranch::CharNot2;
}

Scalar FamilyParams::beta1() const {
  if (branch() == CharBranch::Char2) return lambda * alpha2;
  return delta * lambda * alpha2;
}

Scalar FamilyParams::beta2() const {
  if (branch() == CharBranch::Char2) return alpha1;
  return -(delta * alpha1);
}

Scalar FamilyParams::norm() const { return alpha1 * alpha1 + lambda * alpha2 * alpha2; }

LinearMap family_matrix(const FamilyParams& p) {
  if (p.lambda.is_zero()) throw Error(ErrorKind::ZeroLambda, "lambda must be nonzero");
  const auto n = p.norm();
  if (n.is_zero()) throw Error(ErrorKind::Degenerate, "alpha1^2 + lambda alpha2^2 = 0");
  if (p.branch() == CharBranch::CharNot2 && !p.delta.is_one() && !(-p.delta).is_one()) {
    throw Error(ErrorKind::Degenerate, "delta must be 1 or -1");
  }
  const auto zero = Scalar::zero(p.field);
  return LinearMap(Matrix(p.field, {{p.alpha1, p.beta1(), zero},
                                    {p.alpha2, p.beta2(), zero},
                                    {p.alpha3, p.beta3, n}}));
}

namespace {

void require_finite_lambda(const FieldSpec& f, const Scalar& lambda) {
  if (!f.is_finite()) throw Error(ErrorKind::InfiniteField, "family enumeration needs GF(p)");
  if (!(lambda.field() == f)) throw Error(ErrorKind::FieldMismatch, "lambda over the wrong field");
  if (lambda.is_zero()) throw Error(ErrorKind::ZeroLambda, "lambda must be nonzero");
}

std::vector<Scalar> deltas(const FieldSpec& f) {
  const auto one = Scalar::one(f);
  if (branch_of(f) == CharBranch::Char2) return {one};
  return {one, -one};
}

// Runs fn(i, j) over index pairs of [0, n)^2: all of them when there are at
// most kExhaustivePairLimit, otherwise that many pairs drawn with a seeded
// generator. Returns the number of pairs visited; stops early when fn
// returns false.
std::uint64_t for_pairs(std::size_t n, std::uint64_t seed,
                        const std::function<bool(std::size_t, std::size_t)>& fn, bool& exhaustive) {
  const std::uint64_t total = std::uint64_t{n} * n;
  exhaustive = total <= kExhaustivePairLimit;
  std::uint64_t visited = 0;
  if (exhaustive) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ++visited;
        if (!fn(i, j)) return visited;
      }
    }
    return visited;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::uint64_t t = 0; t < kExhaustivePairLimit; ++t) {
    const auto i = pick(rng);
    const auto j = pick(rng);
    ++visited;
    if (!fn(i, j)) return visited;
  }
  return visited;
}

std::vector<Matrix> sorted_unique(std::vector<Matrix> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<FamilyMember> family_members(const FieldSpec& f, const Scalar& lambda) {
  require_finite_lambda(f, lambda);
  const auto scalars = enumerate_scalars(f);
  std::vector<FamilyMember> out;
  for (const auto& d : deltas(f)) {
    for (const auto& a1 : scalars) {
      for (const auto& a2 : scalars) {
        FamilyParams p{f, lambda, a1, a2, scalars[0], scalars[0], d};
        if (p.norm().is_zero()) continue;
        for (const auto& a3 : scalars) {
          for (const auto& b3 : scalars) {
            p.alpha3 = a3;
            p.beta3 = b3;
            out.push_back({p, family_matrix(p)});
          }
        }
      }
    }
  }
  return out;
}

AutSet predicted_family(const FieldSpec& f, const Scalar& lambda) {
  std::vector<LinearMap> maps;
  for (auto& m : family_members(f, lambda)) maps.push_back(std::move(m.map));
  return AutSet(f, 3, std::move(maps));
}

std::uint64_t predicted_order(const FieldSpec& f, const Scalar& lambda) {
  require_finite_lambda(f, lambda);
  const std::uint64_t q = f.characteristic();
  if (branch_of(f) == CharBranch::Char2) return q * q * (q * q - q);
  const std::uint64_t nondegenerate =
      x2_plus_lambda_has_root(f, lambda) ? (q - 1) * (q - 1) : q * q - 1;
  return 2 * q * q * nondegenerate;
}

OracleComparison compare_with_oracle(const AutSet& family, const AutSet& enumerated,
                                     bool reducible_flag, std::uint64_t predicted) {
  OracleComparison out{predicted, family.size(), enumerated.size(), false,
                       set_difference(enumerated, family), set_difference(family, enumerated),
                       reducible_flag};
  out.equal = family == enumerated;
  return out;
}

OracleComparison compare_with_oracle(const FieldSpec& f, const Scalar& lambda,
                                     const EnumerationOptions& options) {
  const auto lei4 = build_lei4(f, lambda);
  return compare_with_oracle(predicted_family(f, lambda),
                             enumerate_automorphisms(lei4.algebra, options),
                             lei4.x2_plus_lambda_reducible, predicted_order(f, lambda));
}

bool det_identity_check(const FamilyParams& p) {
  const auto lhs = det(family_matrix(p).matrix());
  const auto rhs = p.norm() * (p.alpha1 * p.beta2() - p.alpha2 * p.beta1());
  return lhs == rhs;
}

Matrix upsilon(const LinearMap& f) {
  const auto& m = f.matrix();
  return Matrix(m.field(), {{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}});
}

std::vector<Matrix> predicted_image_blocks(const FieldSpec& f, const Scalar& lambda) {
  require_finite_lambda(f, lambda);
  const auto scalars = enumerate_scalars(f);
  const bool char2 = branch_of(f) == CharBranch::Char2;
  std::vector<Matrix> blocks;
  for (const auto& d : deltas(f)) {
    for (const auto& a1 : scalars) {
      for (const auto& a2 : scalars) {
        if ((a1 * a1 + lambda * a2 * a2).is_zero()) continue;
        if (char2) {
          blocks.push_back(Matrix(f, {{a1, lambda * a2}, {a2, a1}}));
        } else {
          blocks.push_back(Matrix(f, {{a1, d * lambda * a2}, {a2, -(d * a1)}}));
        }
      }
    }
  }
  return sorted_unique(std::move(blocks));
}

QuotientHomReport quotient_hom_check(const AutSet& family, const AutSet& enumerated,
                                     const Lei4& lei4, std::uint64_t seed) {
  const auto& f = lei4.algebra.field();
  const auto& elems = family.elements();
  QuotientHomReport report{};

  report.multiplicative = true;
  report.pairs_checked = for_pairs(
      elems.size(), seed,
      [&](std::size_t i, std::size_t j) {
        if (upsilon(elems[i] * elems[j]) != upsilon(elems[i]) * upsilon(elems[j])) {
          report.multiplicative = false;
        }
        return report.multiplicative;
      },
      report.exhaustive);

  const auto id2 = Matrix::identity(f, 2);
  std::vector<LinearMap> kernel;
  std::vector<Matrix> image;
  for (const auto& g : elems) {
    auto block = upsilon(g);
    if (block == id2) kernel.push_back(g);
    image.push_back(std::move(block));
  }
  const AutSet kernel_set(f, 3, std::move(kernel));
  const auto centralizer = centralizer_of_quotient(enumerated, centers(lei4.algebra).two_sided);
  report.kernel_size = kernel_set.size();
  report.kernel_matches_centralizer = kernel_set == centralizer;

  image = sorted_unique(std::move(image));
  report.image_size = image.size();
  report.image_matches_blocks = image == predicted_image_blocks(f, lei4.lambda);
  return report;
}

QuotientHomReport quotient_hom_check(const FieldSpec& f, const Scalar& lambda, std::uint64_t seed,
                                     const EnumerationOptions& options) {
  const auto lei4 = build_lei4(f, lambda);
  return quotient_hom_check(predicted_family(f, lambda),
                            enumerate_automorphisms(lei4.algebra, options), lei4, seed);
}

Theorem1Report verify_theorem1(const FieldSpec& f, const Scalar& lambda, std::uint64_t seed,
                               const EnumerationOptions& options) {
  const auto lei4 = build_lei4(f, lambda);
  const auto members = family_members(f, lambda);
  const auto family = predicted_family(f, lambda);
  const auto enumerated = enumerate_automorphisms(lei4.algebra, options);
  const auto closed_form = predicted_order(f, lambda);

  Theorem1Report report{};
  report.comparison =
      compare_with_oracle(family, enumerated, lei4.x2_plus_lambda_reducible, closed_form);
  report.predicted_order_consistent = closed_form == family.size();
  report.det_identity = std::all_of(members.begin(), members.end(),
                                    [](const FamilyMember& m) { return det_identity_check(m.params); });

  const auto& elems = family.elements();
  report.family_closed = true;
  bool exhaustive = false;
  report.closure_pairs_checked = for_pairs(
      elems.size(), seed,
      [&](std::size_t i, std::size_t j) {
        report.family_closed = family.contains(elems[i] * elems[j]);
        return report.family_closed;
      },
      exhaustive);
  report.quotient = quotient_hom_check(family, enumerated, lei4, seed);
  return report;
}

}  // namespace leibniz
