#pragma once

// Closed-form automorphism families of Lei4(3,F) and their comparison with
// brute-force enumeration.
//
// For f in Aut(Lei4(3,F)) write f(a1) = α1 a1 + α2 a2 + α3 a3 and
// f(a2) = β1 a1 + β2 a2 + β3 a3. The predicted matrices (column convention)
// are
//
//   char 2:   | α1  λα2  0        |      char != 2:  | α1  δλα2  0        |
//             | α2  α1   0        |                  | α2  -δα1  0        |
//             | α3  β3   α1²+λα2² |                  | α3  β3    α1²+λα2² |
//
// with α1² + λα2² != 0 and δ in {-1, 1}.

#include <cstdint>
#include <optional>
#include <vector>

#include "leibniz/autgroup.hpp"

namespace leibniz {

enum class CharBranch { Char2, CharNot2 };

CharBranch branch_of(const FieldSpec& f);

struct FamilyParams {
  FieldSpec field;
  Scalar lambda;
  Scalar alpha1, alpha2, alpha3, beta3;
  /// +1 or -1; ignored in characteristic 2.
  Scalar delta;

  [[nodiscard]] CharBranch branch() const { return branch_of(field); }
  /// β1 and β2, which are determined by the other parameters.
  [[nodiscard]] Scalar beta1() const;
  [[nodiscard]] Scalar beta2() const;
  /// α1² + λα2², the image coefficient of a3.
  [[nodiscard]] Scalar norm() const;
};

/// Throws Degenerate if α1² + λα2² = 0 and ZeroLambda for λ = 0.
LinearMap family_matrix(const FamilyParams& p);

struct FamilyMember {
  FamilyParams params;
  LinearMap map;
};

/// Every admissible parameter choice with its matrix, in generation order
/// (may contain equal matrices under different parameters).
std::vector<FamilyMember> family_members(const FieldSpec& f, const Scalar& lambda);

/// The deduplicated family. Throws InfiniteField or ZeroLambda.
AutSet predicted_family(const FieldSpec& f, const Scalar& lambda);

/// q²(q² - q) in characteristic 2; otherwise 2q²N with N = q² - 1 when
/// X² + λ has no root and N = (q - 1)² when it does.
std::uint64_t predicted_order(const FieldSpec& f, const Scalar& lambda);

struct OracleComparison {
  std::uint64_t predicted_order;      ///< closed form
  std::size_t predicted_family_size;  ///< |predicted_family|
  std::size_t enumerated_order;
  bool equal;
  /// Enumerated automorphisms absent from the family.
  std::vector<LinearMap> missing;
  /// Family matrices that are not automorphisms.
  std::vector<LinearMap> extra;
  bool reducible_flag;
};

OracleComparison compare_with_oracle(const AutSet& family, const AutSet& enumerated,
                                     bool reducible_flag, std::uint64_t predicted);
/// Builds Lei4(3,F) with this λ, enumerates it and compares.
OracleComparison compare_with_oracle(const FieldSpec& f, const Scalar& lambda,
                                     const EnumerationOptions& options = {});

/// det(f) == (α1² + λα2²)(α1β2 - α2β1).
bool det_identity_check(const FamilyParams& p);

/// The upper-left 2x2 block: the action on L / zeta(L).
Matrix upsilon(const LinearMap& f);

/// The displayed 2x2 image family (deduplicated, sorted), generated from
/// its own parameterization rather than from the 3x3 family.
std::vector<Matrix> predicted_image_blocks(const FieldSpec& f, const Scalar& lambda);

struct QuotientHomReport {
  std::uint64_t pairs_checked;
  bool exhaustive;
  bool multiplicative;
  std::size_t kernel_size;
  bool kernel_matches_centralizer;
  std::size_t image_size;
  bool image_matches_blocks;

  [[nodiscard]] bool passed() const {
    return multiplicative && kernel_matches_centralizer && image_matches_blocks;
  }
};

/// Pairs above this count are sampled instead of checked exhaustively.
inline constexpr std::uint64_t kExhaustivePairLimit = 10'000;

QuotientHomReport quotient_hom_check(const AutSet& family, const AutSet& enumerated,
                                     const Lei4& lei4, std::uint64_t seed = 0);
QuotientHomReport quotient_hom_check(const FieldSpec& f, const Scalar& lambda,
                                     std::uint64_t seed = 0,
                                     const EnumerationOptions& options = {});

/// Everything the theorem asserts over one (F, λ), computed with a single
/// enumeration.
struct Theorem1Report {
  OracleComparison comparison;
  bool predicted_order_consistent;  ///< closed form == |predicted_family|
  bool det_identity;                ///< over every family member
  bool family_closed;               ///< products of family matrices stay in the family
  std::uint64_t closure_pairs_checked;
  QuotientHomReport quotient;
};

Theorem1Report verify_theorem1(const FieldSpec& f, const Scalar& lambda, std::uint64_t seed = 0,
                               const EnumerationOptions& options = {});

}  // namespace leibniz
