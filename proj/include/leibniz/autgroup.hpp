#pragma once

// Brute-force automorphism groups over prime fields.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/morphism.hpp"

namespace leibniz {

/// A finite set of linear maps in canonical form: sorted by matrix entries
/// and free of duplicates, so two sets are equal iff their element lists are.
class AutSet {
 public:
  AutSet(FieldSpec f, std::size_t dim, std::vector<LinearMap> maps);

  [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] const std::vector<LinearMap>& elements() const noexcept { return elements_; }
  [[nodiscard]] auto begin() const { return elements_.begin(); }
  [[nodiscard]] auto end() const { return elements_.end(); }

  [[nodiscard]] bool contains(const LinearMap& f) const;
  [[nodiscard]] bool is_subset_of(const AutSet& other) const;

  /// Copy without the given element (used to build deliberately broken sets).
  [[nodiscard]] AutSet without(const LinearMap& f) const;

  friend bool operator==(const AutSet&, const AutSet&) = default;

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<LinearMap> elements_;
};

/// Elements of a that are not in b.
std::vector<LinearMap> set_difference(const AutSet& a, const AutSet& b);

struct EnumerationOptions {
  /// Force the columns of basis vectors that are scalar multiples of a
  /// basis bracket of free vectors. Exact for every algebra.
  bool prune = true;
  /// Worker threads; the result does not depend on this.
  unsigned jobs = 1;
  /// Maximum number of candidate matrices examined.
  std::uint64_t guard = 100'000'000;
};

/// 10^8, or the value of LEIBNIZ_KIT_GUARD when set to a positive integer.
std::uint64_t default_guard();

/// Basis indices whose images are determined by the images of the others,
/// with their defining bracket: b_k = sigma * [b_i, b_j].
struct ForcedColumn {
  std::size_t k, i, j;
  Scalar inverse_sigma;
};

struct SearchPlan {
  std::vector<std::size_t> free_columns;
  std::vector<ForcedColumn> forced;
  /// p^(n * |free_columns|), saturated at UINT64_MAX.
  std::uint64_t candidates;
};

SearchPlan plan_search(const Algebra& a, bool prune);

/// Every invertible endomorphism of a. Throws InfiniteField or
/// GuardExceeded.
AutSet enumerate_automorphisms(const Algebra& a, const EnumerationOptions& options = {});

struct GroupCheck {
  bool passed;
  /// "identity", "closure" or "inverse" when !passed.
  std::optional<std::string> violated_axiom;
};

/// Identity, product closure and inverse closure, by membership.
GroupCheck verify_group(const AutSet& s);

/// {f in S : f(x) - x in Z for all x}. Throws NotInvariant if some f does
/// not map Z into Z.
AutSet centralizer_of_quotient(const AutSet& s, const Subspace& z);

/// {f in S : f(v) = v for all v in B}.
AutSet centralizer_of(const AutSet& s, const Subspace& b);

/// g n g^-1 in N for all g in S, n in N. Throws NotSubset unless N <= S.
bool is_normal_subset(const AutSet& s, const AutSet& n);

}  // namespace leibniz
