#include "helpers.hpp"
#include "leibniz/morphism.hpp"

using namespace leibniz;
using namespace leibniz::testing;

namespace {

LinearMap swap12(const FieldSpec& f) { return map_from_rows(f, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}); }

}  // namespace

TEST_CASE("is_endomorphism examples") {
  const auto f = gf(3);
  const auto a = build_lei4(f, s(f, 1)).algebra;
  CHECK(is_endomorphism(a, LinearMap::identity(f, 3)));
  CHECK(is_endomorphism(a, LinearMap::zero(f, 3)));
  CHECK(is_endomorphism(a, swap12(f)));
  CHECK(endomorphism_violations(a, swap12(f)).empty());

  // a1 -> a1, a2 -> 0, a3 -> 0 breaks f([a1,a1]) = [f(a1), f(a1)]
  const auto bad = map_from_rows(f, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  const auto v = endomorphism_violations(a, bad);
  REQUIRE(v.size() == 1);
  CHECK(v.front().i == 0);
  CHECK(v.front().j == 0);
  CHECK(v.front().lhs == vec(f, {0, 0, 0}));
  CHECK(v.front().rhs == vec(f, {0, 0, 1}));
  CHECK_THROWS_AS(is_endomorphism(a, LinearMap::identity(f, 2)), Error);
}

TEST_CASE("is_automorphism examples") {
  const auto f = gf(3);
  const auto a = build_lei4(f, s(f, 1)).algebra;
  CHECK(is_automorphism(a, LinearMap::identity(f, 3)));
  CHECK(is_automorphism(a, swap12(f)));
  CHECK(det(swap12(f).matrix()) == s(f, -1));
  // a3 -> 0 keeps every bracket but kills the determinant
  const auto collapse = map_from_rows(f, {{0, 0, 0}, {0, 0, 0}, {1, 0, 0}});
  CHECK(is_endomorphism(a, collapse));
  CHECK_FALSE(is_automorphism(a, collapse));
  CHECK_FALSE(is_automorphism(a, LinearMap::zero(f, 3)));
}

TEST_CASE("induced_quotient_map") {
  const auto f = gf(3);
  const auto z = span(f, 3, {{0, 0, 1}});
  CHECK(induced_quotient_map(LinearMap::identity(f, 3), z) == LinearMap::identity(f, 2));
  CHECK(induced_quotient_map(LinearMap::identity(f, 3), span(f, 3, {{1, 1, 0}})) ==
        LinearMap::identity(f, 2));
  CHECK(induced_quotient_map(swap12(f), z) == map_from_rows(f, {{0, 1}, {1, 0}}));
  // the a3-components of f(a1), f(a2) vanish modulo Z
  const auto shear = map_from_rows(f, {{1, 0, 0}, {0, 1, 0}, {2, 1, 1}});
  CHECK(induced_quotient_map(shear, z) == LinearMap::identity(f, 2));
  try {
    (void)induced_quotient_map(map_from_rows(f, {{1, 0, 1}, {0, 1, 0}, {0, 0, 0}}), z);
    FAIL("expected NotInvariant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvariant);
  }
  CHECK(induced_quotient_map(swap12(f), Subspace::whole(f, 3)).dim() == 0);
}

TEST_CASE("invariance_report") {
  const auto f = gf(3);
  const auto a = build_lei4(f, s(f, 1)).algebra;
  const auto report = invariance_report(a, swap12(f), MorphismKind::Automorphism);
  CHECK(report.all_passed());
  CHECK(report.checks.size() >= 8);

  const auto zero = invariance_report(a, LinearMap::zero(f, 3), MorphismKind::Endomorphism);
  CHECK(zero.all_passed());
  CHECK(zero.checks.size() == lower_central_series(a).terms.size());

  try {
    (void)invariance_report(a, LinearMap::zero(f, 3), MorphismKind::Automorphism);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEndomorphism);
  }
  try {
    (void)invariance_report(a, map_from_rows(f, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}),
                            MorphismKind::Endomorphism);
    FAIL("expected NotEndomorphism");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEndomorphism);
  }
}

TEST_CASE("composition follows the column convention") {
  const auto f = gf(5);
  const auto g = map_from_rows(f, {{1, 2, 0}, {3, 4, 0}, {0, 1, 1}});
  const auto h = map_from_rows(f, {{0, 1, 0}, {1, 0, 0}, {2, 0, 3}});
  const auto x = vec(f, {1, 2, 3});
  CHECK((g * h)(x) == g(h(x)));
  CHECK(g.image_of_basis(1) == vec(f, {2, 4, 1}));
}
