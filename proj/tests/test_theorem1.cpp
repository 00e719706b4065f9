#include "helpers.hpp"
#include "leibniz/theorem1.hpp"
#include "oracle.hpp"

using namespace leibniz;
using namespace leibniz::testing;

namespace {

FamilyParams params(const FieldSpec& f, std::int64_t lambda, std::int64_t a1, std::int64_t a2,
                    std::int64_t a3, std::int64_t b3, std::int64_t delta) {
  return {f, s(f, lambda), s(f, a1), s(f, a2), s(f, a3), s(f, b3), s(f, delta)};
}

std::vector<IntMatrix3> to_ints(const AutSet& set) {
  std::vector<IntMatrix3> out;
  for (const auto& g : set) {
    IntMatrix3 m{};
    for (std::size_t i = 0; i < 9; ++i) m[i] = g.matrix().entries()[i].residue();
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("family_matrix examples") {
  const auto f3 = gf(3);
  // α1 = 1, α2 = 0, δ = -1 is the identity
  CHECK(family_matrix(params(f3, 1, 1, 0, 0, 0, -1)) == LinearMap::identity(f3, 3));
  // α1 = 0, α2 = 1, δ = 1 swaps a1 and a2
  CHECK(family_matrix(params(f3, 1, 0, 1, 0, 0, 1)) ==
        map_from_rows(f3, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  // λ = 2, α1 = 1, α2 = 0, δ = 1: β1 = 0, β2 = -1, N = 1
  CHECK(family_matrix(params(f3, 2, 1, 0, 2, 1, 1)) ==
        map_from_rows(f3, {{1, 0, 0}, {0, 2, 0}, {2, 1, 1}}));

  const auto f2 = gf(2);
  CHECK(family_matrix(params(f2, 1, 1, 0, 1, 1, 1)) ==
        map_from_rows(f2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}));
  CHECK(family_matrix(params(f2, 1, 0, 1, 0, 0, 1)) ==
        map_from_rows(f2, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  // α1² + λα2² = 1 + 1 = 0 over GF(2)
  try {
    (void)family_matrix(params(f2, 1, 1, 1, 0, 0, 1));
    FAIL("expected Degenerate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
  try {
    (void)family_matrix(params(f3, 0, 1, 0, 0, 0, 1));
    FAIL("expected ZeroLambda");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroLambda);
  }
  try {
    (void)family_matrix(params(gf(5), 2, 1, 0, 0, 0, 2));
    FAIL("expected Degenerate for delta = 2");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
}

TEST_CASE("predicted_order examples") {
  const auto f2 = gf(2);
  const auto f3 = gf(3);
  const auto f5 = gf(5);
  CHECK(predicted_order(f2, s(f2, 1)) == 8);
  CHECK(predicted_order(f3, s(f3, 1)) == 144);
  CHECK(predicted_order(f3, s(f3, 2)) == 72);
  CHECK(predicted_order(f5, s(f5, 2)) == 1200);
  CHECK(predicted_order(f5, s(f5, 1)) == 800);
  CHECK_THROWS_AS((void)predicted_order(FieldSpec::rationals(), Scalar::one(FieldSpec::rationals())),
                  Error);
  CHECK_THROWS_AS((void)predicted_order(f3, s(f3, 0)), Error);
}

TEST_CASE("closed form agrees with the family size") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const auto f = gf(p);
    for (std::int64_t l = 1; l < static_cast<std::int64_t>(p); ++l) {
      CAPTURE(p);
      CAPTURE(l);
      CHECK(predicted_family(f, s(f, l)).size() == predicted_order(f, s(f, l)));
    }
  }
}

TEST_CASE("family members satisfy the defining constraints") {
  for (std::uint64_t p : {2, 3, 5}) {
    const auto f = gf(p);
    for (std::int64_t l = 1; l < static_cast<std::int64_t>(p); ++l) {
      const auto lambda = s(f, l);
      for (const auto& m : family_members(f, lambda)) {
        const auto& q = m.params;
        const auto b1 = q.beta1();
        const auto b2 = q.beta2();
        CHECK((q.alpha1 * b1 + lambda * q.alpha2 * b2).is_zero());
        CHECK(q.alpha1 * q.alpha1 + lambda * q.alpha2 * q.alpha2 == inverse(lambda) * b1 * b1 + b2 * b2);
        CHECK(det_identity_check(q));
        CHECK(!det(m.map.matrix()).is_zero());
      }
    }
  }
}

TEST_CASE("determinant identity on hand-picked members") {
  const auto f5 = gf(5);
  const auto p = params(f5, 2, 2, 3, 4, 1, -1);
  const auto m = family_matrix(p);
  // N = 4 + 2*9 = 22 = 2 mod 5
  CHECK(det(m.matrix()) == p.norm() * (p.alpha1 * p.beta2() - p.alpha2 * p.beta1()));
  CHECK(p.norm() == s(f5, 2));
}

TEST_CASE("comparison against enumeration") {
  const auto f3 = gf(3);
  const auto c = compare_with_oracle(f3, s(f3, 1));
  CHECK(c.equal);
  CHECK(c.predicted_order == 144);
  CHECK(c.predicted_family_size == 144);
  CHECK(c.enumerated_order == 144);
  CHECK(c.missing.empty());
  CHECK(c.extra.empty());
  CHECK_FALSE(c.reducible_flag);

  const auto f2 = gf(2);
  const auto c2 = compare_with_oracle(f2, s(f2, 1));
  CHECK(c2.enumerated_order == 8);
  CHECK(c2.predicted_family_size == 8);
  CHECK(c2.equal);
  CHECK(c2.reducible_flag);

  // X² + 1 = (X - 2)(X + 2) over GF(5); oracle order 800
  const auto f5 = gf(5);
  const auto c5 = compare_with_oracle(f5, s(f5, 1));
  CHECK(c5.reducible_flag);
  CHECK(c5.predicted_order == 800);
  CHECK(c5.enumerated_order == 800);
  CHECK(c5.equal);
}

TEST_CASE("predicted family equals the integer brute force") {
  for (auto [p, l] : {std::pair<std::uint64_t, std::int64_t>{2, 1}, {3, 1}, {3, 2}, {5, 1}, {5, 2}}) {
    CAPTURE(p);
    const auto f = gf(p);
    CHECK(to_ints(predicted_family(f, s(f, l))) ==
          brute_force_automorphisms(lei4_table(static_cast<std::int64_t>(p), l)));
  }
}

TEST_CASE("comparison reports missing and extra maps") {
  const auto f = gf(3);
  const auto lei4 = build_lei4(f, s(f, 1));
  const auto g = enumerate_automorphisms(lei4.algebra);
  const auto fake = map_from_rows(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  auto family_maps = g.without(LinearMap::identity(f, 3)).elements();
  family_maps.push_back(fake);
  const AutSet family(f, 3, family_maps);
  const auto c = compare_with_oracle(family, g, false, 144);
  CHECK_FALSE(c.equal);
  REQUIRE(c.missing.size() == 1);
  CHECK(c.missing.front() == LinearMap::identity(f, 3));
  REQUIRE(c.extra.size() == 1);
  CHECK(c.extra.front() == fake);
}

TEST_CASE("upsilon and image blocks") {
  const auto f = gf(3);
  const auto g = map_from_rows(f, {{1, 2, 0}, {0, 1, 0}, {1, 1, 1}});
  CHECK(upsilon(g) == Matrix::from_ints(f, {{1, 2}, {0, 1}}));
  CHECK(predicted_image_blocks(f, s(f, 1)).size() == 16);
  CHECK(predicted_image_blocks(f, s(f, 2)).size() == 8);
  const auto f2 = gf(2);
  CHECK(predicted_image_blocks(f2, s(f2, 1)).size() == 2);
  const auto f5 = gf(5);
  CHECK(predicted_image_blocks(f5, s(f5, 2)).size() == 48);
  CHECK(predicted_image_blocks(f5, s(f5, 1)).size() == 32);
}

TEST_CASE("quotient homomorphism") {
  struct Case {
    std::uint64_t p;
    std::int64_t lambda;
    std::size_t kernel;
    std::size_t image;
    bool exhaustive;
  };
  // kernel and image sizes frozen from the brute-force oracle
  for (const auto& c : {Case{2, 1, 4, 2, true}, Case{3, 1, 9, 16, false}, Case{3, 2, 9, 8, true},
                        Case{5, 2, 25, 48, false}}) {
    CAPTURE(c.p);
    const auto f = gf(c.p);
    const auto r = quotient_hom_check(f, s(f, c.lambda), 7);
    CHECK(r.passed());
    CHECK(r.kernel_size == c.kernel);
    CHECK(r.image_size == c.image);
    CHECK(r.exhaustive == c.exhaustive);
    CHECK(r.pairs_checked == (c.exhaustive ? r.kernel_size * r.kernel_size * r.image_size * r.image_size
                                           : kExhaustivePairLimit));
  }
}

TEST_CASE("verify_theorem1 over small fields") {
  for (auto [p, l] : {std::pair<std::uint64_t, std::int64_t>{2, 1}, {3, 1}, {3, 2}, {5, 2}}) {
    CAPTURE(p);
    const auto f = gf(p);
    const auto r = verify_theorem1(f, s(f, l), 11);
    CHECK(r.comparison.equal);
    CHECK(r.predicted_order_consistent);
    CHECK(r.det_identity);
    CHECK(r.family_closed);
    CHECK(r.quotient.passed());
  }
  const auto f3 = gf(3);
  const auto a = verify_theorem1(f3, s(f3, 1), 1);
  const auto b = verify_theorem1(f3, s(f3, 1), 1);
  CHECK(a.closure_pairs_checked == b.closure_pairs_checked);
  CHECK(a.quotient.pairs_checked == b.quotient.pairs_checked);
}
