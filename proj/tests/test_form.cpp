#include <random>

#include "helpers.hpp"
#include "leibniz/form.hpp"

using namespace leibniz;
using namespace leibniz::testing;

TEST_CASE("induced_form examples") {
  for (std::uint64_t p : {3, 5, 7}) {
    const auto f = gf(p);
    for (std::int64_t l = 1; l < static_cast<std::int64_t>(p); ++l) {
      const auto a = build_lei4(f, s(f, l)).algebra;
      const auto phi = induced_form(a, vec(f, {0, 0, 1}));
      CHECK(phi.gram == Matrix::from_ints(f, {{1, 0}, {0, l}}));
      CHECK(phi.quotient_basis == std::vector<std::size_t>{0, 1});
    }
  }
  const auto f3 = gf(3);
  const auto heis = table(f3, 3, {{1, 2, 3, 1}, {2, 1, 3, -1}});
  CHECK(induced_form(heis, vec(f3, {0, 0, 1})).gram == Matrix::from_ints(f3, {{0, 1}, {-1, 0}}));

  const auto f5 = gf(5);
  const auto lei5 = build_lei4(f5, s(f5, 1)).algebra;
  CHECK(induced_form(lei5, vec(f5, {0, 0, 2})).gram == Matrix::from_ints(f5, {{3, 0}, {0, 3}}));
  CHECK(default_generator(lei5) == vec(f5, {0, 0, 1}));
}

TEST_CASE("induced_form errors") {
  const auto f = gf(3);
  try {
    (void)induced_form(table(f, 2, {}), vec(f, {0, 1}));
    FAIL("expected NotExtraspecial");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotExtraspecial);
  }
  const auto a = build_lei4(f, s(f, 1)).algebra;
  for (const auto& bad : {vec(f, {0, 0, 0}), vec(f, {1, 0, 0})}) {
    try {
      (void)induced_form(a, bad);
      FAIL("expected BadGenerator");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadGenerator);
    }
  }
}

TEST_CASE("preserves_form examples") {
  const auto f = gf(5);
  const auto phi = induced_form(build_lei4(f, s(f, 2)).algebra, vec(f, {0, 0, 1}));
  CHECK(preserves_form(LinearMap::identity(f, 2), phi));
  CHECK_FALSE(preserves_form(LinearMap(Matrix::from_ints(f, {{2, 0}, {0, 2}})), phi));
  CHECK(preserves_form(LinearMap(Matrix::from_ints(f, {{1, 0}, {0, -1}})), phi));
  try {
    (void)preserves_form(LinearMap::identity(f, 3), phi);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("form value ignores central shifts") {
  std::mt19937_64 rng(5);
  const auto f = gf(7);
  const auto a = build_lei4(f, s(f, 3)).algebra;
  const auto c = vec(f, {0, 0, 1});
  std::uniform_int_distribution<std::int64_t> d(0, 6);
  for (int t = 0; t < 200; ++t) {
    const auto x = vec(f, {d(rng), d(rng), d(rng)});
    const auto y = vec(f, {d(rng), d(rng), d(rng)});
    const auto z1 = scale(s(f, d(rng)), c);
    const auto z2 = scale(s(f, d(rng)), c);
    CHECK(coefficient_along(a.bracket(add(x, z1), add(y, z2)), c) ==
          coefficient_along(a.bracket(x, y), c));
  }
}

TEST_CASE("similitude_factor") {
  const auto f = gf(5);
  const auto phi = induced_form(build_lei4(f, s(f, 2)).algebra, vec(f, {0, 0, 1}));
  CHECK(similitude_factor(LinearMap::identity(f, 2), phi) == s(f, 1));
  CHECK(similitude_factor(LinearMap(Matrix::from_ints(f, {{2, 0}, {0, 2}})), phi) == s(f, 4));
  CHECK_FALSE(similitude_factor(LinearMap(Matrix::from_ints(f, {{1, 0}, {0, 2}})), phi).has_value());
  CHECK_THROWS_AS((void)similitude_factor(LinearMap::identity(f, 3), phi), Error);
}

TEST_CASE("induced maps scale the form by the a3 coefficient") {
  // [f(x), f(y)] = f([x, y]) = sigma * f(c), and f(c) = N c, so the induced
  // map multiplies the form by N; it preserves the form exactly when N = 1.
  for (auto [p, l] : {std::pair<std::uint64_t, std::int64_t>{2, 1}, {3, 1}, {3, 2}, {5, 2}}) {
    CAPTURE(p);
    const auto f = gf(p);
    const auto a = build_lei4(f, s(f, l)).algebra;
    const auto c = vec(f, {0, 0, 1});
    const auto phi = induced_form(a, c);
    const auto z = centers(a).two_sided;
    std::size_t fixing_c = 0;
    for (const auto& g : enumerate_automorphisms(a)) {
      const auto n = g.matrix()(2, 2);
      const auto up = induced_quotient_map(g, z);
      CHECK(similitude_factor(up, phi) == n);
      CHECK(preserves_form(up, phi) == n.is_one());
      if (n.is_one()) ++fixing_c;
    }
    CHECK(fixing_c > 0);
  }
}

TEST_CASE("quotient map is a homomorphism with kernel C_G(L/Z)") {
  for (std::uint64_t p : {2, 3}) {
    const auto f = gf(p);
    const auto a = build_lei4(f, s(f, 1)).algebra;
    const auto g = enumerate_automorphisms(a);
    const auto z = centers(a).two_sided;
    std::vector<LinearMap> up;
    for (const auto& h : g) up.push_back(induced_quotient_map(h, z));
    const auto& e = g.elements();
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (!(induced_quotient_map(e[i] * e[j], z) == up[i] * up[j])) {
          FAIL("psi is not multiplicative");
        }
      }
    }
    std::vector<LinearMap> kernel;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (up[i] == LinearMap::identity(f, 2)) kernel.push_back(e[i]);
    }
    CHECK(AutSet(f, 3, kernel) == centralizer_of_quotient(g, z));

    const AutSet image(f, 2, up);
    CHECK(verify_group(image).passed);
  }
}
