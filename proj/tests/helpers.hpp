#pragma once

#include <array>

#include <doctest.h>

#include "leibniz/autgroup.hpp"

namespace leibniz::testing {

inline FieldSpec gf(std::uint64_t p) { return FieldSpec::prime(p); }

inline Scalar s(const FieldSpec& f, std::int64_t v) { return Scalar::from_int(f, v); }

inline Vector vec(const FieldSpec& f, std::initializer_list<std::int64_t> values) {
  Vector out;
  for (auto v : values) out.push_back(Scalar::from_int(f, v));
  return out;
}

inline Subspace span(const FieldSpec& f, std::size_t n,
                     std::initializer_list<std::initializer_list<std::int64_t>> vectors) {
  std::vector<Vector> vs;
  for (auto v : vectors) vs.push_back(vec(f, v));
  return Subspace::span(f, n, vs);
}

/// Algebra from 1-based (i, j, k, value) entries.
inline Algebra table(const FieldSpec& f, std::size_t n,
                     std::initializer_list<std::array<std::int64_t, 4>> entries,
                     bool checked = true) {
  StructureConstants c(f, n);
  for (const auto& e : entries) {
    c.set(static_cast<std::size_t>(e[0] - 1), static_cast<std::size_t>(e[1] - 1),
          static_cast<std::size_t>(e[2] - 1), Scalar::from_int(f, e[3]));
  }
  return checked ? Algebra(std::move(c)) : Algebra::unchecked(std::move(c));
}

inline LinearMap map_from_rows(const FieldSpec& f,
                               const std::vector<std::vector<std::int64_t>>& rows) {
  return LinearMap(Matrix::from_ints(f, rows));
}

}  // namespace leibniz::testing
