#pragma once

// Test-only brute force over all q^(n*n) matrices with plain integer
// arithmetic mod p. Shares no code with the library's enumeration path.

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

namespace leibniz::testing {

using IntMatrix3 = std::array<std::int64_t, 9>;  // row-major

struct IntTable3 {
  std::int64_t p;
  std::int64_t c[3][3][3]{};
};

inline IntTable3 lei4_table(std::int64_t p, std::int64_t lambda) {
  IntTable3 t{p};
  t.c[0][0][2] = 1;
  t.c[1][1][2] = ((lambda % p) + p) % p;
  return t;
}

inline std::int64_t int_det3(const IntMatrix3& m, std::int64_t p) {
  const auto d = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
                 m[2] * (m[3] * m[7] - m[4] * m[6]);
  return ((d % p) + p) % p;
}

/// All invertible endomorphisms of the table, sorted lexicographically by
/// row-major entries.
inline std::vector<IntMatrix3> brute_force_automorphisms(const IntTable3& t) {
  const auto p = t.p;
  std::vector<IntMatrix3> out;
  std::int64_t total = 1;
  for (int i = 0; i < 9; ++i) total *= p;
  for (std::int64_t code = 0; code < total; ++code) {
    IntMatrix3 m{};
    auto c = code;
    for (int d = 8; d >= 0; --d) {
      m[d] = c % p;
      c /= p;
    }
    if (int_det3(m, p) == 0) continue;
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      for (int j = 0; j < 3 && ok; ++j) {
        for (int r = 0; r < 3 && ok; ++r) {
          // r-th coordinate of f([b_i, b_j])
          std::int64_t lhs = 0;
          for (int k = 0; k < 3; ++k) lhs += m[r * 3 + k] * t.c[i][j][k];
          // r-th coordinate of [f(b_i), f(b_j)]
          std::int64_t rhs = 0;
          for (int u = 0; u < 3; ++u) {
            for (int v = 0; v < 3; ++v) rhs += m[u * 3 + i] * m[v * 3 + j] * t.c[u][v][r];
          }
          ok = ((lhs - rhs) % p) == 0;
        }
      }
    }
    if (ok) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace leibniz::testing
