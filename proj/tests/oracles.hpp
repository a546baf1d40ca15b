#pragma once

// Test-only reference computations. These deliberately avoid the library's
// evaluation paths: the tangle is the literal four-index contraction, the
// covectors come from 3x3 minors, and the determinant is a Laplace
// expansion.

#include <array>
#include <cmath>
#include <complex>

#include "djc/invariants.hpp"
#include "djc/state.hpp"

namespace djc::testing {

inline int eps2(int r, int s) {
  if (r == 0 && s == 1) return 1;
  if (r == 1 && s == 0) return -1;
  return 0;
}

// | sum_{r,s,u,v} Y_r Y_s Y_u Y_v  prod_j eps_{r_j s_j} prod_j eps_{u_j v_j} |
// over all 16^4 index quadruples, j running over the four qubit slots.
inline double four_tangle_eps_sum(const FourQubitState& st) {
  const Amplitudes& y = st.amps;
  Complex acc = 0.0;
  for (int r = 0; r < 16; ++r) {
    for (int s = 0; s < 16; ++s) {
      int w_rs = 1;
      for (int j = 1; j <= 4; ++j) w_rs *= eps2(slot_bit(r, j), slot_bit(s, j));
      if (w_rs == 0) continue;
      for (int u = 0; u < 16; ++u) {
        for (int v = 0; v < 16; ++v) {
          int w_uv = 1;
          for (int j = 1; j <= 4; ++j) w_uv *= eps2(slot_bit(u, j), slot_bit(v, j));
          if (w_uv == 0) continue;
          acc += static_cast<double>(w_rs * w_uv) * y[r] * y[s] * y[u] * y[v];
        }
      }
    }
  }
  return std::abs(acc);
}

inline Complex det3(const Vec4& r0, const Vec4& r1, const Vec4& r2, int c0, int c1, int c2) {
  return r0[c0] * (r1[c1] * r2[c2] - r1[c2] * r2[c1]) -
         r0[c1] * (r1[c0] * r2[c2] - r1[c2] * r2[c0]) +
         r0[c2] * (r1[c0] * r2[c1] - r1[c1] * r2[c0]);
}

// Covectors as signed 3x3 minors over the complement columns of the free
// index m. The base permutation signs are (-1)^m for a slot-0 or slot-2
// free index and (-1)^(m+1) for slot 1 or 3.
inline CovectorQuad covectors_minor_oracle(const BlockDecomposition& b) {
  CovectorQuad q{};
  for (int m = 0; m < 4; ++m) {
    std::array<int, 3> c{};
    int w = 0;
    for (int col = 0; col < 4; ++col) {
      if (col != m) c[w++] = col;
    }
    const double sm = (m % 2 == 0) ? 1.0 : -1.0;
    q.a[m] = -sm * det3(b.b, b.c, b.d, c[0], c[1], c[2]);
    q.b[m] = -sm * det3(b.a, b.c, b.d, c[0], c[1], c[2]);
    q.c[m] = sm * det3(b.a, b.b, b.d, c[0], c[1], c[2]);
    q.d[m] = sm * det3(b.a, b.b, b.c, c[0], c[1], c[2]);
  }
  return q;
}

// Laplace expansion along the first row.
inline Complex det4_laplace(const Vec4& r0, const Vec4& r1, const Vec4& r2, const Vec4& r3) {
  Complex acc = 0.0;
  for (int col = 0; col < 4; ++col) {
    std::array<int, 3> c{};
    int w = 0;
    for (int k = 0; k < 4; ++k) {
      if (k != col) c[w++] = k;
    }
    const double sign = (col % 2 == 0) ? 1.0 : -1.0;
    acc += sign * r0[col] * det3(r1, r2, r3, c[0], c[1], c[2]);
  }
  return acc;
}

}  // namespace djc::testing
