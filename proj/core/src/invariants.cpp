#include "djc/invariants.hpp"

#include <algorithm>
#include <cmath>

namespace djc {

namespace {

// eps_0123 = +1, totally antisymmetric, 0 on repeated indices.
constexpr int eps(int a, int b, int c, int d) {
  const int x[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (x[i] == x[j]) return 0;
      if (x[i] > x[j]) sign = -sign;
    }
  }
  return sign;
}

Complex spin_flip_pairing(const Amplitudes& y) {
  return y[0] * y[15] - y[1] * y[14] - y[2] * y[13] + y[3] * y[12] -
         y[4] * y[11] + y[5] * y[10] + y[6] * y[9] - y[7] * y[8];
}

// (u^v).(w^z) with both antisymmetric indices contracted through g.
Complex wedge_dot(const Vec4& u, const Vec4& v, const Vec4& w, const Vec4& z) {
  return 2.0 * (dot_g(u, w) * dot_g(v, z) - dot_g(u, z) * dot_g(v, w));
}

}  // namespace

BlockDecomposition blocks(const FourQubitState& state) {
  BlockDecomposition b;
  for (int i = 0; i < 4; ++i) {
    b.a[i] = state.amps[i];
    b.b[i] = state.amps[4 + i];
    b.c[i] = state.amps[8 + i];
    b.d[i] = state.amps[12 + i];
  }
  return b;
}

FourQubitState from_blocks(const BlockDecomposition& b) {
  FourQubitState state;
  for (int i = 0; i < 4; ++i) {
    state.amps[i] = b.a[i];
    state.amps[4 + i] = b.b[i];
    state.amps[8 + i] = b.c[i];
    state.amps[12 + i] = b.d[i];
  }
  return state;
}

Complex dot_g(const Vec4& u, const Vec4& v) {
  return u[0] * v[3] - u[1] * v[2] - u[2] * v[1] + u[3] * v[0];
}

Vec4 lower_index(const Vec4& v) { return {v[3], -v[2], -v[1], v[0]}; }

Complex invariant_I1(const FourQubitState& state) {
  return 0.5 * spin_flip_pairing(state.amps);
}

Complex invariant_I2_wedge(const FourQubitState& state) {
  const BlockDecomposition blk = blocks(state);
  const Complex term = wedge_dot(blk.a, blk.b, blk.c, blk.d) +
                       wedge_dot(blk.a, blk.c, blk.b, blk.d) -
                       0.5 * wedge_dot(blk.a, blk.d, blk.a, blk.d) -
                       0.5 * wedge_dot(blk.b, blk.c, blk.b, blk.c);
  return term / 6.0;
}

Complex invariant_I2_plucker(const FourQubitState& state) {
  const Amplitudes& y = state.amps;
  // g raises/lowers by swapping 0<->3 and 1<->2 with signs +,-,-,+.
  constexpr int sigma[4] = {3, 2, 1, 0};
  constexpr double sgn[4] = {1.0, -1.0, -1.0, 1.0};
  const auto p_up = [&y](int mu, int nu, int al, int be) {
    return y[4 * mu + al] * y[4 * nu + be] - y[4 * mu + be] * y[4 * nu + al];
  };
  Complex acc = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu + 1; nu < 4; ++nu) {
      for (int al = 0; al < 4; ++al) {
        for (int be = al + 1; be < 4; ++be) {
          const Complex up = p_up(mu, nu, al, be);
          const Complex low = sgn[mu] * sgn[nu] * sgn[al] * sgn[be] *
                              p_up(sigma[mu], sigma[nu], sigma[al], sigma[be]);
          acc += up * low;
        }
      }
    }
  }
  return acc / 6.0;
}

CovectorQuad covectors(const BlockDecomposition& b) {
  CovectorQuad q{};
  for (int free = 0; free < 4; ++free) {
    Complex ca = 0.0, cb = 0.0, cc = 0.0, cd = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
          ca -= static_cast<double>(eps(free, i, j, k)) * b.b[i] * b.c[j] * b.d[k];
          cb += static_cast<double>(eps(i, free, j, k)) * b.a[i] * b.c[j] * b.d[k];
          cc += static_cast<double>(eps(i, j, free, k)) * b.a[i] * b.b[j] * b.d[k];
          cd -= static_cast<double>(eps(i, j, k, free)) * b.a[i] * b.b[j] * b.c[k];
        }
      }
    }
    q.a[free] = ca;
    q.b[free] = cb;
    q.c[free] = cc;
    q.d[free] = cd;
  }
  return q;
}

Complex invariant_I3(const FourQubitState& state) {
  const CovectorQuad q = covectors(blocks(state));
  // the covector pairing uses the inverse metric, which equals g itself
  return 0.5 * (dot_g(q.a, q.d) - dot_g(q.b, q.c));
}

Complex invariant_I4(const BlockDecomposition& b) {
  const Vec4 ra = lower_index(b.a);
  const Vec4 rb = lower_index(b.b);
  const Vec4 rc = lower_index(b.c);
  const Vec4 rd = lower_index(b.d);
  Complex acc = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int bb = 0; bb < 4; ++bb) {
      for (int c = 0; c < 4; ++c) {
        for (int d = 0; d < 4; ++d) {
          const int e = eps(a, bb, c, d);
          if (e != 0) acc += static_cast<double>(e) * ra[a] * rb[bb] * rc[c] * rd[d];
        }
      }
    }
  }
  return acc;
}

Complex invariant_I4(const FourQubitState& state) { return invariant_I4(blocks(state)); }

FourDeterminant four_determinant(Complex i1, Complex i2, Complex i3, Complex i4) {
  const Complex s = (i4 * i4 - i2 * i2) + 4.0 * (i2 * i2 - i1 * i3);
  const Complex t = (i4 * i4 - i2 * i2) * (i1 * i1 - i2) + (i3 - i1 * i2) * (i3 - i1 * i2);
  const Complex d4 = (s * s * s - 27.0 * t * t) / 256.0;
  return {s, t, d4};
}

double d4_tolerance(const FourDeterminant& fd) {
  const double s_abs = std::abs(fd.s);
  return 1e-10 * std::max(1.0, s_abs * s_abs * s_abs);
}

double four_tangle(const FourQubitState& state) {
  return 4.0 * std::norm(spin_flip_pairing(state.amps));
}

InvariantSet compute_invariants(const FourQubitState& state) {
  InvariantSet inv;
  inv.i1 = invariant_I1(state);
  inv.i2 = invariant_I2_wedge(state);
  inv.i3 = invariant_I3(state);
  inv.i4 = invariant_I4(state);
  const FourDeterminant fd = four_determinant(inv.i1, inv.i2, inv.i3, inv.i4);
  inv.s = fd.s;
  inv.t = fd.t;
  inv.d4 = fd.d4;
  inv.tau4 = four_tangle(state);
  return inv;
}

}  // namespace djc
