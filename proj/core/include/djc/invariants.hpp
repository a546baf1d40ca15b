#pragma once

#include "djc/state.hpp"

namespace djc {

using Vec4 = std::array<Complex, 4>;

// The 16 amplitudes sliced into four length-4 vectors by the two most
// significant bits: A = amps[0..3], B = amps[4..7], C = amps[8..11],
// D = amps[12..15]. Equivalently the rows of the 4x4 reshape
// Y(mu, alpha) = amps[4*mu + alpha].
struct BlockDecomposition {
  Vec4 a, b, c, d;
};

// Covectors built from Levi-Civita contractions of three of the four blocks
// (lower-index components).
struct CovectorQuad {
  Vec4 a, b, c, d;
};

struct FourDeterminant {
  Complex s, t, d4;
};

struct InvariantSet {
  Complex i1, i2, i3, i4;
  Complex s, t, d4;
  double tau4 = 0.0;
};

BlockDecomposition blocks(const FourQubitState& state);
FourQubitState from_blocks(const BlockDecomposition& b);

// Bilinear form g = J (x) J with J = [[0,1],[-1,0]]:
// g(u,v) = u0*v3 - u1*v2 - u2*v1 + u3*v0. Symmetric, g^2 = 1.
Complex dot_g(const Vec4& u, const Vec4& v);

// v_a = g_ab v^b; involutive, so the same map raises a lowered index.
Vec4 lower_index(const Vec4& v);

// I1 = (A.D - B.C)/2, degree 2.
Complex invariant_I1(const FourQubitState& state);

// I2 via the antisymmetrized block products
// (1/6)[(A^B).(C^D) + (A^C).(B^D) - (A^D)^2/2 - (B^C)^2/2], degree 4.
Complex invariant_I2_wedge(const FourQubitState& state);

// I2 via the independent 2x2 minors of the 4x4 reshape (Plucker
// coordinates), (1/6) sum_{mu<nu, alpha<beta} P^{..} P_{..}. Agrees with the
// wedge route identically; kept as a second algebraic route.
Complex invariant_I2_plucker(const FourQubitState& state);

// a_al = -eps_{al,be,ga,de} B^be C^ga D^de and cyclic partners
// (sign pattern -,+,+,-), eps_0123 = +1.
CovectorQuad covectors(const BlockDecomposition& b);

// I3 = (a.d - b.c)/2 over the covectors, degree 6.
Complex invariant_I3(const FourQubitState& state);

// I4 = eps^{abcd} A_a B_b C_c D_d with lowered blocks; equals the
// determinant of the 4x4 matrix whose rows are the lowered blocks. Degree 4.
Complex invariant_I4(const FourQubitState& state);
Complex invariant_I4(const BlockDecomposition& b);

// S = (I4^2 - I2^2) + 4(I2^2 - I1 I3)
// T = (I4^2 - I2^2)(I1^2 - I2) + (I3 - I1 I2)^2
// D4 = (S^3 - 27 T^2)/256
FourDeterminant four_determinant(Complex i1, Complex i2, Complex i3, Complex i4);

// S^3 and 27 T^2 cancel to machine precision whenever D4 vanishes, so D4
// comparisons need an absolute tolerance scaled by |S|^3.
double d4_tolerance(const FourDeterminant& fd);

// tau4 = 4 |Y0 Y15 - Y1 Y14 - Y2 Y13 + Y3 Y12 - Y4 Y11 + Y5 Y10 + Y6 Y9 - Y7 Y8|^2
//      = 16 |I1|^2
double four_tangle(const FourQubitState& state);

InvariantSet compute_invariants(const FourQubitState& state);

}  // namespace djc
