#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include <Eigen/Dense>

namespace djc {

using Complex = std::complex<double>;
using Amplitudes = std::array<Complex, 16>;

// Basis index convention used throughout: k = 8*x4 + 4*x3 + 2*x2 + x1 with
// x4 = atom A, x3 = atom B, x2 = cavity-a photon number, x1 = cavity-b
// photon number; spin up maps to 1, spin down to 0.
constexpr int pack_index(int x4, int x3, int x2, int x1) {
  return 8 * x4 + 4 * x3 + 2 * x2 + x1;
}

// slot in 4..1, matching the subscript of x; slot 4 is the most significant bit
constexpr int slot_bit(int k, int slot) { return (k >> (slot - 1)) & 1; }

inline constexpr double kNormTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-12;

struct ZeroVector : std::invalid_argument {
  ZeroVector() : std::invalid_argument("cannot normalize an all-zero amplitude vector") {}
};

struct NonUnitaryFactor : std::invalid_argument {
  NonUnitaryFactor() : std::invalid_argument("local factor is not unitary within tolerance") {}
};

struct FourQubitState {
  Amplitudes amps{};
};

// One 2x2 factor per tensor slot; u4 acts on atom A, u3 on atom B,
// u2 on cavity a, u1 on cavity b.
struct LocalUnitary {
  Eigen::Matrix2cd u4, u3, u2, u1;
};

FourQubitState make_state(const Amplitudes& amps, bool normalize = false);

double norm(const FourQubitState& state);

// <s1|s2>
Complex overlap(const FourQubitState& s1, const FourQubitState& s2);

// (u4 (x) u3 (x) u2 (x) u1)|state>; throws NonUnitaryFactor if any factor
// fails U^dag U = 1 within kUnitaryTol.
FourQubitState apply_local_unitaries(const FourQubitState& state, const LocalUnitary& u);

// Unit-norm state from 16 independent complex standard-Gaussian draws
// (uniform on the sphere); deterministic per seed.
FourQubitState random_state(std::uint64_t seed);

// Haar-distributed SU(2) matrix; det = 1, deterministic per seed.
Eigen::Matrix2cd random_su2(std::uint64_t seed);

// Four independent Haar SU(2) factors derived from one seed.
LocalUnitary random_local_unitary(std::uint64_t seed);

}  // namespace djc
