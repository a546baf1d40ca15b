#pragma once

#include "djc/invariants.hpp"
#include "djc/state.hpp"

namespace djc {

enum class Subsystem { A, B };
enum class Family { Phi, Psi };

// One atom-cavity pair is described by its field frequency nu, atomic
// transition frequency omega and coupling constant g (all rad/time).
struct ModelParams {
  double nu_a = 1.0;
  double omega_a = 1.0;
  double coupling_a = 1.0;
  double nu_b = 1.0;
  double omega_b = 1.0;
  double coupling_b = 1.0;

  double nu(Subsystem s) const { return s == Subsystem::A ? nu_a : nu_b; }
  double omega(Subsystem s) const { return s == Subsystem::A ? omega_a : omega_b; }
  double coupling(Subsystem s) const { return s == Subsystem::A ? coupling_a : coupling_b; }
  double detuning(Subsystem s) const { return omega(s) - nu(s); }
  // sqrt(g^2 + delta^2/4), the one-excitation oscillation frequency
  double rabi(Subsystem s) const;

  // couplings must be positive and all entries finite
  void validate() const;
};

// alpha in [0, pi/2], beta in [0, pi]
struct InitialStateSpec {
  Family family = Family::Phi;
  double alpha = 0.0;
  double beta = 0.0;
};

// One-pair evolution coefficients at time t:
//   f = <up,0|U|up,0>, g = <down,1|U|up,0>, h = <down,0|U|down,0>
// for U = exp(-i H t). |f|^2 + |g|^2 = 1 and |h| = 1.
struct JCCoefficients {
  Complex f, g, h;
};

JCCoefficients coefficients(const ModelParams& params, Subsystem s, double t);

// sin(w t)/w, with a series branch near w t = 0
double sinc_rotation(double w, double t);

// Evolved state of (up,up + e^{i beta} tan-weighted down,down) x vacuum:
//   Y(0000) = hA hB e^{i beta} sin(alpha)   Y(0011) = gA gB cos(alpha)
//   Y(0110) = gA fB cos(alpha)              Y(1001) = fA gB cos(alpha)
//   Y(1100) = fA fB cos(alpha)
// support {0, 3, 6, 9, 12}, unit norm.
FourQubitState phi_state(const ModelParams& params, double alpha, double beta, double t);

// Evolved state of (cos(alpha) up,down + e^{i beta} sin(alpha) down,up) x vacuum:
//   Y(0001) = hA gB e^{i beta} sin(alpha)   Y(0010) = gA hB cos(alpha)
//   Y(0100) = hA fB e^{i beta} sin(alpha)   Y(1000) = fA hB cos(alpha)
// support {1, 2, 4, 8}, unit norm.
FourQubitState psi_state(const ModelParams& params, double alpha, double beta, double t);

FourQubitState evolved_state(const ModelParams& params, const InitialStateSpec& spec, double t);

// Closed forms for the Phi-family invariants, evaluated through the
// coefficient functions. With a = Y1001 Y0110 and b = Y1100 Y0011:
//   I1 = (a + b)/2 = cos^2(alpha) fA fB gA gB
//   I2 = (a^2 + 4ab + b^2)/6
//   I3 = (ab)(a + b)/2
// For this family a = b at every parameter point, so I2 = I1^2 and
// I3 = I1^3; at resonance I1 reduces to
//   -(1/4) e^{-2it(nuA+nuB)} cos^2(alpha) sin(2 gA t) sin(2 gB t).
Complex closed_form_I1_phi(const ModelParams& params, double alpha, double t);
Complex closed_form_I2_phi(const ModelParams& params, double alpha, double t);
Complex closed_form_I3_phi(const ModelParams& params, double alpha, double t);

// Reference invariants of cos(alpha)|0000> + e^{i beta} sin(alpha)|1111>:
// tau4 = sin^2(2 alpha), I1 = (1/2) e^{i beta} sin(alpha) cos(alpha),
// I2 = (1/24) e^{2 i beta} sin^2(2 alpha), I3 = I4 = 0.
InvariantSet ghz_family_reference(double alpha, double beta);

}  // namespace djc
