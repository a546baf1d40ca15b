#pragma once

#include "djc/dynamics.hpp"

namespace djc::variants {

// Frozen alternate closed forms for the Phi-family invariants in which the
// coupling constant enters the oscillation arguments under a square root
// (sin(2 t sqrt(g)) instead of sin(2 g t)) together with matching
// square-root prefactors. They coincide with the amplitude route at
// g_A = g_B = 1 and exact resonance, and drift away from it for any other
// coupling; `djc verify` reports the deviation of each form.
//
// i1_general_quadratic is the same general expression with the coupling
// read quadratically (delta^2/4 + g^2 under the roots); it reproduces the
// amplitude route to machine precision and pins down the square-root forms
// as a g <-> g^2 substitution.

Complex i1_general(const ModelParams& params, double alpha, double t);
Complex i1_general_quadratic(const ModelParams& params, double alpha, double t);
Complex i1_resonance(const ModelParams& params, double alpha, double t);
Complex i1_double_coupling(const ModelParams& params, double alpha, double t);
Complex i1_equal_coupling(const ModelParams& params, double alpha, double t);
Complex i2_resonance(const ModelParams& params, double alpha, double t);
Complex i3_resonance(const ModelParams& params, double alpha, double t);

}  // namespace djc::variants
