#pragma once

#include <string>
#include <vector>

#include "djc/dynamics.hpp"
#include "djc/invariants.hpp"

namespace djc::tools {

struct SweepConfig {
  Family family = Family::Phi;
  ModelParams params;
  double t_start = 0.0;
  double t_stop = 6.283185307179586;
  int t_steps = 64;
  double alpha_start = 0.0;
  double alpha_stop = 1.5707963267948966;
  int alpha_steps = 1;
  double beta = 0.0;
  int nmax = 2;
  std::string out_path;
  std::string svg_path;
};

struct GridPoint {
  double t = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  InvariantSet inv;
  double leakage = 0.0;
};

std::vector<double> linspace(double start, double stop, int steps);

// Throws std::invalid_argument on out-of-domain angles or bad step counts.
void validate_config(const SweepConfig& cfg, bool require_two_axes);

// Invariants come from the closed-form state; leakage from the
// truncated-Fock evolution at the same point. Rows are ordered t-outer,
// alpha-inner.
std::vector<GridPoint> evaluate_grid(const SweepConfig& cfg);

}  // namespace djc::tools
