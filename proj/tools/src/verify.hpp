#pragma once

#include <iosfwd>

#include "sweep.hpp"

namespace djc::tools {

// Cross-validates the closed-form states against the truncated-Fock
// evolution over the configured grid, prints the report, and appends the
// square-root-coupling variant deviation table. Returns true on PASS.
// When cfg.out_path is set, a per-point CSV detail file is written.
bool run_verify(const SweepConfig& cfg, std::ostream& os);

}  // namespace djc::tools
