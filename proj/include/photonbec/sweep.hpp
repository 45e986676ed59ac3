#pragma once

#include <string>

#include "photonbec/config.hpp"
#include "photonbec/report.hpp"

namespace photonbec {

struct SweepSpec {
  std::string param;      // a sweepable numeric key, e.g. geometry.finesse
  double from = 0.0;
  double to = 0.0;
  int steps = 0;          // >= 2, endpoints included
  bool log_scale = false;
  int jobs = 0;           // parallel evaluations, 0 = all cores

  void validate() const;
};

/// One row per sweep point carrying the derive, feasibility and
/// equilibrium report fields. Rows appear in sweep order regardless of
/// evaluation order; a failing point fills its "error" cell and leaves
/// the rest of the row empty instead of aborting the sweep.
Table run_sweep(const RunConfig& base, const SweepSpec& spec);

}  // namespace photonbec
