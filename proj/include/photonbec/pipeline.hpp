#pragma once

#include <cstdint>

#include "photonbec/config.hpp"
#include "photonbec/nonlinearity.hpp"
#include "photonbec/report.hpp"

namespace photonbec {

/// Derived scales + interaction parameters for a scenario.
Report derive_report(const RunConfig& cfg);

/// Density feasibility window (2D or 3D per the geometry).
Report feasibility_report(const RunConfig& cfg);
FeasibilityReport compute_feasibility(const RunConfig& cfg);

/// Balance-equation solution for the pulse.
Report equilibrium_report(const RunConfig& cfg);
EquilibriumState compute_equilibrium(const RunConfig& cfg);

/// Fully configured simulation setup: grid with the initial spectrum,
/// resolved SimConfig (auto values filled), predicted equilibrium and the
/// matching reference occupation.
struct SimSetup {
  SpectralGrid grid;
  SimConfig sim;
  EquilibriumState predicted;
  std::vector<double> f_reference;
  InteractionParams interaction;
  double tau_relax = 0.0;  // kinetic estimate at the grid density
};

SimSetup prepare_simulation(const RunConfig& cfg, uint64_t seed = 0);

struct SimulateOutput {
  Report summary;
  Table trajectory;
  Table spectrum;  // final spectrum: eps, f, dos
};

SimulateOutput run_simulation(const RunConfig& cfg, uint64_t seed = 0);

}  // namespace photonbec
