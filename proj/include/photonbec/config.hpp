#pragma once

#include <string>
#include <vector>

#include "photonbec/core_model.hpp"
#include "photonbec/equilibrium.hpp"
#include "photonbec/feasibility.hpp"
#include "photonbec/simulator.hpp"

namespace photonbec {

/// One validated scenario: material + cavity + pulse plus solver and
/// simulation knobs. Loaded from a line-oriented "key = value" file with
/// '#' comments and dotted section keys (material.n0 = 1.44). All values
/// are SI.
struct RunConfig {
  MaterialParams material{};
  CavityGeometry geometry{};
  PulseSpec pulse{};
  double delta_T = 1.0;  // authorized temperature rise per pulse [K]
  FeasibilityOptions feasibility{};
  SolverOptions solver{};
  SimConfig sim{};
  int sim_bins = 128;
  double sim_eps_max = 0.0;  // [J], 0 = 16 kB T_predicted (at least 4 eps_p)
  std::string sim_init_shape = "gaussian";
  double sim_init_center = 0.0;  // [J] from band bottom, 0 = pump excess energy
  double sim_init_width = 0.0;   // [J], 0 = 2.5 bins
  double sim_init_lo = 0.0;      // uniform shape bounds [J]
  double sim_init_hi = 0.0;

  void validate() const;
};

RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& text, const std::string& source_name);

/// Numeric keys accepted by the config parser and the sweep driver.
std::vector<std::string> sweepable_keys();

/// Assign one numeric key; throws ValidationError for unknown keys
/// (message lists the sweepable keys).
void set_config_value(RunConfig& cfg, const std::string& key, double value);

}  // namespace photonbec
