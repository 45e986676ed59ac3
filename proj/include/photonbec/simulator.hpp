#pragma once

#include <vector>

#include "photonbec/collision.hpp"
#include "photonbec/equilibrium.hpp"
#include "photonbec/spectral_grid.hpp"

namespace photonbec {

struct SimConfig {
  double dt_init = 0.0;          // [s], 0 = choose from the initial rates
  double max_rel_change = 1e-2;  // per-step cap on |df| / (f + anchor)
  double t_end = 0.0;            // [s], required > 0
  double rate_constant = 0.0;    // 0 = calibrate against the kinetic estimate
  int record_every = 50;         // steps between trajectory samples
  double conservation_tol = 1e-6;
  double l1_stop = 2e-3;    // stop once L1 to the predicted state falls below
  double f_floor = 1e-30;   // regularizes entropy and the fit at empty bins
  double init_noise = 0.0;  // relative multiplicative noise on the initial f

  void validate() const;
};

struct TrajectorySample {
  double t;          // [s]
  double rho;        // [1/m^3]
  double u;          // [J/m^3]
  double S;          // entropy density [1/m^3]
  double T_fit;      // [K]
  double kappa_fit;  // dimensionless
  double l1_to_be;   // L1 distance to the predicted equilibrium
};

enum class StopReason { TimeEnd, L1Converged, Stalled };

struct BoseFit {
  double T;         // [K]
  double kappa;     // dimensionless; slightly negative marks a grid condensate
  double residual;  // normalized rms of the affine fit
};

/// Least-squares fit of ln(1 + 1/f_i) = beta eps_i + kappa over bins with
/// f_i > f_floor. Throws when no bin qualifies.
BoseFit bose_fit(const SpectralGrid& g, double f_floor = 1e-30);

/// Equilibrium occupation sampled on the grid; any condensate density is
/// lumped into bin 0 (the near-ground-mode reservoir).
std::vector<double> predicted_be_occupation(const SpectralGrid& g,
                                            const EquilibriumState& eq);

struct SimResult {
  SpectralGrid grid;  // final state
  std::vector<TrajectorySample> trajectory;
  double time_to_equilibrium;  // first sample with L1 < 0.05 [s]; inf if never
  long long steps = 0;
  long long clamp_events = 0;
  double max_drift_number = 0.0;  // relative, over the whole run
  double max_drift_energy = 0.0;
  StopReason stop_reason = StopReason::TimeEnd;
  double rate_constant = 0.0;  // K actually used
};

/// Explicit RK4 integration of df/dt = C[f] with per-step relative-change
/// control. Aborts with ConservationError when number or energy density
/// drifts beyond conservation_tol.
class Simulator {
 public:
  /// f_reference: predicted equilibrium occupation for the L1 diagnostics;
  /// may be empty (disables the L1 stop). mat/sigma feed the rate-constant
  /// calibration when cfg.rate_constant == 0.
  Simulator(SpectralGrid grid, SimConfig cfg, const MaterialParams& mat, double sigma,
            std::vector<double> f_reference = {});

  /// One accepted RK4 step; returns the dt taken.
  double step();

  /// Run until t_end, L1 convergence, or stall; records the trajectory.
  SimResult evolve();

  const SpectralGrid& grid() const { return grid_; }
  double time() const { return t_; }
  double rate_constant() const { return rate_constant_; }

 private:
  TrajectorySample sample() const;
  void audit_conservation();

  SpectralGrid grid_;
  SimConfig cfg_;
  std::vector<double> f_ref_;
  double rate_constant_;
  double t_ = 0.0;
  double dt_;
  double rho0_, u0_;  // conserved targets from t = 0
  long long steps_ = 0;
  long long clamps_ = 0;
  double max_drift_number_ = 0.0, max_drift_energy_ = 0.0;
  std::vector<double> k1_, k2_, k3_, k4_, df_;
};

}  // namespace photonbec
