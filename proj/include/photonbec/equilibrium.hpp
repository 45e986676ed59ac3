#pragma once

namespace photonbec {

/// Conserved quantities handed to the balance solvers: photon number and
/// the mean input energy per photon.
struct BalanceInputs {
  double rho;      // total photon density [photons/m^3]
  double omega_p;  // pump angular frequency [rad/s]
  double omega_0;  // cutoff angular frequency [rad/s]
  double m_eff;    // effective mass [kg]
  double L = 0.0;  // longitudinal length [m], 2D only
  // Optional mean total energy per photon [J], replacing hbar*omega_p for
  // non-monochromatic input. 0 = use hbar*omega_p.
  double mean_energy_override = 0.0;

  void validate(bool two_dimensional) const;
  /// Mean excess energy per photon above the cutoff [J].
  double excess_energy() const;
};

struct SolverOptions {
  double tolerance = 1e-10;    // relative residual target
  int max_iterations = 200;    // per bisection level
  double kappa_floor = 1e-12;  // below this, report mu -> hbar omega0
};

/// Thermal state of the photon gas after thermalization.
///
/// kappa = beta (hbar omega0 - mu) can land below the double underflow
/// threshold in the deeply degenerate 2D regime (kappa ~ e^{-4e4});
/// log_kappa carries the faithful value and kappa is its (possibly
/// underflowed) exponential.
struct EquilibriumState {
  double T_eff;             // [K]
  double beta;              // 1/(kB T_eff) [1/J]
  double kappa;             // gap parameter, dimensionless, >= 0
  double log_kappa;         // ln kappa (-inf when kappa = 0 exactly)
  double mu;                // chemical potential [J]
  double rho0;              // condensate density [photons/m^3], 3D only
  double lambda_B;          // thermal wavelength [m]
  bool condensed;           // rho0 > 0
  bool mu_at_cutoff;        // kappa < kappa_floor
  double residual_number;   // relative residual of the number balance
  double residual_energy;   // relative residual of the energy balance
  double correction_scale;  // 2D: rel size of the 1/(beta hbar omega0) terms
};

struct Residuals {
  double number;
  double energy;
};

/// 2D planar cavity balance:
///   rho          = (2 / lambda_B^2 L) (g1(kappa) + g2(kappa)/x)
///   Delta * rho  = (2 / beta lambda_B^2 L) (g2(kappa) + 2 g3(kappa)/x)
/// with x = beta hbar omega0 and Delta the excess energy per photon.
/// No true condensate in 2D: rho0 = 0 always.
EquilibriumState solve_equilibrium_2d(const BalanceInputs& in,
                                      const SolverOptions& opts = {});

/// 3D quadratic-band balance:
///   rho          = rho0 + 2 g_{3/2}(kappa) / lambda_B^3
///   Delta * rho  = 3 g_{5/2}(kappa) kB T / lambda_B^3
/// Condensed branch (kappa = 0) solved in closed form; otherwise a nested
/// (T, kappa) root find.
EquilibriumState solve_equilibrium_3d(const BalanceInputs& in,
                                      const SolverOptions& opts = {});

/// T_c = (h^2 / 2 pi m kB) (rho / 2 zeta(3/2))^{2/3}.
double critical_temperature_3d(double rho, double m_eff);

/// Relative residuals of the printed balance equations at a given state.
Residuals balance_residuals_2d(const EquilibriumState& s, const BalanceInputs& in);
Residuals balance_residuals_3d(const EquilibriumState& s, const BalanceInputs& in);

}  // namespace photonbec
