#pragma once

#include <string>
#include <vector>

#include "photonbec/core_model.hpp"

namespace photonbec {

/// Mode density of the 2D transverse continuum between the pump and the
/// cutoff: (pi / L lambda_0^2) [(lambda_0/lambda_p)^2 - 1] [modes/m^3].
double mode_density_2d(const CavityGeometry& geom, double lambda_0, double lambda_p);

/// Quadratic-band state count up to the pump frequency, polarization
/// factor 2 included:
///   2 / (2 pi)^3 * (4 pi / 3) * (2 m (omega_p - omega_0) / hbar)^{3/2}.
double mode_density_3d(double m_eff, double omega_0, double omega_p);

/// Degeneracy factor F = rho / mode_density (mean photons per mode).
double bose_enhancement(double rho, double mode_density);

/// 1/tau = rho (c/n0) sigma (1 + F).
double relaxation_time(double rho, double F, const MaterialParams& mat, double sigma);

struct AbsorbedFraction {
  double absorbed;        // rho (1 - exp(-tau_cav/tau_abs)) [photons/m^3]
  double linearized;      // rho tau_cav/tau_abs
  double rel_difference;  // |linearized - absorbed| / absorbed
};

AbsorbedFraction absorbed_fraction(double rho, double tau_cav, double tau_abs);

struct FeasibilityOptions {
  double margin_threshold = 10.0;  // operationalizes the "<<" in the window
  double reference_density = 0.0;  // 0 = report kinetics at rho_min
};

struct FeasibilityReport {
  double rho_min;            // thermalization lower bound [photons/m^3]
  double rho_max;            // thermal-load upper bound [photons/m^3]
  double margin;             // rho_max / rho_min
  bool feasible;             // margin >= margin_threshold and rho_max > 0
  double mode_density;       // [modes/m^3]
  double rho_ref;            // density at which kinetics are quoted
  double F_degeneracy;       // at rho_ref
  double tau_relax;          // at rho_ref [s]
  double intensity_ref;      // circulating intensity at rho_ref [W/m^2]
  double circulating_power;  // intensity_ref * transverse_area [W]
  double input_peak_power;   // cavity energy / tau_cav = I A / finesse [W]
  std::vector<std::string> notes;
};

/// Density window for the planar cavity:
///   [(lambda_0/lambda_p)^2 - 1]^{1/2} / (2 L lambda_0 a sqrt(F))
///     << rho <= rho_l / (n0 alpha L F).
FeasibilityReport density_window_2d(const MaterialParams& mat, const CavityGeometry& geom,
                                    double lambda_0, double lambda_p, double a,
                                    double rho_l, const FeasibilityOptions& opts = {});

/// Density window for the photonic-bandgap cavity (L_bandgap in place of L):
///   [(lambda_0/lambda_p) - 1]^{3/4} / (lambda_0^{3/2} a sqrt(F L~))
///     << rho <= rho_l / (n0 alpha L~ F).
FeasibilityReport density_window_3d(const MaterialParams& mat, const CavityGeometry& geom,
                                    double lambda_0, double lambda_p, double a,
                                    double rho_l, const FeasibilityOptions& opts = {});

}  // namespace photonbec
