#pragma once

#include "photonbec/constants.hpp"

namespace photonbec {

enum class Dimensionality { Planar2D, Bandgap3D };

/// Kerr medium bulk parameters.
struct MaterialParams {
  double n0;              // linear refractive index
  double n2;              // nonlinear index [m^2/W]
  double alpha;           // linear absorption coefficient [1/m]
  double heat_capacity;   // volumetric specific heat [J/(m^3 K)]
  double raman_gain;      // peak Raman gain [m/W]
  double brillouin_gain;  // peak Brillouin gain [m/W]

  void validate() const;
};

/// Typical fused-silica values.
MaterialParams glass_defaults();

struct CavityGeometry {
  Dimensionality dimensionality = Dimensionality::Planar2D;
  double length;           // longitudinal cavity length L [m]
  double length_bandgap;   // bandgap longitudinal size, Bandgap3D only [m]
  double finesse;          // cavity finesse
  double transverse_area;  // cross-section area [m^2]
  double cladding_index = 1.0;

  void validate() const;
  /// L for Planar2D, the bandgap length for Bandgap3D.
  double effective_length() const;
};

struct PulseSpec {
  double lambda_p;        // pump vacuum wavelength [m]
  double photon_density;  // rho [photons/m^3]
  double duration;        // pulse duration [s]

  void validate() const;
};

/// Cross-object invariants that only make sense for a paired
/// (material, geometry, pulse) triple: pump above cutoff, cladding
/// below the core index.
void validate_pairing(const MaterialParams& mat, const CavityGeometry& geom,
                      const PulseSpec& pulse);

struct DerivedScales {
  double lambda_0;       // cutoff vacuum wavelength [m]
  double omega_0;        // cutoff angular frequency [rad/s]
  double omega_p;        // pump angular frequency [rad/s]
  double m_eff;          // effective photon mass [kg]
  double m_eff_c2_eV;    // rest energy m c^2 [eV]
  double tau_cav;        // cavity confinement time [s]
  double tau_abs;        // absorption time [s], +inf when alpha = 0
  double rho_l;          // thermal-load density limit [photons/m^3]
  double delta_omega;    // condensate linewidth 1/tau_cav [rad/s]
  double lambda_escape;  // confinement cutoff wavelength in medium [m]
};

struct CutoffResult {
  double omega_0;   // [rad/s]
  double lambda_0;  // [m]
};

/// Lowest longitudinal mode: omega_0 = c pi / (n0 L), lambda_0 = 2 n0 L.
CutoffResult cutoff_frequency(const MaterialParams& mat, const CavityGeometry& geom);

/// Curvature mass of the cavity dispersion, m = hbar pi n0 / (L c).
double effective_mass(const MaterialParams& mat, const CavityGeometry& geom);

enum class DispersionMode { Exact, Quadratic };

/// Single-band photon energy at transverse wavenumber k_perp [J].
/// Exact: (hbar c / n0) sqrt((pi/L)^2 + k_perp^2).
/// Quadratic: hbar omega_0 + hbar^2 k_perp^2 / (2 m).
double dispersion(double m_eff, double omega_0, double k_perp, DispersionMode mode,
                  const MaterialParams& mat, const CavityGeometry& geom);

struct TimeScales {
  double tau_cav;      // [s]
  double tau_abs;      // [s], +inf when alpha = 0
  double delta_omega;  // [rad/s]
};

/// tau_cav = L_eff * finesse * n0 / c, tau_abs = 1/(alpha c).
/// Bandgap3D cavities confine over the bandgap length.
TimeScales time_scales(const MaterialParams& mat, const CavityGeometry& geom);

/// I = rho * hbar omega * c / n0 [W/m^2].
double intensity_from_density(double rho, double omega, const MaterialParams& mat);

/// Exact inverse of intensity_from_density.
double density_from_intensity(double intensity, double omega, const MaterialParams& mat);

/// Circulating power through the cross section, I * A [W].
double peak_power(double rho, double omega, const MaterialParams& mat,
                  const CavityGeometry& geom);

/// Absorbed-photon budget for a temperature rise delta_T per pulse:
/// rho_l = heat_capacity * delta_T / (hbar omega_0).
double thermal_density_limit(const MaterialParams& mat, double delta_T, double omega_0);

/// All derived scales for a validated (material, geometry, pulse) triple.
DerivedScales derive_scales(const MaterialParams& mat, const CavityGeometry& geom,
                            const PulseSpec& pulse, double delta_T = 1.0);

}  // namespace photonbec
