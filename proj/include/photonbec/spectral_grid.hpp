#pragma once

#include <vector>

#include "photonbec/core_model.hpp"

namespace photonbec {

/// Isotropic single-band occupation on a uniform energy grid.
///
/// Energies are measured from the band bottom hbar*omega0:
/// eps_i = (i + 1/2) delta_eps. dos holds modes per unit volume per unit
/// energy at eps_i (polarization factor 2 included): constant in 2D,
/// proportional to sqrt(eps) in 3D. Bin 0 doubles as the near-ground-mode
/// reservoir when the gas condenses.
struct SpectralGrid {
  Dimensionality dim = Dimensionality::Planar2D;
  double delta_eps = 0.0;   // bin width [J]
  std::vector<double> eps;  // bin-center energies [J]
  std::vector<double> f;    // occupation per mode
  std::vector<double> dos;  // modes / (m^3 J)

  int bins() const { return static_cast<int>(eps.size()); }
  void validate() const;

  double number_density() const;   // sum g f deps [1/m^3]
  double energy_density() const;   // sum g f eps deps [J/m^3]
  double entropy_density() const;  // sum g [(1+f)ln(1+f) - f ln f] deps

  /// Scale f so that number_density() == rho.
  void normalize_to(double rho);

  void fill_gaussian(double rho, double center, double width);
  void fill_uniform(double rho, double eps_lo, double eps_hi);
  void fill_monochromatic(double rho, double center);
  /// Bose-Einstein occupation at (T, kappa); kappa may be slightly
  /// negative down to -beta*eps_0 (chemical potential between the band
  /// bottom and the first bin), which is the grid form of a condensate.
  void fill_bose_einstein(double T, double kappa);

  /// L1 distance to a reference occupation, weighted by the density
  /// measure and normalized by the total density:
  /// sum g |f - ref| deps / rho.
  double l1_distance(const std::vector<double>& f_ref) const;
};

/// Constant-DOS grid for the planar cavity band: g = m / (pi hbar^2 L).
SpectralGrid make_grid_2d(double m_eff, double L, double eps_max, int n_bins);

/// sqrt-DOS grid for the bandgap band: g = sqrt(2) m^{3/2} sqrt(eps) / (pi^2 hbar^3).
SpectralGrid make_grid_3d(double m_eff, double eps_max, int n_bins);

}  // namespace photonbec
