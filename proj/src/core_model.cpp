#include "photonbec/core_model.hpp"

#include <cmath>
#include <limits>

#include "photonbec/errors.hpp"

namespace photonbec {

namespace {
constexpr double kPi = std::numbers::pi;
}

void MaterialParams::validate() const {
  if (!(n0 > 1.0)) throw ValidationError("material.n0 must be > 1");
  if (!(n2 > 0.0)) throw ValidationError("material.n2 must be > 0");
  if (!(alpha >= 0.0)) throw ValidationError("material.alpha must be >= 0");
  if (!(heat_capacity > 0.0)) throw ValidationError("material.heat_capacity must be > 0");
  if (!(raman_gain >= 0.0)) throw ValidationError("material.raman_gain must be >= 0");
  if (!(brillouin_gain >= 0.0)) throw ValidationError("material.brillouin_gain must be >= 0");
}

MaterialParams glass_defaults() {
  return MaterialParams{1.44, 3e-20, 5e-5, 2e6, 1e-13, 6e-11};
}

void CavityGeometry::validate() const {
  if (!(length > 0.0)) throw ValidationError("geometry.length must be > 0");
  if (!(finesse >= 1.0)) throw ValidationError("geometry.finesse must be >= 1");
  if (!(transverse_area > 0.0)) throw ValidationError("geometry.transverse_area must be > 0");
  if (!(cladding_index >= 1.0)) throw ValidationError("geometry.cladding_index must be >= 1");
  if (dimensionality == Dimensionality::Bandgap3D && !(length_bandgap >= length))
    throw ValidationError("geometry.length_bandgap must be >= geometry.length");
}

double CavityGeometry::effective_length() const {
  return dimensionality == Dimensionality::Bandgap3D ? length_bandgap : length;
}

void PulseSpec::validate() const {
  if (!(lambda_p > 0.0)) throw ValidationError("pulse.lambda_p must be > 0");
  if (!(photon_density > 0.0)) throw ValidationError("pulse.photon_density must be > 0");
  if (!(duration > 0.0)) throw ValidationError("pulse.duration must be > 0");
}

void validate_pairing(const MaterialParams& mat, const CavityGeometry& geom,
                      const PulseSpec& pulse) {
  mat.validate();
  geom.validate();
  pulse.validate();
  if (!(geom.cladding_index < mat.n0))
    throw ValidationError("geometry.cladding_index must be < material.n0");
  const double lambda_0 = 2.0 * mat.n0 * geom.length;
  if (!(pulse.lambda_p < lambda_0))
    throw ValidationError("pump below cutoff: pulse.lambda_p must be < lambda_0 = 2 n0 L");
}

CutoffResult cutoff_frequency(const MaterialParams& mat, const CavityGeometry& geom) {
  if (!(geom.length > 0.0)) throw ValidationError("geometry.length must be > 0");
  CutoffResult r;
  r.lambda_0 = 2.0 * mat.n0 * geom.length;
  r.omega_0 = k_const.c * kPi / (mat.n0 * geom.length);
  return r;
}

double effective_mass(const MaterialParams& mat, const CavityGeometry& geom) {
  if (!(geom.length > 0.0)) throw ValidationError("geometry.length must be > 0");
  return k_const.hbar * kPi * mat.n0 / (geom.length * k_const.c);
}

double dispersion(double m_eff, double omega_0, double k_perp, DispersionMode mode,
                  const MaterialParams& mat, const CavityGeometry& geom) {
  if (!(k_perp >= 0.0)) throw ValidationError("k_perp must be >= 0");
  if (mode == DispersionMode::Quadratic)
    return k_const.hbar * omega_0 +
           k_const.hbar * k_const.hbar * k_perp * k_perp / (2.0 * m_eff);
  const double k_par = kPi / geom.length;
  return (k_const.hbar * k_const.c / mat.n0) * std::hypot(k_par, k_perp);
}

TimeScales time_scales(const MaterialParams& mat, const CavityGeometry& geom) {
  TimeScales t;
  t.tau_cav = geom.effective_length() * geom.finesse * mat.n0 / k_const.c;
  t.tau_abs = mat.alpha > 0.0 ? 1.0 / (mat.alpha * k_const.c)
                              : std::numeric_limits<double>::infinity();
  t.delta_omega = 1.0 / t.tau_cav;
  return t;
}

double intensity_from_density(double rho, double omega, const MaterialParams& mat) {
  if (!(rho > 0.0)) throw ValidationError("rho must be > 0");
  if (!(omega > 0.0)) throw ValidationError("omega must be > 0");
  return rho * k_const.hbar * omega * k_const.c / mat.n0;
}

double density_from_intensity(double intensity, double omega, const MaterialParams& mat) {
  if (!(intensity > 0.0)) throw ValidationError("intensity must be > 0");
  if (!(omega > 0.0)) throw ValidationError("omega must be > 0");
  return intensity * mat.n0 / (k_const.hbar * omega * k_const.c);
}

double peak_power(double rho, double omega, const MaterialParams& mat,
                  const CavityGeometry& geom) {
  return intensity_from_density(rho, omega, mat) * geom.transverse_area;
}

double thermal_density_limit(const MaterialParams& mat, double delta_T, double omega_0) {
  if (!(delta_T > 0.0)) throw ValidationError("delta_T must be > 0");
  return mat.heat_capacity * delta_T / (k_const.hbar * omega_0);
}

DerivedScales derive_scales(const MaterialParams& mat, const CavityGeometry& geom,
                            const PulseSpec& pulse, double delta_T) {
  validate_pairing(mat, geom, pulse);
  DerivedScales d;
  const auto cut = cutoff_frequency(mat, geom);
  d.lambda_0 = cut.lambda_0;
  d.omega_0 = cut.omega_0;
  d.omega_p = 2.0 * kPi * k_const.c / pulse.lambda_p;
  d.m_eff = effective_mass(mat, geom);
  d.m_eff_c2_eV = d.m_eff * k_const.c * k_const.c / k_electron_volt;
  const auto t = time_scales(mat, geom);
  d.tau_cav = t.tau_cav;
  d.tau_abs = t.tau_abs;
  d.delta_omega = t.delta_omega;
  d.rho_l = thermal_density_limit(mat, delta_T, d.omega_0);
  d.lambda_escape = d.lambda_0 / mat.n0;
  return d;
}

}  // namespace photonbec
