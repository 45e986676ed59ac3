#include "photonbec/feasibility.hpp"

#include <cmath>
#include <limits>

#include "photonbec/errors.hpp"
#include "photonbec/nonlinearity.hpp"

namespace photonbec {

namespace {
constexpr double kPi = std::numbers::pi;
}

double mode_density_2d(const CavityGeometry& geom, double lambda_0, double lambda_p) {
  if (!(lambda_p < lambda_0)) throw ValidationError("pump below cutoff");
  const double ratio = lambda_0 / lambda_p;
  return kPi / (geom.length * lambda_0 * lambda_0) * (ratio * ratio - 1.0);
}

double mode_density_3d(double m_eff, double omega_0, double omega_p) {
  if (!(omega_p > omega_0)) throw ValidationError("pump below cutoff");
  const double q2 = 2.0 * m_eff * (omega_p - omega_0) / k_const.hbar;
  // 2/(2pi)^3 * 4pi/3 * q^3 = q^3 / (3 pi^2)
  return q2 * std::sqrt(q2) / (3.0 * kPi * kPi);
}

double bose_enhancement(double rho, double mode_density) {
  if (!(mode_density > 0.0)) throw ValidationError("mode_density must be > 0");
  return rho / mode_density;
}

double relaxation_time(double rho, double F, const MaterialParams& mat, double sigma) {
  if (!(rho > 0.0)) throw ValidationError("rho must be > 0");
  if (!(sigma > 0.0)) throw ValidationError("sigma must be > 0");
  if (!(F >= 0.0)) throw ValidationError("F must be >= 0");
  return mat.n0 / (rho * k_const.c * sigma * (1.0 + F));
}

AbsorbedFraction absorbed_fraction(double rho, double tau_cav, double tau_abs) {
  if (!(tau_cav > 0.0) || !(tau_abs > 0.0))
    throw ValidationError("time scales must be > 0");
  AbsorbedFraction r;
  const double ratio = tau_cav / tau_abs;  // 0 when tau_abs = inf
  r.absorbed = rho * -std::expm1(-ratio);
  r.linearized = rho * ratio;
  r.rel_difference = r.absorbed > 0.0
                         ? std::abs(r.linearized - r.absorbed) / r.absorbed
                         : 0.0;
  return r;
}

namespace {

FeasibilityReport assemble_report(const MaterialParams& mat, const CavityGeometry& geom,
                                  double rho_min, double rho_max, double mode_density,
                                  double sigma, double omega_0,
                                  const FeasibilityOptions& opts) {
  FeasibilityReport rep;
  rep.rho_min = rho_min;
  rep.rho_max = rho_max;
  rep.mode_density = mode_density;
  rep.margin = rho_max / rho_min;
  rep.feasible = rho_max > 0.0 && rep.margin >= opts.margin_threshold;
  if (!(rho_max > 0.0)) rep.notes.push_back("degenerate window: rho_max <= 0");

  rep.rho_ref = opts.reference_density > 0.0 ? opts.reference_density : rho_min;
  rep.F_degeneracy = bose_enhancement(rep.rho_ref, mode_density);
  rep.tau_relax = relaxation_time(rep.rho_ref, rep.F_degeneracy, mat, sigma);
  rep.intensity_ref = intensity_from_density(rep.rho_ref, omega_0, mat);
  rep.circulating_power = rep.intensity_ref * geom.transverse_area;
  // input power matched to filling the cavity within tau_cav: one finesse
  // factor below the circulating power
  rep.input_peak_power = rep.circulating_power / geom.finesse;

  const auto rates = parasitic_rates(rep.intensity_ref, mat);
  const double collision_rate = 1.0 / rep.tau_relax;
  if (rates.raman > collision_rate)
    rep.notes.push_back("Raman rate exceeds the collision rate at rho_ref");
  if (rates.brillouin > collision_rate)
    rep.notes.push_back("Brillouin rate exceeds the collision rate at rho_ref");
  return rep;
}

}  // namespace

FeasibilityReport density_window_2d(const MaterialParams& mat, const CavityGeometry& geom,
                                    double lambda_0, double lambda_p, double a,
                                    double rho_l, const FeasibilityOptions& opts) {
  if (!(lambda_p < lambda_0)) throw ValidationError("pump below cutoff");
  if (!(a > 0.0)) throw ValidationError("scattering length must be > 0");
  const double ratio = lambda_0 / lambda_p;
  const double L = geom.length;
  const double rho_min = std::sqrt(ratio * ratio - 1.0) /
                         (2.0 * L * lambda_0 * a * std::sqrt(geom.finesse));
  const double rho_max = mat.alpha > 0.0
                             ? rho_l / (mat.n0 * mat.alpha * L * geom.finesse)
                             : std::numeric_limits<double>::infinity();
  const double omega_0 = 2.0 * kPi * k_const.c / lambda_0;
  const double sigma = 4.0 * kPi * a * a;
  return assemble_report(mat, geom, rho_min, rho_max,
                         mode_density_2d(geom, lambda_0, lambda_p), sigma, omega_0,
                         opts);
}

FeasibilityReport density_window_3d(const MaterialParams& mat, const CavityGeometry& geom,
                                    double lambda_0, double lambda_p, double a,
                                    double rho_l, const FeasibilityOptions& opts) {
  if (geom.dimensionality != Dimensionality::Bandgap3D)
    throw ValidationError("density_window_3d requires a Bandgap3D geometry");
  if (!(lambda_p < lambda_0)) throw ValidationError("pump below cutoff");
  if (!(a > 0.0)) throw ValidationError("scattering length must be > 0");
  const double ratio = lambda_0 / lambda_p;
  const double Lt = geom.length_bandgap;
  const double rho_min = std::pow(ratio - 1.0, 0.75) /
                         (std::pow(lambda_0, 1.5) * a * std::sqrt(geom.finesse * Lt));
  const double rho_max = mat.alpha > 0.0
                             ? rho_l / (mat.n0 * mat.alpha * Lt * geom.finesse)
                             : std::numeric_limits<double>::infinity();
  const double omega_0 = 2.0 * kPi * k_const.c / lambda_0;
  const double omega_p = 2.0 * kPi * k_const.c / lambda_p;
  const double m_eff = k_const.hbar * kPi * mat.n0 / (geom.length * k_const.c);
  const double sigma = 4.0 * kPi * a * a;
  return assemble_report(mat, geom, rho_min, rho_max,
                         mode_density_3d(m_eff, omega_0, omega_p), sigma, omega_0,
                         opts);
}

}  // namespace photonbec
