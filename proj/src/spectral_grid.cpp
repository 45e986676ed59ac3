#include "photonbec/spectral_grid.hpp"

#include <cmath>

#include "photonbec/errors.hpp"

namespace photonbec {

namespace {
constexpr double kPi = std::numbers::pi;
}

void SpectralGrid::validate() const {
  if (bins() < 16) throw ValidationError("spectral grid needs at least 16 bins");
  if (!(delta_eps > 0.0)) throw ValidationError("delta_eps must be > 0");
  for (double v : f)
    if (!(v >= 0.0)) throw ValidationError("occupation numbers must be >= 0");
}

double SpectralGrid::number_density() const {
  double s = 0.0;
  for (int i = 0; i < bins(); ++i) s += dos[i] * f[i];
  return s * delta_eps;
}

double SpectralGrid::energy_density() const {
  double s = 0.0;
  for (int i = 0; i < bins(); ++i) s += dos[i] * f[i] * eps[i];
  return s * delta_eps;
}

double SpectralGrid::entropy_density() const {
  double s = 0.0;
  for (int i = 0; i < bins(); ++i) {
    const double fi = f[i];
    if (fi > 0.0) s += dos[i] * ((1.0 + fi) * std::log1p(fi) - fi * std::log(fi));
  }
  return s * delta_eps;
}

void SpectralGrid::normalize_to(double rho) {
  const double now = number_density();
  if (!(now > 0.0)) throw ValidationError("cannot normalize an empty spectrum");
  const double scale = rho / now;
  for (double& v : f) v *= scale;
}

void SpectralGrid::fill_gaussian(double rho, double center, double width) {
  if (!(width > 0.0)) throw ValidationError("gaussian width must be > 0");
  for (int i = 0; i < bins(); ++i) {
    const double z = (eps[i] - center) / width;
    f[i] = std::exp(-0.5 * z * z);
  }
  normalize_to(rho);
}

void SpectralGrid::fill_uniform(double rho, double eps_lo, double eps_hi) {
  if (!(eps_hi > eps_lo)) throw ValidationError("uniform range must be nonempty");
  for (int i = 0; i < bins(); ++i)
    f[i] = (eps[i] >= eps_lo && eps[i] <= eps_hi) ? 1.0 : 0.0;
  normalize_to(rho);
}

void SpectralGrid::fill_monochromatic(double rho, double center) {
  int best = 0;
  for (int i = 1; i < bins(); ++i)
    if (std::abs(eps[i] - center) < std::abs(eps[best] - center)) best = i;
  for (double& v : f) v = 0.0;
  f[best] = 1.0;
  normalize_to(rho);
}

void SpectralGrid::fill_bose_einstein(double T, double kappa) {
  if (!(T > 0.0)) throw ValidationError("T must be > 0");
  const double beta = 1.0 / (k_const.kB * T);
  if (!(kappa > -beta * eps[0]))
    throw ValidationError("kappa must keep the chemical potential below the first bin");
  for (int i = 0; i < bins(); ++i) f[i] = 1.0 / std::expm1(beta * eps[i] + kappa);
}

double SpectralGrid::l1_distance(const std::vector<double>& f_ref) const {
  double diff = 0.0;
  for (int i = 0; i < bins(); ++i) diff += dos[i] * std::abs(f[i] - f_ref[i]);
  return diff * delta_eps / number_density();
}

namespace {

SpectralGrid make_base(Dimensionality dim, double eps_max, int n_bins) {
  if (n_bins < 16) throw ValidationError("spectral grid needs at least 16 bins");
  if (!(eps_max > 0.0)) throw ValidationError("eps_max must be > 0");
  SpectralGrid g;
  g.dim = dim;
  g.delta_eps = eps_max / n_bins;
  g.eps.resize(n_bins);
  g.f.assign(n_bins, 0.0);
  g.dos.resize(n_bins);
  for (int i = 0; i < n_bins; ++i) g.eps[i] = (i + 0.5) * g.delta_eps;
  return g;
}

}  // namespace

SpectralGrid make_grid_2d(double m_eff, double L, double eps_max, int n_bins) {
  SpectralGrid g = make_base(Dimensionality::Planar2D, eps_max, n_bins);
  const double dos = m_eff / (kPi * k_const.hbar * k_const.hbar * L);
  for (int i = 0; i < n_bins; ++i) g.dos[i] = dos;
  return g;
}

SpectralGrid make_grid_3d(double m_eff, double eps_max, int n_bins) {
  SpectralGrid g = make_base(Dimensionality::Bandgap3D, eps_max, n_bins);
  const double pref = std::sqrt(2.0) * std::pow(m_eff, 1.5) /
                      (kPi * kPi * std::pow(k_const.hbar, 3.0));
  for (int i = 0; i < n_bins; ++i) g.dos[i] = pref * std::sqrt(g.eps[i]);
  return g;
}

}  // namespace photonbec
