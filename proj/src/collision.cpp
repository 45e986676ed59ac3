#include "photonbec/collision.hpp"

#include <algorithm>
#include <cmath>

#include "photonbec/errors.hpp"

namespace photonbec {

namespace {

// Per-bin sum over energy-conserving quadruplets (i, j | k, l), j = k+l-i.
// sqrt_eps is null for the constant 2D kernel.
double quadruplet_sum(int i, int n, const double* f, const double* opf,
                      const double* sqrt_eps) {
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const int s = i + j;
    const double a = f[i] * f[j];
    const double b = opf[i] * opf[j];
    const int k_lo = std::max(0, s - n + 1);
    const int k_hi = std::min(n - 1, s);
    const int ij_min = std::min(i, j);
    if (sqrt_eps != nullptr) {
      for (int k = k_lo; k <= k_hi; ++k) {
        const int l = s - k;
        const double w = sqrt_eps[std::min(ij_min, std::min(k, l))];
        acc += w * (f[k] * f[l] * b - a * opf[k] * opf[l]);
      }
    } else {
      for (int k = k_lo; k <= k_hi; ++k) {
        const int l = s - k;
        acc += f[k] * f[l] * b - a * opf[k] * opf[l];
      }
    }
  }
  return acc;
}

struct Kernel {
  std::vector<double> opf;       // 1 + f
  std::vector<double> sqrt_eps;  // 3D only
  const double* sqrt_ptr = nullptr;
  double scale = 0.0;  // K * dE^2

  Kernel(const SpectralGrid& g, double rate_constant) {
    const int n = g.bins();
    opf.resize(n);
    for (int i = 0; i < n; ++i) opf[i] = 1.0 + g.f[i];
    if (g.dim == Dimensionality::Bandgap3D) {
      sqrt_eps.resize(n);
      for (int i = 0; i < n; ++i) sqrt_eps[i] = std::sqrt(g.eps[i]);
      sqrt_ptr = sqrt_eps.data();
    }
    scale = rate_constant * g.delta_eps * g.delta_eps;
  }

  double bin(const SpectralGrid& g, int i) const {
    const double s = quadruplet_sum(i, g.bins(), g.f.data(), opf.data(), sqrt_ptr);
    const double w_i = sqrt_ptr != nullptr ? sqrt_ptr[i] : 1.0;
    return scale * s / w_i;
  }
};

}  // namespace

void collision_operator_serial(const SpectralGrid& g, double rate_constant,
                               std::vector<double>& dfdt) {
  const Kernel ker(g, rate_constant);
  dfdt.resize(g.bins());
  for (int i = 0; i < g.bins(); ++i) dfdt[i] = ker.bin(g, i);
}

void collision_operator(const SpectralGrid& g, double rate_constant,
                        std::vector<double>& dfdt) {
  const Kernel ker(g, rate_constant);
  dfdt.resize(g.bins());
  const int n = g.bins();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) dfdt[i] = ker.bin(g, i);
}

double classical_collision_rate(const SpectralGrid& g) {
  const int n = g.bins();
  const double de2 = g.delta_eps * g.delta_eps;
  std::vector<double> sqrt_eps;
  const double* se = nullptr;
  if (g.dim == Dimensionality::Bandgap3D) {
    sqrt_eps.resize(n);
    for (int i = 0; i < n; ++i) sqrt_eps[i] = std::sqrt(g.eps[i]);
    se = sqrt_eps.data();
  }
  // out-scattering attempts per particle in bin i, stimulation dropped:
  // r_i = dE^2 / w_i * sum_{k,l} W f_j
  double weighted = 0.0, total = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : weighted, total)
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    for (int j = 0; j < n; ++j) {
      const int s = i + j;
      const int k_lo = std::max(0, s - n + 1);
      const int k_hi = std::min(n - 1, s);
      const int ij_min = std::min(i, j);
      double chan = 0.0;
      if (se != nullptr) {
        for (int k = k_lo; k <= k_hi; ++k)
          chan += se[std::min(ij_min, std::min(k, s - k))];
      } else {
        chan = k_hi - k_lo + 1;
      }
      r += g.f[j] * chan;
    }
    r *= de2 / (se != nullptr ? se[i] : 1.0);
    const double weight = g.dos[i] * g.f[i];
    weighted += weight * r;
    total += weight;
  }
  if (!(total > 0.0)) throw ValidationError("classical rate of an empty spectrum");
  return weighted / total;
}

double calibrate_rate_constant(const SpectralGrid& g, const MaterialParams& mat,
                               double sigma) {
  const double rho = g.number_density();
  const double target = rho * (k_const.c / mat.n0) * sigma;  // Eq. rate at F = 0
  const double model = classical_collision_rate(g);
  if (!(model > 0.0)) throw ValidationError("cannot calibrate on an empty spectrum");
  return target / model;
}

}  // namespace photonbec
