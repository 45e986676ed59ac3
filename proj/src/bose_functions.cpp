#include "photonbec/bose_functions.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "photonbec/constants.hpp"
#include "photonbec/errors.hpp"

namespace photonbec {

namespace {

// 16-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 8> kGlNode = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
constexpr std::array<double, 8> kGlWeight = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};

// integrand of the series tail integral after x = N e^u:
// e^{-kappa N e^u} (N e^u)^{1-k}
double tail_integrand(double u, double k, double kappa, double n_start) {
  const double x = n_start * std::exp(u);
  return std::exp(-kappa * x) * std::pow(x, 1.0 - k);
}

// integral_N^inf e^{-kappa x} x^{-k} dx
double tail_integral(double k, double kappa, double n_start) {
  if (kappa == 0.0) return std::pow(n_start, 1.0 - k) / (k - 1.0);
  // log substitution flattens the 1/x^k decay; cut where kappa*x = 60
  const double u_hi = std::log1p(60.0 / (kappa * n_start));
  const int panels = static_cast<int>(u_hi / 0.25) + 1;
  const double width = u_hi / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * width;
    const double half = 0.5 * width;
    double acc = 0.0;
    for (int i = 0; i < 8; ++i) {
      acc += kGlWeight[i] * (tail_integrand(mid + half * kGlNode[i], k, kappa, n_start) +
                             tail_integrand(mid - half * kGlNode[i], k, kappa, n_start));
    }
    total += acc * half;
  }
  return total;
}

// d^n/dx^n [e^{-kappa x} x^{-k}] at x, for n = 0, 1, 3, 5, via the
// coefficient recurrence c'[m] = -kappa c[m] - (k+m-1) c[m-1].
void tail_derivatives(double k, double kappa, double x, double& f0, double& f1,
                      double& f3, double& f5) {
  std::array<double, 7> c{};  // coefficients of x^{-k-m}
  c[0] = 1.0;
  const double expf = std::exp(-kappa * x);
  auto eval = [&](int order) {
    double s = 0.0;
    double xp = std::pow(x, -k);
    for (int m = 0; m <= order; ++m) {
      s += c[m] * xp;
      xp /= x;
    }
    return expf * s;
  };
  f0 = eval(0);
  for (int n = 0; n < 5; ++n) {
    std::array<double, 7> next{};
    for (int m = 0; m <= n + 1; ++m) {
      double v = -kappa * (m <= n ? c[m] : 0.0);
      if (m >= 1) v -= (k + m - 1) * c[m - 1];
      next[m] = v;
    }
    c = next;
    if (n == 0) f1 = eval(1);
    if (n == 2) f3 = eval(3);
    if (n == 4) f5 = eval(5);
  }
}

// direct sum for geometrically fast convergence (kappa not small)
double sum_direct(double k, double kappa) {
  double sum = 0.0, comp = 0.0;
  for (int j = 1; j <= 100000; ++j) {
    const double term = std::exp(-kappa * j) / std::pow(static_cast<double>(j), k);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (term < 1e-18 * (1.0 + sum)) break;
  }
  return sum;
}

// partial sum to j < n_start, then Euler-Maclaurin for the remainder
double sum_euler_maclaurin(double k, double kappa) {
  constexpr int n_start = 128;
  double sum = 0.0, comp = 0.0;
  for (int j = 1; j < n_start; ++j) {
    const double term = std::exp(-kappa * j) / std::pow(static_cast<double>(j), k);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  double f0, f1, f3, f5;
  tail_derivatives(k, kappa, n_start, f0, f1, f3, f5);
  const double tail = tail_integral(k, kappa, n_start) + 0.5 * f0 - f1 / 12.0 +
                      f3 / 720.0 - f5 / 30240.0;
  return sum + tail;
}

}  // namespace

double bose_g(double k, double kappa) {
  if (std::isnan(kappa) || kappa < 0.0)
    throw ValidationError("bose_g: kappa must be >= 0");
  if (kappa == 0.0 && k <= 1.0)
    throw ValidationError("bose_g: series diverges for k <= 1 at kappa = 0");
  if (k == 1.0) return -std::log(-std::expm1(-kappa));
  if (kappa >= 0.25) return sum_direct(k, kappa);
  return sum_euler_maclaurin(k, kappa);
}

double bose_g_log(double k, double log_kappa) {
  if (std::isnan(log_kappa)) throw ValidationError("bose_g_log: log_kappa is NaN");
  if (log_kappa >= -600.0) return bose_g(k, std::exp(log_kappa));
  if (k == 1.0) {
    // g1 = -ln kappa + kappa/2 - ...; corrections below 1e-260 here
    return -log_kappa + 0.5 * std::exp(log_kappa);
  }
  if (k > 1.0) return bose_g(k, 0.0);
  throw ValidationError("bose_g_log: divergent limit for k < 1 as kappa -> 0");
}

double bose_zeta(double k) {
  if (!(k > 1.0)) throw ValidationError("bose_zeta: requires k > 1");
  return bose_g(k, 0.0);
}

double thermal_wavelength(double T, double m_eff) {
  if (!(T > 0.0)) throw ValidationError("thermal_wavelength: T must be > 0");
  if (!(m_eff > 0.0)) throw ValidationError("thermal_wavelength: m_eff must be > 0");
  return k_const.h / std::sqrt(2.0 * std::numbers::pi * m_eff * k_const.kB * T);
}

}  // namespace photonbec
