#include "photonbec/equilibrium.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "photonbec/bose_functions.hpp"
#include "photonbec/constants.hpp"
#include "photonbec/errors.hpp"

namespace photonbec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Generic expanding-bracket bisection for a monotone function.
// Finds x with |fn(x) - target| <= tol_rel * scale, fn increasing in x.
// x is searched in log space (x > 0 assumed).
template <typename F>
double bisect_log(F fn, double target, double x_guess, double tol_rel, double scale,
                  int max_iter, const char* what) {
  double lo = x_guess, hi = x_guess;
  double flo = fn(lo), fhi = flo;
  int iter = 0;
  while (flo > target) {
    lo /= 4.0;
    flo = fn(lo);
    if (++iter > 600) throw SolverError(std::string(what) + ": bracket expansion failed (low)");
  }
  iter = 0;
  while (fhi < target) {
    hi *= 4.0;
    fhi = fn(hi);
    if (++iter > 600) throw SolverError(std::string(what) + ": bracket expansion failed (high)");
  }
  double x = 0.5 * (lo + hi), fx = 0.0;
  for (int i = 0; i < max_iter; ++i) {
    x = std::sqrt(lo * hi);  // geometric midpoint
    fx = fn(x);
    if (std::abs(fx - target) <= tol_rel * scale) return x;
    (fx < target ? lo : hi) = x;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) return x;
  }
  std::ostringstream msg;
  msg << what << ": no convergence after " << max_iter
      << " iterations, residual " << (fx - target) / scale;
  throw SolverError(msg.str());
}

// Inner solve: u = -ln kappa from a monotone-increasing occupancy function
// occ(u); occ grows without bound for the 2D g1 term, saturates for k > 1.
template <typename F>
double solve_u(F occ, double target, int max_iter, const char* what) {
  double lo = -30.0, hi = 30.0;
  int iter = 0;
  while (occ(lo) > target) {
    lo *= 2.0;
    if (++iter > 200) throw SolverError(std::string(what) + ": kappa bracket failed (low)");
  }
  iter = 0;
  while (occ(hi) < target) {
    hi *= 2.0;
    if (hi > 1e12) throw SolverError(std::string(what) + ": kappa bracket failed (high)");
    if (++iter > 200) throw SolverError(std::string(what) + ": kappa bracket failed (high)");
  }
  double u = 0.5 * (lo + hi);
  for (int i = 0; i < max_iter; ++i) {
    u = 0.5 * (lo + hi);
    const double f = occ(u);
    if (std::abs(f - target) <= 1e-13 * target) break;
    (f < target ? lo : hi) = u;
    if (hi - lo <= 1e-15 * (1.0 + std::abs(hi))) break;
  }
  return u;
}

EquilibriumState zero_temperature_state(const BalanceInputs& in, bool two_dimensional) {
  EquilibriumState s{};
  s.T_eff = 0.0;
  s.beta = kInf;
  s.kappa = 0.0;
  s.log_kappa = -kInf;
  s.mu = k_const.hbar * in.omega_0;
  s.rho0 = two_dimensional ? 0.0 : in.rho;
  s.lambda_B = kInf;
  s.condensed = !two_dimensional;
  s.mu_at_cutoff = true;
  s.residual_number = 0.0;
  s.residual_energy = 0.0;
  s.correction_scale = 0.0;
  return s;
}

}  // namespace

void BalanceInputs::validate(bool two_dimensional) const {
  if (!(rho > 0.0)) throw ValidationError("balance: rho must be > 0");
  if (!(m_eff > 0.0)) throw ValidationError("balance: m_eff must be > 0");
  if (!(omega_0 > 0.0)) throw ValidationError("balance: omega_0 must be > 0");
  if (two_dimensional && !(L > 0.0)) throw ValidationError("balance: L must be > 0 in 2D");
  if (excess_energy() < 0.0)
    throw ValidationError("balance: omega_p must be >= omega_0 (pump above cutoff)");
}

double BalanceInputs::excess_energy() const {
  const double mean = mean_energy_override > 0.0 ? mean_energy_override
                                                 : k_const.hbar * omega_p;
  return mean - k_const.hbar * omega_0;
}

EquilibriumState solve_equilibrium_2d(const BalanceInputs& in, const SolverOptions& opts) {
  in.validate(true);
  const double delta = in.excess_energy();
  if (delta == 0.0) return zero_temperature_state(in, true);

  const double hw0 = k_const.hbar * in.omega_0;
  // rho * pi hbar^2 beta L / m = g1 + g2/x, with x = beta hbar omega0
  const double A = in.rho * kPi * k_const.hbar * k_const.hbar * in.L / in.m_eff;

  // inner: u = -ln kappa at fixed beta
  auto inner_u = [&](double beta) {
    const double x = beta * hw0;
    auto occ = [&](double u) {
      return bose_g_log(1.0, -u) + bose_g_log(2.0, -u) / x;
    };
    return solve_u(occ, A * beta, opts.max_iterations, "equilibrium_2d inner");
  };

  // outer: mean excess energy per photon at fixed beta, decreasing in beta
  auto energy_per_photon = [&](double beta) {
    const double u = inner_u(beta);
    const double x = beta * hw0;
    const double g2 = bose_g_log(2.0, -u);
    const double g3 = bose_g_log(3.0, -u);
    return (g2 + 2.0 * g3 / x) / (beta * (A * beta));
  };

  const double beta_guess = 1.0 / delta;  // classical 2D: <u> ~ kB T
  // bisect on beta with energy decreasing: flip sign to reuse the
  // increasing-function helper via 1/beta
  auto increasing = [&](double inv_beta) { return energy_per_photon(1.0 / inv_beta); };
  const double inv_beta = bisect_log(increasing, delta, 1.0 / beta_guess,
                                     opts.tolerance, delta, opts.max_iterations,
                                     "equilibrium_2d outer");
  const double beta = 1.0 / inv_beta;
  const double u = inner_u(beta);
  const double x = beta * hw0;

  EquilibriumState s{};
  s.beta = beta;
  s.T_eff = 1.0 / (k_const.kB * beta);
  s.log_kappa = -u;
  s.kappa = std::exp(-u);  // underflows to 0 for u > ~745
  s.mu = hw0 - s.kappa / beta;
  s.rho0 = 0.0;
  s.condensed = false;
  s.lambda_B = thermal_wavelength(s.T_eff, in.m_eff);
  s.mu_at_cutoff = s.kappa < opts.kappa_floor;
  const double g1 = bose_g_log(1.0, -u);
  const double g2 = bose_g_log(2.0, -u);
  const double g3 = bose_g_log(3.0, -u);
  s.correction_scale = std::max(g2 / (x * g1), 2.0 * g3 / (x * g2));
  const auto res = balance_residuals_2d(s, in);
  s.residual_number = res.number;
  s.residual_energy = res.energy;
  return s;
}

Residuals balance_residuals_2d(const EquilibriumState& s, const BalanceInputs& in) {
  const double delta = in.excess_energy();
  const double hw0 = k_const.hbar * in.omega_0;
  if (s.T_eff == 0.0) return Residuals{0.0, delta == 0.0 ? 0.0 : 1.0};
  const double x = s.beta * hw0;
  const double g1 = bose_g_log(1.0, s.log_kappa);
  const double g2 = bose_g_log(2.0, s.log_kappa);
  const double g3 = bose_g_log(3.0, s.log_kappa);
  const double pref = 2.0 / (s.lambda_B * s.lambda_B * in.L);
  const double num = pref * (g1 + g2 / x);
  const double en = (pref / s.beta) * (g2 + 2.0 * g3 / x);
  return Residuals{std::abs(num - in.rho) / in.rho,
                   std::abs(en - delta * in.rho) / (delta * in.rho)};
}

double critical_temperature_3d(double rho, double m_eff) {
  if (!(rho > 0.0)) throw ValidationError("rho must be > 0");
  if (!(m_eff > 0.0)) throw ValidationError("m_eff must be > 0");
  const double z32 = bose_zeta(1.5);
  return k_const.h * k_const.h / (2.0 * kPi * m_eff * k_const.kB) *
         std::pow(rho / (2.0 * z32), 2.0 / 3.0);
}

EquilibriumState solve_equilibrium_3d(const BalanceInputs& in, const SolverOptions& opts) {
  in.validate(false);
  const double delta = in.excess_energy();
  if (delta == 0.0) return zero_temperature_state(in, false);

  const double z32 = bose_zeta(1.5);
  const double z52 = bose_zeta(2.5);
  const double two_pi_m_kB = 2.0 * kPi * in.m_eff * k_const.kB;

  auto lambda_B3 = [&](double T) {
    const double lb = k_const.h / std::sqrt(two_pi_m_kB * T);
    return lb * lb * lb;
  };

  // condensed branch: energy balance alone fixes T (T^{5/2} law)
  const double T_cond = std::pow(
      delta * in.rho * k_const.h * k_const.h * k_const.h /
          (3.0 * z52 * k_const.kB * std::pow(two_pi_m_kB, 1.5)),
      0.4);
  const double rho_thermal = 2.0 * z32 / lambda_B3(T_cond);

  EquilibriumState s{};
  if (rho_thermal <= in.rho) {
    s.T_eff = T_cond;
    s.beta = 1.0 / (k_const.kB * T_cond);
    s.kappa = 0.0;
    s.log_kappa = -kInf;
    s.mu = k_const.hbar * in.omega_0;
    s.rho0 = in.rho - rho_thermal;
    s.condensed = s.rho0 > 0.0;
    s.mu_at_cutoff = true;
  } else {
    // uncondensed: T in (T_c, inf), kappa > 0 from the number balance
    const double t_c = critical_temperature_3d(in.rho, in.m_eff);
    auto inner_u = [&](double T) {
      const double target = in.rho * lambda_B3(T) / 2.0;  // = g_{3/2}(kappa)
      auto occ = [&](double u) { return bose_g_log(1.5, -u); };
      return solve_u(occ, target, opts.max_iterations, "equilibrium_3d inner");
    };
    auto energy_density = [&](double T) {
      const double u = inner_u(T);
      return 3.0 * bose_g_log(2.5, -u) * k_const.kB * T / lambda_B3(T);
    };
    const double T = bisect_log(energy_density, delta * in.rho,
                                std::max(T_cond, t_c * (1.0 + 1e-9)), opts.tolerance,
                                delta * in.rho, opts.max_iterations,
                                "equilibrium_3d outer");
    const double u = inner_u(T);
    s.T_eff = T;
    s.beta = 1.0 / (k_const.kB * T);
    s.log_kappa = -u;
    s.kappa = std::exp(-u);
    s.mu = k_const.hbar * in.omega_0 - s.kappa / s.beta;
    s.rho0 = 0.0;
    s.condensed = false;
    s.mu_at_cutoff = s.kappa < opts.kappa_floor;
  }
  s.lambda_B = thermal_wavelength(s.T_eff, in.m_eff);
  s.correction_scale = 0.0;
  const auto res = balance_residuals_3d(s, in);
  s.residual_number = res.number;
  s.residual_energy = res.energy;
  return s;
}

Residuals balance_residuals_3d(const EquilibriumState& s, const BalanceInputs& in) {
  const double delta = in.excess_energy();
  if (s.T_eff == 0.0)
    return Residuals{std::abs(s.rho0 - in.rho) / in.rho, delta == 0.0 ? 0.0 : 1.0};
  const double lb3 = s.lambda_B * s.lambda_B * s.lambda_B;
  const double num = s.rho0 + 2.0 * bose_g_log(1.5, s.log_kappa) / lb3;
  const double en = 3.0 * bose_g_log(2.5, s.log_kappa) * k_const.kB * s.T_eff / lb3;
  return Residuals{std::abs(num - in.rho) / in.rho,
                   std::abs(en - delta * in.rho) / (delta * in.rho)};
}

}  // namespace photonbec
