#include "photonbec/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "photonbec/constants.hpp"
#include "photonbec/errors.hpp"

namespace photonbec {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void SimConfig::validate() const {
  if (!(max_rel_change > 0.0)) throw ValidationError("sim.max_rel_change must be > 0");
  if (!(t_end > 0.0)) throw ValidationError("sim.t_end must be > 0");
  if (record_every < 1) throw ValidationError("sim.record_every must be >= 1");
  if (!(conservation_tol > 0.0)) throw ValidationError("sim.conservation_tol must be > 0");
  if (!(f_floor > 0.0)) throw ValidationError("sim.f_floor must be > 0");
  if (!(dt_init >= 0.0)) throw ValidationError("sim.dt_init must be >= 0");
  if (!(rate_constant >= 0.0)) throw ValidationError("sim.rate_constant must be >= 0");
  if (!(l1_stop >= 0.0)) throw ValidationError("sim.l1_stop must be >= 0");
  if (!(init_noise >= 0.0)) throw ValidationError("sim.init_noise must be >= 0");
}

BoseFit bose_fit(const SpectralGrid& g, double f_floor) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int n = 0;
  for (int i = 0; i < g.bins(); ++i) {
    if (!(g.f[i] > f_floor)) continue;
    const double x = g.eps[i];
    const double y = std::log1p(1.0 / g.f[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) throw ValidationError("bose_fit: fewer than two bins above the floor");
  const double det = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / det;
  const double intercept = (sy * sxx - sx * sxy) / det;
  double ss_res = 0.0, ss_tot = 0.0;
  for (int i = 0; i < g.bins(); ++i) {
    if (!(g.f[i] > f_floor)) continue;
    const double y = std::log1p(1.0 / g.f[i]);
    const double r = y - (slope * g.eps[i] + intercept);
    ss_res += r * r;
    ss_tot += y * y;
  }
  BoseFit fit;
  fit.T = slope > 0.0 ? 1.0 / (k_const.kB * slope) : kInf;
  fit.kappa = intercept;
  fit.residual = std::sqrt(ss_res / std::max(ss_tot, 1e-300));
  return fit;
}

std::vector<double> predicted_be_occupation(const SpectralGrid& g,
                                            const EquilibriumState& eq) {
  std::vector<double> f(g.bins(), 0.0);
  if (eq.T_eff > 0.0) {
    for (int i = 0; i < g.bins(); ++i)
      f[i] = 1.0 / std::expm1(eq.beta * g.eps[i] + eq.kappa);
  }
  if (eq.rho0 > 0.0) f[0] += eq.rho0 / (g.dos[0] * g.delta_eps);
  return f;
}

Simulator::Simulator(SpectralGrid grid, SimConfig cfg, const MaterialParams& mat,
                     double sigma, std::vector<double> f_reference)
    : grid_(std::move(grid)), cfg_(cfg), f_ref_(std::move(f_reference)) {
  cfg_.validate();
  grid_.validate();
  if (!f_ref_.empty() && static_cast<int>(f_ref_.size()) != grid_.bins())
    throw ValidationError("reference occupation does not match the grid");
  rate_constant_ = cfg_.rate_constant > 0.0
                       ? cfg_.rate_constant
                       : calibrate_rate_constant(grid_, mat, sigma);
  rho0_ = grid_.number_density();
  u0_ = grid_.energy_density();

  // initial dt: aim well under the relative-change cap
  if (cfg_.dt_init > 0.0) {
    dt_ = cfg_.dt_init;
  } else {
    collision_operator(grid_, rate_constant_, k1_);
    const double fmax = *std::max_element(grid_.f.begin(), grid_.f.end());
    const double anchor = 1e-6 * fmax + cfg_.f_floor;
    double rate = 0.0;
    for (int i = 0; i < grid_.bins(); ++i)
      rate = std::max(rate, std::abs(k1_[i]) / (grid_.f[i] + anchor));
    dt_ = rate > 0.0 ? 0.1 * cfg_.max_rel_change / rate : cfg_.t_end * 1e-6;
  }
}

double Simulator::step() {
  const int n = grid_.bins();
  df_.resize(n);
  collision_operator(grid_, rate_constant_, k1_);
  const double fmax = *std::max_element(grid_.f.begin(), grid_.f.end());
  const double anchor = 1e-6 * fmax + cfg_.f_floor;

  double rel = 0.0;
  SpectralGrid work = grid_;
  for (int attempt = 0; attempt < 60; ++attempt) {
    auto advance = [&](const std::vector<double>& k, double frac) {
      for (int i = 0; i < n; ++i) work.f[i] = grid_.f[i] + frac * dt_ * k[i];
    };
    advance(k1_, 0.5);
    collision_operator(work, rate_constant_, k2_);
    advance(k2_, 0.5);
    collision_operator(work, rate_constant_, k3_);
    advance(k3_, 1.0);
    collision_operator(work, rate_constant_, k4_);
    rel = 0.0;
    bool negative = false;
    for (int i = 0; i < n; ++i) {
      df_[i] = dt_ / 6.0 * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
      rel = std::max(rel, std::abs(df_[i]) / (grid_.f[i] + anchor));
      if (grid_.f[i] + df_[i] < -1e-12 * fmax) negative = true;
    }
    if (rel <= cfg_.max_rel_change && !negative) break;
    dt_ *= negative ? 0.5 : 0.7 * cfg_.max_rel_change / rel;
    if (attempt == 59) throw SolverError("step size control failed to settle");
  }

  for (int i = 0; i < n; ++i) {
    grid_.f[i] += df_[i];
    if (grid_.f[i] < 0.0) {
      grid_.f[i] = 0.0;
      ++clamps_;
    }
  }
  const double taken = dt_;
  t_ += taken;
  ++steps_;
  dt_ *= std::min(1.25, std::max(0.3, 0.85 * cfg_.max_rel_change / std::max(rel, 1e-300)));
  audit_conservation();
  return taken;
}

void Simulator::audit_conservation() {
  const double dn = std::abs(grid_.number_density() - rho0_) / rho0_;
  const double du = std::abs(grid_.energy_density() - u0_) / u0_;
  max_drift_number_ = std::max(max_drift_number_, dn);
  max_drift_energy_ = std::max(max_drift_energy_, du);
  if (dn > cfg_.conservation_tol || du > cfg_.conservation_tol) {
    std::ostringstream msg;
    msg << "conservation drift exceeded tolerance at t = " << t_ << " s, step "
        << steps_ << ": number " << dn << ", energy " << du << " (tol "
        << cfg_.conservation_tol << ")";
    throw ConservationError(msg.str());
  }
}

TrajectorySample Simulator::sample() const {
  TrajectorySample s;
  s.t = t_;
  s.rho = grid_.number_density();
  s.u = grid_.energy_density();
  s.S = grid_.entropy_density();
  try {
    const BoseFit fit = bose_fit(grid_, cfg_.f_floor);
    s.T_fit = fit.T;
    s.kappa_fit = fit.kappa;
  } catch (const ValidationError&) {
    s.T_fit = 0.0;
    s.kappa_fit = 0.0;
  }
  s.l1_to_be = f_ref_.empty() ? kInf : grid_.l1_distance(f_ref_);
  return s;
}

SimResult Simulator::evolve() {
  SimResult res;
  res.trajectory.push_back(sample());
  res.time_to_equilibrium = kInf;
  res.stop_reason = StopReason::TimeEnd;

  while (t_ < cfg_.t_end) {
    step();
    if (steps_ % cfg_.record_every == 0 || t_ >= cfg_.t_end) {
      res.trajectory.push_back(sample());
      const auto& traj = res.trajectory;
      const TrajectorySample& last = traj.back();
      if (std::isinf(res.time_to_equilibrium) && last.l1_to_be < 0.05)
        res.time_to_equilibrium = last.t;
      if (!f_ref_.empty() && last.l1_to_be < cfg_.l1_stop) {
        res.stop_reason = StopReason::L1Converged;
        break;
      }
      // stalled: no meaningful L1 progress over the last 10 records
      const size_t m = traj.size();
      if (!f_ref_.empty() && m > 12 &&
          traj[m - 11].l1_to_be - last.l1_to_be < 1e-4 * (1.0 + last.l1_to_be)) {
        res.stop_reason = StopReason::Stalled;
        break;
      }
    }
  }
  if (res.trajectory.back().t < t_) res.trajectory.push_back(sample());
  res.grid = grid_;
  res.steps = steps_;
  res.clamp_events = clamps_;
  res.max_drift_number = max_drift_number_;
  res.max_drift_energy = max_drift_energy_;
  res.rate_constant = rate_constant_;
  return res;
}

}  // namespace photonbec
