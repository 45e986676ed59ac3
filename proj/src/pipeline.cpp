#include "photonbec/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "photonbec/errors.hpp"

namespace photonbec {

namespace {

bool is_2d(const RunConfig& cfg) {
  return cfg.geometry.dimensionality == Dimensionality::Planar2D;
}

BalanceInputs balance_inputs(const RunConfig& cfg, const DerivedScales& d) {
  BalanceInputs in;
  in.rho = cfg.pulse.photon_density;
  in.omega_p = d.omega_p;
  in.omega_0 = d.omega_0;
  in.m_eff = d.m_eff;
  in.L = cfg.geometry.length;
  return in;
}

}  // namespace

Report derive_report(const RunConfig& cfg) {
  cfg.validate();
  const DerivedScales d = derive_scales(cfg.material, cfg.geometry, cfg.pulse, cfg.delta_T);
  const InteractionParams ip = interaction_params(cfg.material, d.lambda_0, d.m_eff);
  Report r;
  r.title = "derived scales";
  r.add("lambda_0", d.lambda_0);
  r.add("omega_0", d.omega_0);
  r.add("omega_p", d.omega_p);
  r.add("m_eff", d.m_eff);
  r.add("m_eff_c2_eV", d.m_eff_c2_eV);
  r.add("tau_cav", d.tau_cav);
  r.add("tau_abs", d.tau_abs);
  r.add("rho_l", d.rho_l);
  r.add("delta_omega", d.delta_omega);
  r.add("lambda_escape", d.lambda_escape);
  r.add("scattering_length", ip.a);
  r.add("cross_section", ip.sigma);
  r.add("chi3", ip.chi3);
  r.add("V_eff", ip.V_eff);
  const double intensity = intensity_from_density(cfg.pulse.photon_density, d.omega_0, cfg.material);
  r.add("pulse_intensity", intensity);
  r.add("pulse_peak_power", intensity * cfg.geometry.transverse_area);
  const auto rates = parasitic_rates(intensity, cfg.material);
  r.add("raman_rate", rates.raman);
  r.add("brillouin_rate", rates.brillouin);
  return r;
}

FeasibilityReport compute_feasibility(const RunConfig& cfg) {
  cfg.validate();
  const DerivedScales d = derive_scales(cfg.material, cfg.geometry, cfg.pulse, cfg.delta_T);
  const double a = scattering_length(cfg.material, d.lambda_0);
  if (is_2d(cfg))
    return density_window_2d(cfg.material, cfg.geometry, d.lambda_0, cfg.pulse.lambda_p, a,
                             d.rho_l, cfg.feasibility);
  return density_window_3d(cfg.material, cfg.geometry, d.lambda_0, cfg.pulse.lambda_p, a,
                           d.rho_l, cfg.feasibility);
}

Report feasibility_report(const RunConfig& cfg) {
  const FeasibilityReport f = compute_feasibility(cfg);
  Report r;
  r.title = "density feasibility window";
  r.add("dimensionality", is_2d(cfg) ? "planar2d" : "bandgap3d");
  r.add("rho_min", f.rho_min);
  r.add("rho_max", f.rho_max);
  r.add("margin", f.margin);
  r.add("feasible", f.feasible);
  r.add("mode_density", f.mode_density);
  r.add("rho_ref", f.rho_ref);
  r.add("F_degeneracy", f.F_degeneracy);
  r.add("tau_relax", f.tau_relax);
  r.add("intensity_ref", f.intensity_ref);
  r.add("circulating_power", f.circulating_power);
  r.add("input_peak_power", f.input_peak_power);
  std::string notes;
  for (const auto& n : f.notes) {
    if (!notes.empty()) notes += "; ";
    notes += n;
  }
  r.add("notes", notes);
  return r;
}

EquilibriumState compute_equilibrium(const RunConfig& cfg) {
  cfg.validate();
  const DerivedScales d = derive_scales(cfg.material, cfg.geometry, cfg.pulse, cfg.delta_T);
  const BalanceInputs in = balance_inputs(cfg, d);
  return is_2d(cfg) ? solve_equilibrium_2d(in, cfg.solver)
                    : solve_equilibrium_3d(in, cfg.solver);
}

Report equilibrium_report(const RunConfig& cfg) {
  const EquilibriumState s = compute_equilibrium(cfg);
  const DerivedScales d = derive_scales(cfg.material, cfg.geometry, cfg.pulse, cfg.delta_T);
  Report r;
  r.title = "thermal equilibrium of the photon gas";
  r.add("dimensionality", is_2d(cfg) ? "planar2d" : "bandgap3d");
  r.add("T_eff", s.T_eff);
  r.add("beta", s.beta);
  r.add("kappa", s.kappa);
  r.add("log_kappa", s.log_kappa);
  r.add("mu", s.mu);
  r.add("mu_at_cutoff", s.mu_at_cutoff);
  r.add("rho0", s.rho0);
  r.add("condensate_fraction", s.rho0 / cfg.pulse.photon_density);
  r.add("condensed", s.condensed);
  r.add("lambda_B", s.lambda_B);
  r.add("residual_number", s.residual_number);
  r.add("residual_energy", s.residual_energy);
  r.add("correction_scale", s.correction_scale);
  if (!is_2d(cfg))
    r.add("T_c", critical_temperature_3d(cfg.pulse.photon_density, d.m_eff));
  r.add("note", s.mu_at_cutoff ? "mu -> hbar*omega0" : "");
  return r;
}

SimSetup prepare_simulation(const RunConfig& cfg, uint64_t seed) {
  cfg.validate();
  const DerivedScales d = derive_scales(cfg.material, cfg.geometry, cfg.pulse, cfg.delta_T);
  SimSetup setup;
  setup.interaction = interaction_params(cfg.material, d.lambda_0, d.m_eff);

  const double eps_p = k_const.hbar * (d.omega_p - d.omega_0);
  if (!(eps_p > 0.0)) throw ValidationError("simulate: pump must lie above the cutoff");

  // window: contain the predicted thermal cloud and resolve the pump line
  const BalanceInputs in = balance_inputs(cfg, d);
  EquilibriumState predicted = is_2d(cfg) ? solve_equilibrium_2d(in, cfg.solver)
                                          : solve_equilibrium_3d(in, cfg.solver);
  double eps_max = cfg.sim_eps_max;
  if (eps_max <= 0.0)
    eps_max = std::max(16.0 * k_const.kB * predicted.T_eff, 4.0 * eps_p);

  SpectralGrid grid = is_2d(cfg)
                          ? make_grid_2d(d.m_eff, cfg.geometry.length, eps_max, cfg.sim_bins)
                          : make_grid_3d(d.m_eff, eps_max, cfg.sim_bins);

  const double rho = cfg.pulse.photon_density;
  const double center = cfg.sim_init_center > 0.0 ? cfg.sim_init_center : eps_p;
  if (cfg.sim_init_shape == "gaussian") {
    const double width =
        cfg.sim_init_width > 0.0 ? cfg.sim_init_width : 2.5 * grid.delta_eps;
    grid.fill_gaussian(rho, center, width);
  } else if (cfg.sim_init_shape == "uniform") {
    const double lo = cfg.sim_init_lo > 0.0 ? cfg.sim_init_lo : 0.5 * center;
    const double hi = cfg.sim_init_hi > 0.0 ? cfg.sim_init_hi : 1.5 * center;
    grid.fill_uniform(rho, lo, hi);
  } else {
    grid.fill_monochromatic(rho, center);
  }

  if (cfg.sim.init_noise > 0.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, cfg.sim.init_noise);
    for (double& v : grid.f) v *= std::max(0.0, 1.0 + gauss(rng));
    grid.normalize_to(rho);
  }

  // the reference equilibrium matches the realized grid moments
  const double rho_g = grid.number_density();
  const double u_g = grid.energy_density();
  BalanceInputs in_grid = in;
  in_grid.rho = rho_g;
  in_grid.mean_energy_override = k_const.hbar * d.omega_0 + u_g / rho_g;
  setup.predicted = is_2d(cfg) ? solve_equilibrium_2d(in_grid, cfg.solver)
                               : solve_equilibrium_3d(in_grid, cfg.solver);
  setup.f_reference = predicted_be_occupation(grid, setup.predicted);

  // kinetic time scale at the realized density
  const double mode_density =
      is_2d(cfg) ? mode_density_2d(cfg.geometry, d.lambda_0, cfg.pulse.lambda_p)
                 : mode_density_3d(d.m_eff, d.omega_0, d.omega_p);
  const double F = bose_enhancement(rho_g, mode_density);
  setup.tau_relax = relaxation_time(rho_g, F, cfg.material, setup.interaction.sigma);

  setup.sim = cfg.sim;
  if (setup.sim.t_end <= 0.0) setup.sim.t_end = 30.0 * setup.tau_relax;
  setup.grid = std::move(grid);
  return setup;
}

SimulateOutput run_simulation(const RunConfig& cfg, uint64_t seed) {
  SimSetup setup = prepare_simulation(cfg, seed);
  Simulator sim(std::move(setup.grid), setup.sim, cfg.material, setup.interaction.sigma,
                setup.f_reference);
  const SimResult res = sim.evolve();

  SimulateOutput out;
  out.summary.title = "quantum Boltzmann relaxation";
  out.summary.add("bins", static_cast<double>(res.grid.bins()));
  out.summary.add("eps_max", res.grid.delta_eps * res.grid.bins());
  out.summary.add("rate_constant", res.rate_constant);
  out.summary.add("t_end", setup.sim.t_end);
  out.summary.add("steps", static_cast<double>(res.steps));
  out.summary.add("clamp_events", static_cast<double>(res.clamp_events));
  out.summary.add("stop_reason", res.stop_reason == StopReason::TimeEnd      ? "t_end"
                                 : res.stop_reason == StopReason::L1Converged ? "l1_converged"
                                                                              : "stalled");
  out.summary.add("max_drift_number", res.max_drift_number);
  out.summary.add("max_drift_energy", res.max_drift_energy);
  out.summary.add("time_to_equilibrium", res.time_to_equilibrium);
  out.summary.add("tau_relax_estimate", setup.tau_relax);
  const TrajectorySample& last = res.trajectory.back();
  out.summary.add("final_l1_to_be", last.l1_to_be);
  out.summary.add("final_T_fit", last.T_fit);
  out.summary.add("final_kappa_fit", last.kappa_fit);
  out.summary.add("predicted_T_eff", setup.predicted.T_eff);
  out.summary.add("predicted_kappa", setup.predicted.kappa);
  out.summary.add("predicted_rho0", setup.predicted.rho0);
  out.summary.add("final_entropy", last.S);

  out.trajectory.columns = {"t", "rho", "u", "S", "T_fit", "kappa_fit", "L1_to_BE"};
  for (const auto& s : res.trajectory)
    out.trajectory.rows.push_back({format_number(s.t), format_number(s.rho),
                                   format_number(s.u), format_number(s.S),
                                   format_number(s.T_fit), format_number(s.kappa_fit),
                                   format_number(s.l1_to_be)});

  out.spectrum.columns = {"eps", "f", "dos"};
  for (int i = 0; i < res.grid.bins(); ++i)
    out.spectrum.rows.push_back({format_number(res.grid.eps[i]),
                                 format_number(res.grid.f[i]),
                                 format_number(res.grid.dos[i])});
  return out;
}

}  // namespace photonbec
