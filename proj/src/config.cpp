#include "photonbec/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "photonbec/errors.hpp"

namespace photonbec {

namespace {

struct NumericKey {
  const char* name;
  void (*set)(RunConfig&, double);
};

void require_int(const char* key, double v, int lo) {
  if (v != std::floor(v) || v < lo)
    throw ValidationError(std::string(key) + " must be an integer >= " + std::to_string(lo));
}

const std::vector<NumericKey>& numeric_keys() {
  static const std::vector<NumericKey> keys = {
      {"material.n0", [](RunConfig& c, double v) { c.material.n0 = v; }},
      {"material.n2", [](RunConfig& c, double v) { c.material.n2 = v; }},
      {"material.alpha", [](RunConfig& c, double v) { c.material.alpha = v; }},
      {"material.heat_capacity", [](RunConfig& c, double v) { c.material.heat_capacity = v; }},
      {"material.raman_gain", [](RunConfig& c, double v) { c.material.raman_gain = v; }},
      {"material.brillouin_gain", [](RunConfig& c, double v) { c.material.brillouin_gain = v; }},
      {"geometry.length", [](RunConfig& c, double v) { c.geometry.length = v; }},
      {"geometry.length_bandgap", [](RunConfig& c, double v) { c.geometry.length_bandgap = v; }},
      {"geometry.finesse", [](RunConfig& c, double v) { c.geometry.finesse = v; }},
      {"geometry.transverse_area", [](RunConfig& c, double v) { c.geometry.transverse_area = v; }},
      {"geometry.cladding_index", [](RunConfig& c, double v) { c.geometry.cladding_index = v; }},
      {"pulse.lambda_p", [](RunConfig& c, double v) { c.pulse.lambda_p = v; }},
      {"pulse.photon_density", [](RunConfig& c, double v) { c.pulse.photon_density = v; }},
      {"pulse.duration", [](RunConfig& c, double v) { c.pulse.duration = v; }},
      {"thermal.delta_t_per_pulse", [](RunConfig& c, double v) { c.delta_T = v; }},
      {"feasibility.margin_threshold",
       [](RunConfig& c, double v) { c.feasibility.margin_threshold = v; }},
      {"feasibility.reference_density",
       [](RunConfig& c, double v) { c.feasibility.reference_density = v; }},
      {"solver.tolerance", [](RunConfig& c, double v) { c.solver.tolerance = v; }},
      {"solver.max_iterations",
       [](RunConfig& c, double v) {
         require_int("solver.max_iterations", v, 1);
         c.solver.max_iterations = static_cast<int>(v);
       }},
      {"solver.kappa_floor", [](RunConfig& c, double v) { c.solver.kappa_floor = v; }},
      {"sim.bins",
       [](RunConfig& c, double v) {
         require_int("sim.bins", v, 16);
         c.sim_bins = static_cast<int>(v);
       }},
      {"sim.eps_max", [](RunConfig& c, double v) { c.sim_eps_max = v; }},
      {"sim.t_end", [](RunConfig& c, double v) { c.sim.t_end = v; }},
      {"sim.dt_init", [](RunConfig& c, double v) { c.sim.dt_init = v; }},
      {"sim.max_rel_change", [](RunConfig& c, double v) { c.sim.max_rel_change = v; }},
      {"sim.rate_constant", [](RunConfig& c, double v) { c.sim.rate_constant = v; }},
      {"sim.record_every",
       [](RunConfig& c, double v) {
         require_int("sim.record_every", v, 1);
         c.sim.record_every = static_cast<int>(v);
       }},
      {"sim.conservation_tol", [](RunConfig& c, double v) { c.sim.conservation_tol = v; }},
      {"sim.l1_stop", [](RunConfig& c, double v) { c.sim.l1_stop = v; }},
      {"sim.f_floor", [](RunConfig& c, double v) { c.sim.f_floor = v; }},
      {"sim.init_noise", [](RunConfig& c, double v) { c.sim.init_noise = v; }},
      {"sim.init_center", [](RunConfig& c, double v) { c.sim_init_center = v; }},
      {"sim.init_width", [](RunConfig& c, double v) { c.sim_init_width = v; }},
      {"sim.init_lo", [](RunConfig& c, double v) { c.sim_init_lo = v; }},
      {"sim.init_hi", [](RunConfig& c, double v) { c.sim_init_hi = v; }},
  };
  return keys;
}

const std::vector<std::string>& string_keys() {
  static const std::vector<std::string> keys = {"geometry.dimensionality",
                                                "sim.init_shape"};
  return keys;
}

const std::vector<std::string>& required_keys() {
  static const std::vector<std::string> keys = {
      "material.n0",        "material.n2",           "material.alpha",
      "geometry.dimensionality", "geometry.length",  "geometry.finesse",
      "geometry.transverse_area", "pulse.lambda_p",  "pulse.photon_density",
      "pulse.duration",
  };
  return keys;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& value, const std::string& key, int line) {
  const std::string v = trim(value);
  char* end = nullptr;
  const double d = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size()) {
    std::ostringstream msg;
    msg << "parse error at line " << line << ": '" << v << "' is not a number for key "
        << key;
    throw ValidationError(msg.str());
  }
  return d;
}

void apply_string_key(RunConfig& cfg, const std::string& key, const std::string& value,
                      int line) {
  if (key == "geometry.dimensionality") {
    if (value == "planar2d")
      cfg.geometry.dimensionality = Dimensionality::Planar2D;
    else if (value == "bandgap3d")
      cfg.geometry.dimensionality = Dimensionality::Bandgap3D;
    else {
      std::ostringstream msg;
      msg << "parse error at line " << line
          << ": geometry.dimensionality must be planar2d or bandgap3d, got '" << value
          << "'";
      throw ValidationError(msg.str());
    }
    return;
  }
  if (key == "sim.init_shape") {
    if (value != "gaussian" && value != "uniform" && value != "monochromatic") {
      std::ostringstream msg;
      msg << "parse error at line " << line
          << ": sim.init_shape must be gaussian, uniform or monochromatic, got '" << value
          << "'";
      throw ValidationError(msg.str());
    }
    cfg.sim_init_shape = value;
    return;
  }
  throw ValidationError("internal: unhandled string key " + key);
}

}  // namespace

std::vector<std::string> sweepable_keys() {
  std::vector<std::string> names;
  names.reserve(numeric_keys().size());
  for (const auto& k : numeric_keys()) names.emplace_back(k.name);
  return names;
}

void set_config_value(RunConfig& cfg, const std::string& key, double value) {
  for (const auto& k : numeric_keys()) {
    if (key == k.name) {
      k.set(cfg, value);
      return;
    }
  }
  std::ostringstream msg;
  msg << "unknown parameter '" << key << "'; sweepable keys:";
  for (const auto& k : numeric_keys()) msg << ' ' << k.name;
  throw ValidationError(msg.str());
}

void RunConfig::validate() const {
  validate_pairing(material, geometry, pulse);
  if (!(delta_T > 0.0)) throw ValidationError("thermal.delta_t_per_pulse must be > 0");
  if (!(feasibility.margin_threshold > 0.0))
    throw ValidationError("feasibility.margin_threshold must be > 0");
  if (!(feasibility.reference_density >= 0.0))
    throw ValidationError("feasibility.reference_density must be >= 0");
  if (!(solver.tolerance > 0.0)) throw ValidationError("solver.tolerance must be > 0");
  if (solver.max_iterations < 1)
    throw ValidationError("solver.max_iterations must be >= 1");
  if (!(solver.kappa_floor > 0.0)) throw ValidationError("solver.kappa_floor must be > 0");
  if (sim_bins < 16) throw ValidationError("sim.bins must be >= 16");
  if (!(sim_eps_max >= 0.0)) throw ValidationError("sim.eps_max must be >= 0");
  // sim.t_end = 0 means auto; full SimConfig validation happens at simulate time
}

RunConfig parse_config(const std::string& text, const std::string& source_name) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::istringstream stream(text);
  std::string raw;
  int line = 0;
  while (std::getline(stream, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string entry = trim(raw);
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << source_name << ": parse error at line " << line << ": expected 'key = value'";
      throw ValidationError(msg.str());
    }
    const std::string key = trim(entry.substr(0, eq));
    const std::string value = trim(entry.substr(eq + 1));
    if (!seen.insert(key).second) {
      std::ostringstream msg;
      msg << source_name << ": duplicate key '" << key << "' at line " << line;
      throw ValidationError(msg.str());
    }
    if (std::find(string_keys().begin(), string_keys().end(), key) != string_keys().end()) {
      apply_string_key(cfg, key, value, line);
      continue;
    }
    bool known = false;
    for (const auto& k : numeric_keys()) {
      if (key == k.name) {
        k.set(cfg, parse_double(value, key, line));
        known = true;
        break;
      }
    }
    if (!known) {
      std::ostringstream msg;
      msg << source_name << ": unknown key '" << key << "' at line " << line;
      throw ValidationError(msg.str());
    }
  }

  std::vector<std::string> missing;
  for (const auto& k : required_keys())
    if (!seen.count(k)) missing.push_back(k);
  if (cfg.geometry.dimensionality == Dimensionality::Bandgap3D &&
      !seen.count("geometry.length_bandgap"))
    missing.push_back("geometry.length_bandgap");
  if (!missing.empty()) {
    std::ostringstream msg;
    msg << source_name << ": missing required keys:";
    for (const auto& k : missing) msg << ' ' << k;
    throw ValidationError(msg.str());
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

}  // namespace photonbec
