#pragma once

#include <numbers>

namespace photonbec {

/// Fundamental constants, SI (2019 redefinition, exact where defined).
struct PhysConstants {
  double c;     // speed of light in vacuum [m/s]
  double h;     // Planck constant [J s]
  double hbar;  // reduced Planck constant [J s]
  double kB;    // Boltzmann constant [J/K]
  double eps0;  // vacuum permittivity [F/m]
};

inline constexpr PhysConstants k_const{
    299792458.0,
    6.62607015e-34,
    6.62607015e-34 / (2.0 * std::numbers::pi),
    1.380649e-23,
    8.8541878128e-12,
};

inline constexpr double k_electron_volt = 1.602176634e-19;  // [J]

}  // namespace photonbec
