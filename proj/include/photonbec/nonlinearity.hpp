#pragma once

#include "photonbec/core_model.hpp"

namespace photonbec {

/// Effective photon-photon contact interaction extracted from the
/// Kerr response.
struct InteractionParams {
  double a;      // photon-photon scattering length [m]
  double sigma;  // collision cross section 4 pi a^2 [m^2]
  double chi3;   // third-order susceptibility, SI
  double V_eff;  // contact strength 4 pi a hbar^2 / m [J m^3]
};

/// a = hbar c^2 n2 n0^2 / (4 pi) * (2 pi / lambda_0)^3.
double scattering_length(const MaterialParams& mat, double lambda_0);

/// chi3 = eps0^2 n0^2 c n2, using 1 + chi1 = n0^2.
double chi3_from_n2(const MaterialParams& mat);

InteractionParams interaction_params(const MaterialParams& mat, double lambda_0,
                                     double m_eff);

struct ParasiticRates {
  double raman;      // [Hz]
  double brillouin;  // [Hz]
};

/// Stimulated-scattering rate estimate: gain * I * c / n0 per process.
ParasiticRates parasitic_rates(double intensity, const MaterialParams& mat);

}  // namespace photonbec
