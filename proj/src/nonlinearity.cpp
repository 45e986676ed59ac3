#include "photonbec/nonlinearity.hpp"

#include <cmath>

#include "photonbec/errors.hpp"

namespace photonbec {

namespace {
constexpr double kPi = std::numbers::pi;
}

double scattering_length(const MaterialParams& mat, double lambda_0) {
  if (!(lambda_0 > 0.0)) throw ValidationError("lambda_0 must be > 0");
  const double k0 = 2.0 * kPi / lambda_0;
  return k_const.hbar * k_const.c * k_const.c * mat.n2 * mat.n0 * mat.n0 /
         (4.0 * kPi) * k0 * k0 * k0;
}

double chi3_from_n2(const MaterialParams& mat) {
  if (!(mat.n0 > 1.0)) throw ValidationError("material.n0 must be > 1");
  return k_const.eps0 * k_const.eps0 * mat.n0 * mat.n0 * k_const.c * mat.n2;
}

InteractionParams interaction_params(const MaterialParams& mat, double lambda_0,
                                     double m_eff) {
  InteractionParams p;
  p.a = scattering_length(mat, lambda_0);
  p.sigma = 4.0 * kPi * p.a * p.a;
  p.chi3 = chi3_from_n2(mat);
  p.V_eff = 4.0 * kPi * p.a * k_const.hbar * k_const.hbar / m_eff;
  return p;
}

ParasiticRates parasitic_rates(double intensity, const MaterialParams& mat) {
  if (!(intensity >= 0.0)) throw ValidationError("intensity must be >= 0");
  const double v = k_const.c / mat.n0;
  return ParasiticRates{mat.raman_gain * intensity * v,
                        mat.brillouin_gain * intensity * v};
}

}  // namespace photonbec
