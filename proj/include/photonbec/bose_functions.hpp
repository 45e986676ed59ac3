#pragma once

namespace photonbec {

/// Bose-Einstein function g_k(kappa) = sum_{j>=1} e^{-j kappa} / j^k
/// = Li_k(e^{-kappa}), for kappa >= 0.
///
/// kappa = 0 requires k > 1 and returns zeta(k). k = 1 uses the closed
/// form -ln(1 - e^{-kappa}). Absolute accuracy better than 1e-12.
///
/// Throws ValidationError for kappa < 0 and for the divergent case
/// (k <= 1, kappa = 0).
double bose_g(double k, double kappa);

/// g_k at kappa = e^{log_kappa}. Stable for log_kappa far below the
/// underflow threshold (the 2D gas drives -log kappa to ~1e4+): k = 1
/// evaluates -log kappa + e^{log_kappa}/2 - ... directly, k > 1 saturates
/// at zeta(k). log_kappa = -inf means kappa = 0.
double bose_g_log(double k, double log_kappa);

/// zeta(k) for k > 1, evaluated as g_k(0).
double bose_zeta(double k);

/// Thermal de Broglie wavelength h / sqrt(2 pi m kB T) [m].
double thermal_wavelength(double T, double m_eff);

}  // namespace photonbec
