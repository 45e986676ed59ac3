#pragma once

#include <vector>

#include "photonbec/spectral_grid.hpp"

namespace photonbec {

/// Isotropic Uehling-Uhlenbeck collision operator for a contact
/// interaction, discretized on the uniform energy grid.
///
/// C_i = K * dE^2 / w_i * sum_{k,l, j=k+l-i in range}
///         W_ijkl [ f_k f_l (1+f_i)(1+f_j) - f_i f_j (1+f_k)(1+f_l) ]
///
/// with W = min(sqrt eps) over the quadruplet and w_i = sqrt(eps_i) in 3D,
/// W = w = 1 in 2D. The index constraint i + j = k + l conserves number
/// and energy bin-exactly; quadruplets leaving the grid are dropped on
/// both sides. Fixed points are exactly the Bose-Einstein occupations.
///
/// Serial reference implementation; kept as the ground truth the
/// OpenMP kernel is checked against.
void collision_operator_serial(const SpectralGrid& g, double rate_constant,
                               std::vector<double>& dfdt);

/// OpenMP version of collision_operator_serial. Parallel over target bins
/// with each bin's inner sum kept in serial order, so the result is
/// bit-identical to the serial reference for any thread count.
void collision_operator(const SpectralGrid& g, double rate_constant,
                        std::vector<double>& dfdt);

/// Mean stimulation-free collision rate per photon of the current
/// occupation, per unit rate constant [dimension of 1/(s K)].
double classical_collision_rate(const SpectralGrid& g);

/// Rate constant K chosen so the classical (F = 0) mean collision rate of
/// this occupation equals rho (c/n0) sigma at the grid's density.
double calibrate_rate_constant(const SpectralGrid& g, const MaterialParams& mat,
                               double sigma);

}  // namespace photonbec
