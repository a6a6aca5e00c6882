#pragma once

#include "avqst/rng.hpp"
#include "avqst/states.hpp"

namespace avqst {

// Haar-uniform pure state: i.i.d. standard complex Gaussian amplitudes,
// normalized. Invariant under any fixed unitary.
PureState haar_random_pure(Eigen::Index dim, RngStream& rng);

// Hilbert-Schmidt-type mixed state: G is dim x rank with i.i.d. standard
// complex Gaussian entries, rho = G G^dagger / tr(G G^dagger). rank = dim
// gives the Hilbert-Schmidt measure on density matrices.
DensityMatrix hs_random_density(Eigen::Index dim, Eigen::Index rank, RngStream& rng);

} // namespace avqst
