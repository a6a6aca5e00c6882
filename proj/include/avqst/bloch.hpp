#pragma once

#include "avqst/states.hpp"

namespace avqst {

/*
 * Real coordinates of a Hermitian unit-trace matrix in the orthonormal
 * generalized Gell-Mann basis {B_k}, tr(B_j B_k) = delta_jk:
 *
 *   rho = I/D + sum_k coords[k] * B_k.
 *
 * Basis enumeration (0-based k, P = D(D-1)/2 index pairs (j,l) with j < l in
 * lexicographic order):
 *   k in [0,    P)    symmetric pair      ( |j><l| + |l><j| ) / sqrt(2)
 *   k in [P,   2P)    antisymmetric pair  (-i|j><l| + i|l><j|) / sqrt(2)
 *   k in [2P, 2P+D-1) diagonal, index m=k-2P in [0, D-1):
 *                     ( sum_{j<=m} |j><j| - (m+1)|m+1><m+1| ) / sqrt((m+1)(m+2))
 *
 * For D=2 this is the Pauli basis scaled by 1/sqrt(2), in (X, Y, Z) order.
 * The enumeration is fixed; serialized coordinates stay stable across versions.
 */
struct BlochVector {
    Eigen::Index dim = 0;
    RealVector coords;

    BlochVector() = default;
    BlochVector(Eigen::Index d, RealVector c);
};

// Number of basis elements for dimension d: d*d - 1.
inline Eigen::Index bloch_size(Eigen::Index d) { return d * d - 1; }

// Explicit basis element; intended for documentation and cross-checks, the
// coordinate maps below never materialize it.
ComplexMatrix gell_mann_element(Eigen::Index dim, Eigen::Index k);

// coords[k] = tr(rho B_k).
BlochVector bloch_coordinates(const DensityMatrix& rho);
RealVector bloch_coordinates_raw(const ComplexMatrix& hermitian_unit_trace);

// I/D + sum coords[k] B_k. Hermitian with unit trace by construction; PSD is
// not guaranteed for arbitrary coordinates.
ComplexMatrix density_from_bloch(const BlochVector& v);

} // namespace avqst
