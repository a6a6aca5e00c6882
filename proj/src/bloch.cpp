#include "avqst/bloch.hpp"

#include "avqst/errors.hpp"

#include <cmath>

namespace avqst {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Map pair index p in [0, D(D-1)/2) to (j, l), j < l, lexicographic.
void pair_from_index(Eigen::Index p, Eigen::Index dim, Eigen::Index& j, Eigen::Index& l) {
    Eigen::Index row = 0;
    Eigen::Index remaining = p;
    while (remaining >= dim - 1 - row) {
        remaining -= dim - 1 - row;
        ++row;
    }
    j = row;
    l = row + 1 + remaining;
}

} // namespace

BlochVector::BlochVector(Eigen::Index d, RealVector c) : dim(d), coords(std::move(c)) {
    if (dim < 2) {
        throw ValidationError("BlochVector: dim must be >= 2");
    }
    if (coords.size() != bloch_size(dim)) {
        throw ValidationError("BlochVector: expected length " + std::to_string(bloch_size(dim)) +
                              ", got " + std::to_string(coords.size()));
    }
}

ComplexMatrix gell_mann_element(Eigen::Index dim, Eigen::Index k) {
    if (dim < 2 || k < 0 || k >= bloch_size(dim)) {
        throw ValidationError("gell_mann_element: index out of range");
    }
    const Eigen::Index pairs = dim * (dim - 1) / 2;
    ComplexMatrix b = ComplexMatrix::Zero(dim, dim);
    if (k < pairs) {
        Eigen::Index j, l;
        pair_from_index(k, dim, j, l);
        b(j, l) = Complex(kInvSqrt2, 0.0);
        b(l, j) = Complex(kInvSqrt2, 0.0);
    } else if (k < 2 * pairs) {
        Eigen::Index j, l;
        pair_from_index(k - pairs, dim, j, l);
        b(j, l) = Complex(0.0, -kInvSqrt2);
        b(l, j) = Complex(0.0, kInvSqrt2);
    } else {
        const Eigen::Index m = k - 2 * pairs; // diagonal family index in [0, D-1)
        const double norm = 1.0 / std::sqrt(static_cast<double>((m + 1) * (m + 2)));
        for (Eigen::Index j = 0; j <= m; ++j) {
            b(j, j) = Complex(norm, 0.0);
        }
        b(m + 1, m + 1) = Complex(-static_cast<double>(m + 1) * norm, 0.0);
    }
    return b;
}

RealVector bloch_coordinates_raw(const ComplexMatrix& h) {
    const Eigen::Index dim = h.rows();
    const Eigen::Index pairs = dim * (dim - 1) / 2;
    RealVector coords(bloch_size(dim));
    Eigen::Index p = 0;
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index l = j + 1; l < dim; ++l, ++p) {
            // tr(h * sym_jl) and tr(h * anti_jl) reduce to the (j,l) entry.
            coords[p] = std::sqrt(2.0) * h(j, l).real();
            coords[pairs + p] = -std::sqrt(2.0) * h(j, l).imag();
        }
    }
    double running = 0.0; // sum of leading diagonal entries
    for (Eigen::Index m = 0; m + 1 < dim; ++m) {
        running += h(m, m).real();
        const double norm = 1.0 / std::sqrt(static_cast<double>((m + 1) * (m + 2)));
        coords[2 * pairs + m] = norm * (running - static_cast<double>(m + 1) * h(m + 1, m + 1).real());
    }
    return coords;
}

BlochVector bloch_coordinates(const DensityMatrix& rho) {
    return BlochVector(rho.dim(), bloch_coordinates_raw(rho.matrix()));
}

ComplexMatrix density_from_bloch(const BlochVector& v) {
    const Eigen::Index dim = v.dim;
    const Eigen::Index pairs = dim * (dim - 1) / 2;
    ComplexMatrix m = ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
    Eigen::Index p = 0;
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index l = j + 1; l < dim; ++l, ++p) {
            const Complex entry(kInvSqrt2 * v.coords[p], -kInvSqrt2 * v.coords[pairs + p]);
            m(j, l) += entry;
            m(l, j) += std::conj(entry);
        }
    }
    for (Eigen::Index d = 0; d + 1 < dim; ++d) {
        const double norm = 1.0 / std::sqrt(static_cast<double>((d + 1) * (d + 2)));
        const double c = v.coords[2 * pairs + d];
        for (Eigen::Index j = 0; j <= d; ++j) {
            m(j, j) += c * norm;
        }
        m(d + 1, d + 1) -= c * static_cast<double>(d + 1) * norm;
    }
    return m;
}

} // namespace avqst
