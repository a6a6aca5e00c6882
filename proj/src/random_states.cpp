#include "avqst/random_states.hpp"

#include "avqst/errors.hpp"

namespace avqst {

PureState haar_random_pure(Eigen::Index dim, RngStream& rng) {
    if (dim < 2) {
        throw ValidationError("haar_random_pure: dim must be >= 2");
    }
    ComplexVector amps(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        amps[i] = rng.next_complex_gaussian();
    }
    amps /= amps.norm();
    return PureState(std::move(amps));
}

DensityMatrix hs_random_density(Eigen::Index dim, Eigen::Index rank, RngStream& rng) {
    if (dim < 2) {
        throw ValidationError("hs_random_density: dim must be >= 2");
    }
    if (rank < 1 || rank > dim) {
        throw ValidationError("hs_random_density: rank must lie in [1, dim]");
    }
    ComplexMatrix g(dim, rank);
    for (Eigen::Index j = 0; j < rank; ++j) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            g(i, j) = rng.next_complex_gaussian();
        }
    }
    ComplexMatrix gram = g * g.adjoint();
    gram = 0.5 * (gram + gram.adjoint().eval());
    gram /= gram.trace().real();
    return DensityMatrix(std::move(gram));
}

} // namespace avqst
