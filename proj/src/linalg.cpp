#include "avqst/linalg.hpp"

#include "avqst/errors.hpp"

#include <algorithm>
#include <string>

namespace avqst {

HermitianEigen hermitian_eigen(const ComplexMatrix& h) {
    if (h.rows() != h.cols()) {
        throw ValidationError("hermitian_eigen: matrix is not square");
    }
    const double defect = hermiticity_defect(h);
    if (defect > kHermitianInputTol) {
        throw ValidationError("hermitian_eigen: input is not Hermitian (max |H - H^dagger| = " +
                              std::to_string(defect) + ")");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        // Eigen's self-adjoint solver caps the implicit QL sweeps at 30 per row.
        throw NumericError("hermitian_eigen: solver did not converge within 30n sweeps");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector project_to_simplex(const RealVector& v) {
    const Eigen::Index n = v.size();
    std::vector<double> sorted(v.data(), v.data() + n);
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    double cumulative = 0.0;
    double threshold = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        cumulative += sorted[static_cast<std::size_t>(k)];
        const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
        if (candidate < sorted[static_cast<std::size_t>(k)]) {
            threshold = candidate;
        }
    }
    RealVector out(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out[i] = std::max(v[i] - threshold, 0.0);
    }
    return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Eigen::Index ra = a.rows(), ca = a.cols();
    const Eigen::Index rb = b.rows(), cb = b.cols();
    ComplexMatrix out(ra * rb, ca * cb);
    for (Eigen::Index i = 0; i < ra; ++i) {
        for (Eigen::Index j = 0; j < ca; ++j) {
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
        }
    }
    return out;
}

} // namespace avqst
