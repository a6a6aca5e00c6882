#include "avqst/likelihood.hpp"

#include "avqst/errors.hpp"

#include <cmath>
#include <limits>

namespace avqst {

double log_likelihood(const ComplexMatrix& rho, const MeasurementRecord& record) {
    if (rho.rows() != record.dim() || rho.cols() != record.dim()) {
        throw ValidationError("log_likelihood: dimension mismatch");
    }
    double total = 0.0;
    const auto& groups = record.grouped();
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const double p = effect_probability(record.grouped_effect(g), rho);
        if (!(p > 0.0)) {
            return -std::numeric_limits<double>::infinity();
        }
        total += static_cast<double>(groups[g].count) * std::log(p);
    }
    return total;
}

double log_likelihood(const DensityMatrix& rho, const MeasurementRecord& record) {
    return log_likelihood(rho.matrix(), record);
}

} // namespace avqst
