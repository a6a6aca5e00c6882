#include "avqst/record.hpp"

#include "avqst/errors.hpp"

namespace avqst {

MeasurementRecord::MeasurementRecord(Eigen::Index dim) : dim_(dim) {
    if (dim_ < 2) {
        throw ValidationError("MeasurementRecord: dim must be >= 2");
    }
}

int MeasurementRecord::register_povm(std::shared_ptr<const Povm> povm) {
    if (!povm) {
        throw ValidationError("MeasurementRecord: null POVM");
    }
    if (povm->dim() != dim_) {
        throw ValidationError("MeasurementRecord: POVM dimension mismatch");
    }
    povms_.push_back(std::move(povm));
    return static_cast<int>(povms_.size()) - 1;
}

void MeasurementRecord::append(int povm_id, int outcome) {
    if (povm_id < 0 || povm_id >= static_cast<int>(povms_.size())) {
        throw ValidationError("MeasurementRecord: unknown POVM id " + std::to_string(povm_id));
    }
    const Povm& p = *povms_[static_cast<std::size_t>(povm_id)];
    if (outcome < 0 || outcome >= p.size()) {
        throw ValidationError("MeasurementRecord: outcome " + std::to_string(outcome) +
                              " out of range for POVM with " + std::to_string(p.size()) +
                              " effects");
    }
    entries_.push_back({povm_id, outcome});
    const std::uint64_t key =
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(povm_id)) << 32) |
        static_cast<std::uint32_t>(outcome);
    auto [it, inserted] = group_slot_.try_emplace(key, grouped_.size());
    if (inserted) {
        grouped_.push_back({povm_id, outcome, 1});
    } else {
        ++grouped_[it->second].count;
    }
}

const Povm& MeasurementRecord::povm(int id) const {
    if (id < 0 || id >= static_cast<int>(povms_.size())) {
        throw ValidationError("MeasurementRecord: unknown POVM id " + std::to_string(id));
    }
    return *povms_[static_cast<std::size_t>(id)];
}

const ComplexMatrix& MeasurementRecord::effect(std::size_t t) const {
    const Entry& e = entries_.at(t);
    return povms_[static_cast<std::size_t>(e.povm_id)]->effect(e.outcome);
}

const ComplexMatrix& MeasurementRecord::grouped_effect(std::size_t g) const {
    const GroupedCount& gc = grouped_.at(g);
    return povms_[static_cast<std::size_t>(gc.povm_id)]->effect(gc.outcome);
}

} // namespace avqst
