#pragma once

#include "avqst/povm.hpp"

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

namespace avqst {

/*
 * Time-ordered list of observed effects. Each entry references a registered
 * POVM by id plus the 0-based outcome index, so the effect matrices are shared
 * rather than copied. A multiplicity table over distinct (povm, outcome) pairs
 * is maintained incrementally; likelihood evaluations iterate that table
 * instead of the raw sequence.
 *
 * Owned by a single run; append is the only mutation.
 */
class MeasurementRecord {
public:
    struct Entry {
        int povm_id;
        int outcome;
    };
    struct GroupedCount {
        int povm_id;
        int outcome;
        std::int64_t count;
    };

    explicit MeasurementRecord(Eigen::Index dim);

    int register_povm(std::shared_ptr<const Povm> povm);
    void append(int povm_id, int outcome);

    Eigen::Index dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    const Povm& povm(int id) const;
    // Effect observed at step t (0-based position in the sequence).
    const ComplexMatrix& effect(std::size_t t) const;
    const std::vector<GroupedCount>& grouped() const noexcept { return grouped_; }
    const ComplexMatrix& grouped_effect(std::size_t g) const;

private:
    Eigen::Index dim_;
    std::vector<std::shared_ptr<const Povm>> povms_;
    std::vector<Entry> entries_;
    std::vector<GroupedCount> grouped_;
    std::unordered_map<std::uint64_t, std::size_t> group_slot_;
};

} // namespace avqst
