#ifndef GDNOV_CHECK_REPORT_HPP
#define GDNOV_CHECK_REPORT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gdnov/scalar.hpp"

namespace gdnov {

/// One concrete axiom violation: which identity failed, at which basis-index
/// tuple (degrees for loop-algebra checks are appended to the tuple), and the
/// full nonzero defect vector, so the failure can be reproduced by hand.
template <Scalar K>
struct Witness {
    std::string axiom;              // e.g. "left_symmetric"
    std::string eq;                 // stable identity tag, e.g. "eq:1.1"
    std::vector<long long> indices; // iteration order is lexicographic
    Vec<K> defect;
};

/// Outcome of an axiom check.  passed ⟺ witness_count == 0; the stored
/// witness list is truncated to `cap` but the count is exact.
template <Scalar K>
struct CheckReport {
    bool passed = true;
    std::size_t witness_count = 0;
    std::size_t cap = 10;
    std::vector<Witness<K>> witnesses;

    explicit CheckReport(std::size_t witness_cap = 10) : cap(witness_cap) {}

    void add(Witness<K> w) {
        passed = false;
        ++witness_count;
        if (witnesses.size() < cap) witnesses.push_back(std::move(w));
    }

    /// Appends another report's findings (used by aggregate checks).
    void absorb(const CheckReport& other) {
        if (other.passed) return;
        passed = false;
        witness_count += other.witness_count;
        for (const auto& w : other.witnesses)
            if (witnesses.size() < cap) witnesses.push_back(w);
    }
};

} // namespace gdnov

#endif
