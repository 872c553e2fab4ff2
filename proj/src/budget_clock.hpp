#pragma once

#include <chrono>
#include <cstdint>

#include "cbc/search.hpp"

namespace cbc::detail {

class BudgetClock {
public:
    explicit BudgetClock(const SearchBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {
        b.validate();
    }

    // Counts one node; false once either limit is hit.
    bool tick() {
        if (exhausted_) return false;
        ++nodes_;
        if (nodes_ > budget_.node_limit) exhausted_ = true;
        if ((nodes_ & 1023u) == 0 && std::chrono::steady_clock::now() - start_ > budget_.time_limit)
            exhausted_ = true;
        return !exhausted_;
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace cbc::detail
