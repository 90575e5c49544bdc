#pragma once

#include <chrono>
#include <cstdint>

#include "hasse/analysis.hpp"

namespace hasse::detail {

class BudgetMeter {
public:
    explicit BudgetMeter(const SearchBudget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    // one search-node expansion; false once the budget is gone
    bool tick() {
        if (exhausted_) return false;
        ++nodes_;
        if (nodes_ > budget_.max_nodes) exhausted_ = true;
        if (!exhausted_ && (nodes_ & 0xfff) == 0) {
            const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
            if (dt.count() > budget_.max_seconds) exhausted_ = true;
        }
        return !exhausted_;
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    const SearchBudget& budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace hasse::detail
