#pragma once

// Internal pieces shared by kernels_serial.cpp and kernels_parallel.cpp.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "clusterability/kernels.hpp"

namespace clusterability::kernels::detail {

inline std::size_t bin_index(double d, double upper, std::size_t bins) noexcept {
    const double width = upper / static_cast<double>(bins);
    const double pos = std::floor(d / width);
    if (!(pos >= 0.0)) return 0;
    return std::min(static_cast<std::size_t>(pos), bins - 1);
}

/**
 * Depth-first walk over restricted-growth strings (label[0] = 0, each label at
 * most one above the running maximum) with exactly k blocks. Per-block sums
 * are saved and restored rather than subtracted, so the state at a node
 * depends only on the labels along its path; this is what makes a walk split
 * across workers reproduce the serial walk bit for bit.
 */
class PartitionEnumerator {
public:
    PartitionEnumerator(const Dataset& data, std::size_t k)
        : data_(data), k_(k), n_(data.size()), dim_(data.dim()),
          labels_(n_, 0), counts_(k_, 0), sums_(k_ * dim_, 0.0), sumsq_(k_, 0.0),
          saved_sums_(n_ * dim_, 0.0), saved_sumsq_(n_, 0.0), norms_(n_, 0.0) {
        for (std::size_t i = 0; i < n_; ++i) {
            double s = 0.0;
            for (double v : data_.point(i)) s += v * v;
            norms_[i] = s;
        }
        best_.cost = std::numeric_limits<double>::infinity();
    }

    std::size_t depth() const noexcept { return depth_; }
    std::size_t used() const noexcept { return used_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return n_; }
    std::span<const std::size_t> prefix() const noexcept { return {labels_.data(), depth_}; }

    /// Largest label the next point may take.
    std::size_t max_next_label() const noexcept { return std::min(used_, k_ - 1); }

    /// Whether the current prefix can still be completed to exactly k blocks.
    bool feasible() const noexcept { return n_ - depth_ >= k_ - used_; }

    void push(std::size_t block) {
        const std::size_t i = depth_;
        auto* s = sums_.data() + block * dim_;
        std::copy(s, s + dim_, saved_sums_.data() + i * dim_);
        saved_sumsq_[i] = sumsq_[block];
        const auto p = data_.point(i);
        for (std::size_t j = 0; j < dim_; ++j) s[j] += p[j];
        sumsq_[block] += norms_[i];
        ++counts_[block];
        if (block == used_) ++used_;
        labels_[i] = block;
        ++depth_;
    }

    void pop() {
        --depth_;
        const std::size_t i = depth_;
        const std::size_t block = labels_[i];
        std::copy(saved_sums_.data() + i * dim_, saved_sums_.data() + (i + 1) * dim_,
                  sums_.data() + block * dim_);
        sumsq_[block] = saved_sumsq_[i];
        if (--counts_[block] == 0) --used_;
    }

    void search() {
        if (depth_ == n_) {
            if (used_ == k_) visit_leaf();
            return;
        }
        if (!feasible()) return;
        const std::size_t limit = max_next_label();
        for (std::size_t b = 0; b <= limit; ++b) {
            push(b);
            search();
            pop();
        }
    }

    const EnumerationResult& best() const noexcept { return best_; }

private:
    void visit_leaf() {
        ++best_.examined;
        double cost = 0.0;
        for (std::size_t b = 0; b < k_; ++b) {
            const auto* s = sums_.data() + b * dim_;
            double norm2 = 0.0;
            for (std::size_t j = 0; j < dim_; ++j) norm2 += s[j] * s[j];
            cost += sumsq_[b] - norm2 / static_cast<double>(counts_[b]);
        }
        if (cost < best_.cost) {
            best_.cost = cost;
            best_.labels.assign(labels_.begin(), labels_.end());
        }
    }

    const Dataset& data_;
    std::size_t k_, n_, dim_;
    std::size_t depth_ = 0;
    std::size_t used_ = 0;
    std::vector<std::size_t> labels_;
    std::vector<std::size_t> counts_;
    std::vector<double> sums_;
    std::vector<double> sumsq_;
    std::vector<double> saved_sums_;
    std::vector<double> saved_sumsq_;
    std::vector<double> norms_;
    EnumerationResult best_;
};

inline void check_enumeration_args(const Dataset& data, std::size_t k) {
    if (k == 0 || k > data.size()) {
        throw std::invalid_argument("enumeration needs 1 <= k <= n");
    }
}

}  // namespace clusterability::kernels::detail
