#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace clusterability {

/// Thrown when a label vector is not a valid partition of a dataset.
class InvalidPartition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * n points in `dim`-dimensional Euclidean space, stored row-major.
 *
 * Invariants: n >= 1, dim >= 1, every coordinate finite. Also used to hold
 * sets of cluster centers.
 */
class Dataset {
public:
    Dataset(std::size_t dim, std::vector<double> coords);

    static Dataset from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return n_; }
    std::size_t dim() const noexcept { return dim_; }

    std::span<const double> point(std::size_t i) const noexcept {
        return {coords_.data() + i * dim_, dim_};
    }
    std::span<const double> coords() const noexcept { return coords_; }

    bool operator==(const Dataset&) const = default;

private:
    std::size_t dim_;
    std::size_t n_;
    std::vector<double> coords_;
};

/// Assignment of each point to one of k non-empty clusters.
class Partition {
public:
    Partition(std::vector<std::size_t> labels, std::size_t k);

    /// k is taken as max(label) + 1.
    static Partition from_labels(std::vector<std::size_t> labels);

    std::size_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return labels_.size(); }
    std::size_t label(std::size_t i) const noexcept { return labels_[i]; }
    std::span<const std::size_t> labels() const noexcept { return labels_; }

    std::vector<std::size_t> cardinalities() const;
    std::vector<std::size_t> members(std::size_t cluster) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<std::size_t> labels_;
    std::size_t k_;
};

/// Throws InvalidPartition unless `partition` labels exactly the points of `data`.
void validate(const Dataset& data, const Partition& partition);

/// Relabels clusters in order of first appearance.
Partition canonical(const Partition& partition);

/// True when both partitions group the points identically, ignoring label names.
bool equivalent(const Partition& a, const Partition& b);

inline double squared_distance(std::span<const double> a, std::span<const double> b) noexcept {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double diff = a[j] - b[j];
        s += diff * diff;
    }
    return s;
}

double distance(std::span<const double> a, std::span<const double> b) noexcept;

}  // namespace clusterability
