#include "clusterability/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace clusterability {

Dataset::Dataset(std::size_t dim, std::vector<double> coords)
    : dim_(dim), n_(0), coords_(std::move(coords)) {
    if (dim_ == 0) {
        throw std::invalid_argument("dataset dimension must be positive");
    }
    if (coords_.empty() || coords_.size() % dim_ != 0) {
        throw std::invalid_argument("dataset needs at least one point and a whole number of rows");
    }
    for (double v : coords_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("dataset coordinates must be finite");
        }
    }
    n_ = coords_.size() / dim_;
}

Dataset Dataset::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) {
        throw std::invalid_argument("dataset needs at least one point");
    }
    const std::size_t dim = rows.front().size();
    std::vector<double> coords;
    coords.reserve(rows.size() * dim);
    for (const auto& row : rows) {
        if (row.size() != dim) {
            throw std::invalid_argument("all points must have the same dimension");
        }
        coords.insert(coords.end(), row.begin(), row.end());
    }
    return Dataset(dim, std::move(coords));
}

Partition::Partition(std::vector<std::size_t> labels, std::size_t k)
    : labels_(std::move(labels)), k_(k) {
    if (k_ == 0) {
        throw InvalidPartition("partition needs k >= 1");
    }
    if (labels_.empty()) {
        throw InvalidPartition("partition has no labels");
    }
    std::vector<std::size_t> counts(k_, 0);
    for (std::size_t l : labels_) {
        if (l >= k_) {
            throw InvalidPartition("label " + std::to_string(l) + " out of range for k = " +
                                   std::to_string(k_));
        }
        ++counts[l];
    }
    for (std::size_t c = 0; c < k_; ++c) {
        if (counts[c] == 0) {
            throw InvalidPartition("cluster " + std::to_string(c) + " is empty");
        }
    }
}

Partition Partition::from_labels(std::vector<std::size_t> labels) {
    if (labels.empty()) {
        throw InvalidPartition("partition has no labels");
    }
    const std::size_t k = *std::max_element(labels.begin(), labels.end()) + 1;
    return Partition(std::move(labels), k);
}

std::vector<std::size_t> Partition::cardinalities() const {
    std::vector<std::size_t> counts(k_, 0);
    for (std::size_t l : labels_) ++counts[l];
    return counts;
}

std::vector<std::size_t> Partition::members(std::size_t cluster) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == cluster) out.push_back(i);
    }
    return out;
}

void validate(const Dataset& data, const Partition& partition) {
    if (partition.size() != data.size()) {
        throw InvalidPartition("partition has " + std::to_string(partition.size()) +
                               " labels but dataset has " + std::to_string(data.size()) +
                               " points");
    }
}

Partition canonical(const Partition& partition) {
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> remap(partition.k(), unset);
    std::vector<std::size_t> labels(partition.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        auto& r = remap[partition.label(i)];
        if (r == unset) r = next++;
        labels[i] = r;
    }
    return Partition(std::move(labels), partition.k());
}

bool equivalent(const Partition& a, const Partition& b) {
    if (a.size() != b.size() || a.k() != b.k()) return false;
    return canonical(a) == canonical(b);
}

double distance(std::span<const double> a, std::span<const double> b) noexcept {
    return std::sqrt(squared_distance(a, b));
}

}  // namespace clusterability
