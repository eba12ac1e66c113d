#include "clusterability/oracle.hpp"

#include <stdexcept>
#include <string>

namespace clusterability {

OracleResult brute_force_optimal(const Dataset& data, std::size_t k, std::size_t max_n,
                                 Exec exec) {
    if (data.size() > max_n) {
        throw std::invalid_argument("brute-force oracle refuses n = " + std::to_string(data.size()) +
                                    " > max_n = " + std::to_string(max_n));
    }
    if (k == 0 || k > data.size()) {
        throw std::invalid_argument("brute-force oracle needs 1 <= k <= n");
    }
    auto found = kernels::enumerate_partitions(exec, data, k);
    Partition best(std::move(found.labels), k);
    const double cost = cost_centroid(data, best, Exec::serial);
    return OracleResult{std::move(best), cost, found.examined};
}

}  // namespace clusterability
