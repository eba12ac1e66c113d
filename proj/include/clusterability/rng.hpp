#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace clusterability {

/// SplitMix64 finalizer; used to decorrelate user seeds and derive streams.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed of independent stream `stream` under master seed `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/**
 * Portable random source: std::mt19937_64 (whose output sequence the standard
 * fixes) seeded through SplitMix64, with hand-written variate transforms.
 * std:: distributions are avoided because their output is implementation
 * defined; everything here yields the same stream on any conforming platform.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01();
    double uniform(double lo, double hi);

    /// Unbiased uniform integer on [0, n); n must be positive.
    std::size_t uniform_index(std::size_t n);

    /// Standard normal via the Marsaglia polar method.
    double normal();

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[uniform_index(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

std::vector<double> random_unit_vector(Rng& rng, std::size_t dim);

/// Uniform sample from the closed ball of `radius` around the origin.
std::vector<double> uniform_in_ball(Rng& rng, std::size_t dim, double radius);

/// Haar-distributed orthogonal matrix (row-major dim x dim), Gram-Schmidt on Gaussian rows.
std::vector<double> random_rotation(Rng& rng, std::size_t dim);

}  // namespace clusterability
