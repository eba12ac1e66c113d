#include "clusterability/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace clusterability {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

std::size_t Rng::uniform_index(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("uniform_index needs n > 0");
    }
    const std::uint64_t bound = n;
    // Rejection on the largest multiple of n below 2^64.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

std::vector<double> random_unit_vector(Rng& rng, std::size_t dim) {
    std::vector<double> v(dim);
    double norm2 = 0.0;
    while (norm2 < 1e-24) {
        norm2 = 0.0;
        for (auto& x : v) {
            x = rng.normal();
            norm2 += x * x;
        }
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v) x *= inv;
    return v;
}

std::vector<double> uniform_in_ball(Rng& rng, std::size_t dim, double radius) {
    auto v = random_unit_vector(rng, dim);
    const double r = radius * std::pow(rng.uniform01(), 1.0 / static_cast<double>(dim));
    for (auto& x : v) x *= r;
    return v;
}

std::vector<double> random_rotation(Rng& rng, std::size_t dim) {
    std::vector<double> q(dim * dim);
    for (std::size_t row = 0; row < dim; ++row) {
        while (true) {
            for (std::size_t j = 0; j < dim; ++j) q[row * dim + j] = rng.normal();
            for (std::size_t prev = 0; prev < row; ++prev) {
                double dot = 0.0;
                for (std::size_t j = 0; j < dim; ++j) dot += q[row * dim + j] * q[prev * dim + j];
                for (std::size_t j = 0; j < dim; ++j) q[row * dim + j] -= dot * q[prev * dim + j];
            }
            double norm2 = 0.0;
            for (std::size_t j = 0; j < dim; ++j) norm2 += q[row * dim + j] * q[row * dim + j];
            if (norm2 > 1e-12) {
                const double inv = 1.0 / std::sqrt(norm2);
                for (std::size_t j = 0; j < dim; ++j) q[row * dim + j] *= inv;
                break;
            }
        }
    }
    return q;
}

}  // namespace clusterability
