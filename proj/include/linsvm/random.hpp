/**
 * @file
 * @brief Seeded random number generation shared by the data generator and both solvers.
 */

#pragma once

#include <cstddef>   // std::size_t
#include <cstdint>   // std::uint64_t
#include <random>    // std::mt19937_64, std::uniform_int_distribution, std::uniform_real_distribution
#include <span>      // std::span
#include <utility>   // std::swap

namespace linsvm {

/// The single generator type used everywhere; a run is reproducible given its seed.
using random_engine = std::mt19937_64;

/// Uniform draw from [0, 1).
[[nodiscard]] inline double uniform01(random_engine &gen) {
    return std::uniform_real_distribution<double>{ 0.0, 1.0 }(gen);
}

/// Uniform draw from {0, ..., n - 1}; @p n must be positive.
[[nodiscard]] inline std::size_t uniform_below(random_engine &gen, const std::size_t n) {
    return std::uniform_int_distribution<std::size_t>{ 0, n - 1 }(gen);
}

/**
 * @brief In-place Fisher-Yates shuffle driven by @p gen.
 * @details Every permutation of @p items is equally likely.
 */
template <typename T>
void fisher_yates_shuffle(std::span<T> items, random_engine &gen) {
    for (std::size_t k = items.size(); k > 1; --k) {
        const std::size_t j = uniform_below(gen, k);
        std::swap(items[k - 1], items[j]);
    }
}

}  // namespace linsvm
