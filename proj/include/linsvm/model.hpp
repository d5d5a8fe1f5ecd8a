/**
 * @file
 * @brief A trained linear model: dense weights plus the metadata of the run that produced it.
 */

#pragma once

#include "linsvm/dataset.hpp"
#include "linsvm/solver_core.hpp"

#include <cstddef>     // std::size_t
#include <cstdint>     // std::uint64_t
#include <filesystem>  // std::filesystem::path
#include <iosfwd>      // std::istream, std::ostream
#include <string>      // std::string
#include <vector>      // std::vector

namespace linsvm {

struct model {
    std::string solver;
    double C{ 1.0 };
    double epsilon{ 0.01 };
    std::uint64_t seed{ 0 };
    std::vector<double> weights;

    // summary of the training run; wall time is deliberately absent so files are reproducible
    std::uint64_t steps{ 0 };
    std::uint64_t outer_iterations{ 0 };
    double dual_objective{ 0.0 };
    double max_kkt_violation{ 0.0 };
    bool converged{ false };

    [[nodiscard]] std::size_t dimension() const noexcept { return weights.size(); }

    /// <w, x>; features beyond dimension() contribute nothing.
    [[nodiscard]] double decision_value(const sparse_vector &x) const noexcept { return x.dot(weights); }
    /// sign(<w, x>) with sign(0) = +1.
    [[nodiscard]] int predict(const sparse_vector &x) const noexcept { return decision_value(x) >= 0.0 ? 1 : -1; }

    [[nodiscard]] static model from_training(std::string solver, const solver_config &config, const solve_result &result);

    friend bool operator==(const model &, const model &) = default;
};

/**
 * Plain text: a `linsvm-model 1` magic line, `key value` header lines (solver, C, epsilon, seed,
 * dimension, steps, outer_iterations, dual_objective, max_kkt_violation, converged), a `weights`
 * line, then one weight per line in index order. Numbers use shortest round-trip formatting.
 */
void write_model(std::ostream &out, const model &m);
/// Throws linsvm::parse_error on malformed content.
[[nodiscard]] model read_model(std::istream &in);

void save_model(const std::filesystem::path &path, const model &m);
[[nodiscard]] model load_model(const std::filesystem::path &path);

/// Fraction of examples whose prediction matches the label.
[[nodiscard]] double accuracy(const model &m, const dataset &data);

}  // namespace linsvm
