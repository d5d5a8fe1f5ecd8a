/**
 * @file
 * @brief Benchmark harness: run both solvers over a grid of (C, epsilon) cells and report time and steps.
 */

#pragma once

#include "linsvm/avsf_solver.hpp"
#include "linsvm/dataset.hpp"
#include "linsvm/solver_core.hpp"

#include <cstddef>      // std::size_t
#include <cstdint>      // std::uint64_t
#include <iosfwd>       // std::ostream
#include <optional>     // std::optional
#include <string>       // std::string
#include <string_view>  // std::string_view
#include <vector>       // std::vector

namespace linsvm {

enum class solver_kind { baseline, avsf };

[[nodiscard]] std::string_view to_string(solver_kind kind) noexcept;
/// Parses "baseline" or "avsf"; throws linsvm::invalid_parameter_error otherwise.
[[nodiscard]] solver_kind parse_solver_kind(std::string_view name);

/// Dispatch to baseline_solve() or avsf_solve().
[[nodiscard]] solve_result run_solver(solver_kind kind, const dataset &data, const solver_config &config, const avsf_options &options = {});

struct comparison_row {
    std::string dataset_name;
    double C{};
    solver_kind solver{ solver_kind::baseline };
    double epsilon{};
    /// Mean over the repeats.
    double wall_time_seconds{};
    /// Sum over the repeats divided by the repeat count, rounded to nearest.
    std::uint64_t steps{};
    /// Mean over the repeats.
    double dual_objective{};
    /// Worst over the repeats.
    double max_kkt_violation{};
    /// All repeats converged.
    bool converged{ false };
    /// Some repeat hit the deadline; the time is then a lower bound.
    bool deadline_reached{ false };
};

struct comparison_options {
    std::vector<double> c_grid{ 0.01, 0.1, 1.0, 10.0, 100.0, 1000.0 };
    std::vector<double> epsilons{ 0.01, 0.001 };
    std::size_t repeats{ 1 };
    /// Repeat r runs with seed + r.
    std::uint64_t seed{ 0 };
    std::optional<std::uint64_t> max_outer_iterations{};
    std::optional<double> deadline_seconds{};
    /// Cells run concurrently when > 1; timings are only comparable with the default 1.
    std::size_t jobs{ 1 };
    avsf_options avsf{};
};

/**
 * @brief Run every (epsilon, C, solver) cell and aggregate its repeats.
 * @details Rows are ordered by epsilon, then C, then solver (baseline first), following the grid order.
 */
[[nodiscard]] std::vector<comparison_row> run_comparison(const dataset &data, const std::string &dataset_name, const comparison_options &options);

/// The fixed CSV header, without newline.
inline constexpr std::string_view csv_header = "dataset,C,solver,epsilon,wall_time_seconds,steps,dual_objective,max_kkt_violation,converged";

void write_csv(std::ostream &out, const std::vector<comparison_row> &rows);

/**
 * @brief Human-readable table: one block per epsilon, C values as columns, time and step rows per solver.
 * @details Cells that did not converge are starred (their values are lower bounds).
 */
void write_table(std::ostream &out, const std::vector<comparison_row> &rows);

}  // namespace linsvm
