/**
 * @file
 * @brief State and coordinate-level mathematics of dual coordinate ascent for the linear SVM without bias.
 *
 * The dual problem is
 *
 *     max_alpha  W(alpha) = sum_i alpha_i - 1/2 || sum_i y_i alpha_i x_i ||^2   s.t.  0 <= alpha_i <= C,
 *
 * and the solvers maintain w = sum_i y_i alpha_i x_i alongside alpha so that a partial derivative costs
 * one sparse inner product.
 */

#pragma once

#include "linsvm/dataset.hpp"

#include <cstddef>     // std::size_t
#include <cstdint>     // std::uint64_t
#include <functional>  // std::function
#include <optional>    // std::optional
#include <span>        // std::span
#include <vector>      // std::vector

namespace linsvm {

struct solver_config {
    /// Regularization parameter, the upper bound of every dual variable.
    double C{ 1.0 };
    /// Stopping tolerance on the (approximate, in-sweep) KKT violation.
    double epsilon{ 0.01 };
    /// Outer iteration cap; unbounded when empty.
    std::optional<std::uint64_t> max_outer_iterations{};
    /// Wall-clock budget for the core loop in seconds; unbounded when empty.
    std::optional<double> deadline_seconds{};
    std::uint64_t seed{ 0 };

    /// Throws linsvm::invalid_parameter_error unless C > 0, epsilon > 0, and the optional limits are positive.
    void validate() const;
};

struct solver_state {
    std::vector<double> alpha;
    /// Maintained weight vector, sum_i y_i alpha_i x_i up to floating-point drift.
    std::vector<double> w;
    std::uint64_t steps{ 0 };
    std::uint64_t outer_iterations{ 0 };

    /// alpha = 0, w = 0.
    [[nodiscard]] static solver_state cold_start(const dataset &data);
};

struct training_report {
    /// Core optimization loop only; excludes data loading and the final diagnostics.
    double wall_time_seconds{ 0.0 };
    std::uint64_t steps{ 0 };
    std::uint64_t outer_iterations{ 0 };
    double dual_objective{ 0.0 };
    double exact_max_kkt_violation{ 0.0 };
    bool converged{ false };
    /// The run was stopped by solver_config::deadline_seconds; its time is a lower bound.
    bool deadline_reached{ false };
};

struct solve_result {
    solver_state state;
    training_report report;
};

/// Everything a caller may want to know about one coordinate step.
struct step_event {
    std::size_t index;
    double gradient;
    double step;
    double gain;
};

/// Summary of one finished outer iteration.
struct sweep_event {
    std::uint64_t outer_iteration;
    /// The stopping statistic of the sweep: v_max - v_min for the baseline, v for AVSF.
    double violation;
    /// Number of coordinate steps performed during the sweep.
    std::size_t visits;
    /// AVSF only: preferences were uniform when the sweep started.
    bool uniform_preferences{ true };
    bool stopped{ false };
};

/// Optional instrumentation; both callbacks may be empty.
struct solve_hooks {
    std::function<void(const step_event &, const solver_state &)> on_step{};
    std::function<void(const sweep_event &)> on_sweep{};
};

/// g_i = 1 - y_i <x_i, w> using the maintained weight vector.
[[nodiscard]] double gradient(std::size_t i, const solver_state &state, const dataset &data);

/**
 * @brief Solve the one-dimensional sub-problem for variable @p i exactly and apply it.
 * @details The new value is clip(alpha_i + g_i / ||x_i||^2, [0, C]), so the box holds exactly; the step
 *          mu = alpha_new - alpha_old is added to w as mu * y_i * x_i and the step counter is incremented.
 * @return the step mu
 * @throws std::logic_error if x_i has zero norm (such variables are pruned by prune_zero_norm())
 */
double coordinate_step(std::size_t i, double g, solver_state &state, double C, const dataset &data);

/// Dual objective increase of a step: mu * (g - mu / 2 * ||x||^2).
[[nodiscard]] constexpr double gain(const double mu, const double g, const double squared_norm) noexcept {
    return mu * (g - mu / 2.0 * squared_norm);
}

/// sum_i y_i alpha_i x_i accumulated from scratch in index order.
[[nodiscard]] std::vector<double> recompute_weights(std::span<const double> alpha, const dataset &data);

/// W(alpha), evaluated with a freshly recomputed weight sum (never the maintained w).
[[nodiscard]] double dual_objective(std::span<const double> alpha, const dataset &data);
[[nodiscard]] inline double dual_objective(const solver_state &state, const dataset &data) {
    return dual_objective(state.alpha, data);
}

/// Per-variable KKT violation: |g| inside the box, max{0, g} at 0, max{0, -g} at C.
[[nodiscard]] constexpr double kkt_violation(const double alpha_i, const double g, const double C) noexcept {
    if (alpha_i <= 0.0) {
        return g > 0.0 ? g : 0.0;
    }
    if (alpha_i >= C) {
        return g < 0.0 ? -g : 0.0;
    }
    return g < 0.0 ? -g : g;
}

/// Maximal KKT violation with every gradient recomputed from scratch: the O(l d) optimality certificate.
[[nodiscard]] double exact_max_violation(std::span<const double> alpha, const dataset &data, double C);
[[nodiscard]] inline double exact_max_violation(const solver_state &state, const dataset &data, const double C) {
    return exact_max_violation(state.alpha, data, C);
}

/// ||a - b||_inf; both spans must have equal length.
[[nodiscard]] double max_abs_difference(std::span<const double> a, std::span<const double> b);

/**
 * @brief Zero-norm examples have g_i = 1 regardless of w, so their optimum is alpha_i = C.
 * @details Sets those variables to C (w is unaffected) and returns the indices of all other variables,
 *          in increasing order. The solvers only ever visit the returned indices.
 */
std::vector<std::size_t> prune_zero_norm(solver_state &state, const dataset &data, double C);

}  // namespace linsvm
