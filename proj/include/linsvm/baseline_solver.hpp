/**
 * @file
 * @brief The liblinear dual coordinate descent solver: uniform random sweeps with hard shrinking.
 */

#pragma once

#include "linsvm/dataset.hpp"
#include "linsvm/solver_core.hpp"

#include <cstddef>  // std::size_t
#include <limits>   // std::numeric_limits
#include <vector>   // std::vector

namespace linsvm {

/**
 * @brief Variables currently swept by the baseline solver, plus the shrinking thresholds of the previous sweep.
 */
struct active_set {
    std::vector<std::size_t> active;
    double v_min_old{ -std::numeric_limits<double>::infinity() };
    double v_max_old{ std::numeric_limits<double>::infinity() };

    /// Restore @p all and reset both thresholds to their sentinels.
    void reset(const std::vector<std::size_t> &all) {
        active = all;
        v_min_old = -std::numeric_limits<double>::infinity();
        v_max_old = std::numeric_limits<double>::infinity();
    }
};

/**
 * @brief Train with randomized uniform sweeps over the active set and hard shrinking.
 * @details Each sweep visits the active variables in a fresh random order. A variable at 0 whose gradient
 *          is below v_min_old, or at C whose gradient is above v_max_old, is removed from the active set.
 *          Every other visit feeds the projected gradient into the v_min / v_max trackers and takes a
 *          coordinate step. When v_max - v_min < epsilon the run stops if the sweep covered all variables,
 *          otherwise the active set is restored and the thresholds reset.
 * @throws linsvm::invalid_parameter_error if @p config is invalid
 */
[[nodiscard]] solve_result baseline_solve(const dataset &data, const solver_config &config, const solve_hooks &hooks = {});

}  // namespace linsvm
