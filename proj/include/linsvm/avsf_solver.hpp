/**
 * @file
 * @brief Dual coordinate ascent with adaptive variable selection frequencies (AVSF).
 *
 * Every variable carries a preference p_i in [p_min, p_max]; a sweep visits variable i about
 * l * p_i / sum_j p_j times. After each step the preference is scaled by exp(h), where h compares the
 * step's dual gain to a fading average of recent gains. Variables stuck at a bound produce zero gain
 * and decay to p_min instead of being removed outright ("soft" shrinking).
 */

#pragma once

#include "linsvm/dataset.hpp"
#include "linsvm/random.hpp"
#include "linsvm/solver_core.hpp"

#include <cstddef>  // std::size_t
#include <vector>   // std::vector

namespace linsvm {

/// How a step's gain is compared to the reference gain.
enum class preference_rule {
    /// h = c * (gain / reference - 1)
    relative,
    /// h = c * (gain - reference); not scale invariant, kept for experimentation
    absolute_difference,
};

struct avsf_constants {
    double c{ 1.0 / 5.0 };
    double p_min{ 1.0 / 20.0 };
    double p_max{ 20.0 };
};

struct avsf_options {
    avsf_constants constants{};
    preference_rule rule{ preference_rule::relative };
};

/**
 * @brief Per-run preference bookkeeping. Slot k refers to the k-th variable the solver schedules.
 */
struct preference_state {
    std::vector<double> p;
    /// Incrementally maintained sum of p.
    double p_sum{ 0.0 };
    /// Fading average of the gains, the yardstick for each new gain.
    double delta_ref{ 0.0 };
    /// During the first sweep gains only calibrate delta_ref.
    bool first_sweep{ true };
    avsf_constants constants{};
    preference_rule rule{ preference_rule::relative };

    /// All preferences 1, delta_ref 0, in the first sweep.
    [[nodiscard]] static preference_state uniform(std::size_t size, const avsf_options &options = {});

    /// p = (1, ..., 1), p_sum = size; delta_ref and first_sweep are left untouched.
    void reset_preferences();

    [[nodiscard]] std::size_t size() const noexcept { return p.size(); }
};

/**
 * @brief Draw a schedule of exactly size() slots realizing the relative frequencies p_k / p_sum.
 * @details Systematic sampling with stochastic rounding: walking the slots in order, slot k receives
 *          m = p_k * (remaining positions) / (remaining preference mass) entries, rounded up with
 *          probability frac(m). The final slot takes whatever positions remain. Entries are grouped by
 *          slot; the caller shuffles them.
 */
[[nodiscard]] std::vector<std::size_t> build_schedule(const preference_state &prefs, random_engine &gen);

/**
 * @brief Adapt the preference of @p slot after a step @p mu taken at gradient @p g.
 * @details In the first sweep the gain is only accumulated into delta_ref (as an average over the slots).
 *          Afterwards p_slot is multiplied by exp(h) and clipped to [p_min, p_max], p_sum follows the
 *          change, and delta_ref fades towards the new gain with weight 1 / size(). With delta_ref = 0,
 *          a zero gain leaves p unchanged and a positive gain sets it to p_max.
 * @return the gain of the step
 */
double update_preferences(std::size_t slot, double mu, double g, double squared_norm, preference_state &prefs);

/**
 * @brief Train with preference-weighted schedules, gain-driven adaptation, and the canstop protocol.
 * @details A sweep with in-sweep KKT violation v < epsilon ends the run only if the preferences were
 *          uniform at its start; otherwise the preferences are reset and one more sweep must confirm.
 * @throws linsvm::invalid_parameter_error if @p config is invalid
 */
[[nodiscard]] solve_result avsf_solve(const dataset &data, const solver_config &config, const avsf_options &options = {}, const solve_hooks &hooks = {});

}  // namespace linsvm
