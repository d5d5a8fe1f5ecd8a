#include "linsvm/baseline_solver.hpp"

#include "linsvm/random.hpp"

#include <algorithm>  // std::min, std::max
#include <chrono>     // std::chrono::steady_clock, std::chrono::duration
#include <cstddef>    // std::size_t
#include <limits>     // std::numeric_limits
#include <span>       // std::span
#include <vector>     // std::vector

namespace linsvm {

namespace {

// Projected gradient: the part of g that is not blocked by an active bound.
double projected_gradient(const double alpha_i, const double g, const double C) {
    if (alpha_i == 0.0) {
        return std::max(g, 0.0);
    }
    if (alpha_i == C) {
        return std::min(g, 0.0);
    }
    return g;
}

}  // namespace

solve_result baseline_solve(const dataset &data, const solver_config &config, const solve_hooks &hooks) {
    config.validate();
    constexpr double inf = std::numeric_limits<double>::infinity();
    const double C = config.C;

    solve_result result{ solver_state::cold_start(data), training_report{} };
    solver_state &state = result.state;
    training_report &report = result.report;

    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::size_t> all = prune_zero_norm(state, data, C);
    random_engine gen{ config.seed };

    active_set set;
    set.reset(all);
    std::vector<std::size_t> kept;
    kept.reserve(all.size());

    bool converged = all.empty();
    while (!converged) {
        if (config.max_outer_iterations.has_value() && state.outer_iterations >= *config.max_outer_iterations) {
            break;
        }
        if (config.deadline_seconds.has_value()
            && std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >= *config.deadline_seconds) {
            report.deadline_reached = true;
            break;
        }

        double v_min = inf;
        double v_max = -inf;
        std::size_t visits = 0;
        fisher_yates_shuffle(std::span<std::size_t>{ set.active }, gen);
        kept.clear();
        for (const std::size_t i : set.active) {
            const double g = gradient(i, state, data);
            const double a = state.alpha[i];
            if ((a == 0.0 && g < set.v_min_old) || (a == C && g > set.v_max_old)) {
                continue;
            }
            kept.push_back(i);
            const double pg = projected_gradient(a, g, C);
            v_min = std::min(v_min, pg);
            v_max = std::max(v_max, pg);
            const double mu = coordinate_step(i, g, state, C, data);
            ++visits;
            if (hooks.on_step) {
                hooks.on_step(step_event{ i, g, mu, gain(mu, g, data.squared_norm(i)) }, state);
            }
        }
        ++state.outer_iterations;
        set.active.swap(kept);

        // An untouched sweep leaves v_max - v_min = -inf, which takes the convergence path.
        const double spread = v_max - v_min;
        bool stop = false;
        if (spread < config.epsilon) {
            if (set.active.size() == all.size()) {
                stop = true;
            } else {
                set.reset(all);
            }
        } else {
            set.v_min_old = v_min < 0.0 ? v_min : -inf;
            set.v_max_old = v_max > 0.0 ? v_max : inf;
        }
        if (hooks.on_sweep) {
            hooks.on_sweep(sweep_event{ state.outer_iterations, spread, visits, true, stop });
        }
        converged = stop;
    }
    report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    report.steps = state.steps;
    report.outer_iterations = state.outer_iterations;
    report.converged = converged;
    report.dual_objective = dual_objective(state, data);
    report.exact_max_kkt_violation = exact_max_violation(state, data, C);
    return result;
}

}  // namespace linsvm
