#include "linsvm/avsf_solver.hpp"

#include <algorithm>  // std::all_of, std::clamp, std::min
#include <chrono>     // std::chrono::steady_clock, std::chrono::duration
#include <cmath>      // std::exp, std::floor
#include <cstddef>    // std::size_t
#include <span>       // std::span
#include <vector>     // std::vector

namespace linsvm {

preference_state preference_state::uniform(const std::size_t size, const avsf_options &options) {
    preference_state prefs;
    prefs.constants = options.constants;
    prefs.rule = options.rule;
    prefs.p.assign(size, 1.0);
    prefs.p_sum = static_cast<double>(size);
    return prefs;
}

void preference_state::reset_preferences() {
    p.assign(p.size(), 1.0);
    p_sum = static_cast<double>(p.size());
}

std::vector<std::size_t> build_schedule(const preference_state &prefs, random_engine &gen) {
    const std::size_t size = prefs.size();
    std::vector<std::size_t> schedule;
    schedule.reserve(size);

    double mass = prefs.p_sum;
    for (std::size_t k = 0; k < size; ++k) {
        const std::size_t remaining = size - schedule.size();
        std::size_t n = remaining;
        if (k + 1 < size) {
            const double m = mass > 0.0 ? std::min(prefs.p[k] * static_cast<double>(remaining) / mass, static_cast<double>(remaining))
                                        : static_cast<double>(remaining);
            const double whole = std::floor(m);
            n = static_cast<std::size_t>(whole);
            if (uniform01(gen) < m - whole) {
                ++n;
            }
            n = std::min(n, remaining);
        }
        schedule.insert(schedule.end(), n, k);
        mass -= prefs.p[k];
    }
    return schedule;
}

double update_preferences(const std::size_t slot, const double mu, const double g, const double squared_norm, preference_state &prefs) {
    const double delta = gain(mu, g, squared_norm);
    const double inv_size = 1.0 / static_cast<double>(prefs.size());
    if (prefs.first_sweep) {
        prefs.delta_ref += delta * inv_size;
        return delta;
    }

    const avsf_constants &k = prefs.constants;
    double p_new = prefs.p[slot];
    if (prefs.rule == preference_rule::absolute_difference) {
        p_new *= std::exp(k.c * (delta - prefs.delta_ref));
    } else if (prefs.delta_ref > 0.0) {
        p_new *= std::exp(k.c * (delta / prefs.delta_ref - 1.0));
    } else if (delta > 0.0) {
        p_new = k.p_max;
    }
    p_new = std::clamp(p_new, k.p_min, k.p_max);

    prefs.p_sum += p_new - prefs.p[slot];
    prefs.p[slot] = p_new;
    prefs.delta_ref = (1.0 - inv_size) * prefs.delta_ref + delta * inv_size;
    return delta;
}

solve_result avsf_solve(const dataset &data, const solver_config &config, const avsf_options &options, const solve_hooks &hooks) {
    config.validate();
    const double C = config.C;

    solve_result result{ solver_state::cold_start(data), training_report{} };
    solver_state &state = result.state;
    training_report &report = result.report;

    const auto start = std::chrono::steady_clock::now();
    // slot k of the preference state refers to variable variables[k]
    const std::vector<std::size_t> variables = prune_zero_norm(state, data, C);
    random_engine gen{ config.seed };

    preference_state prefs = preference_state::uniform(variables.size(), options);
    bool canstop = true;

    bool converged = variables.empty();
    while (!converged) {
        if (config.max_outer_iterations.has_value() && state.outer_iterations >= *config.max_outer_iterations) {
            break;
        }
        if (config.deadline_seconds.has_value()
            && std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >= *config.deadline_seconds) {
            report.deadline_reached = true;
            break;
        }

        const bool uniform_at_start = hooks.on_sweep && std::all_of(prefs.p.begin(), prefs.p.end(), [](const double p) { return p == 1.0; });
        double v = 0.0;
        std::vector<std::size_t> schedule = build_schedule(prefs, gen);
        fisher_yates_shuffle(std::span<std::size_t>{ schedule }, gen);
        for (const std::size_t slot : schedule) {
            const std::size_t i = variables[slot];
            const double g = gradient(i, state, data);
            const double a = state.alpha[i];
            if (a > 0.0 && -g > v) {
                v = -g;
            }
            if (a < C && g > v) {
                v = g;
            }
            const double mu = coordinate_step(i, g, state, C, data);
            const double delta = update_preferences(slot, mu, g, data.squared_norm(i), prefs);
            if (hooks.on_step) {
                hooks.on_step(step_event{ i, g, mu, delta }, state);
            }
        }
        ++state.outer_iterations;
        prefs.first_sweep = false;

        bool stop = false;
        if (v < config.epsilon) {
            if (canstop) {
                stop = true;
            } else {
                prefs.reset_preferences();
                canstop = true;
            }
        } else {
            canstop = false;
        }
        if (hooks.on_sweep) {
            hooks.on_sweep(sweep_event{ state.outer_iterations, v, schedule.size(), uniform_at_start, stop });
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
