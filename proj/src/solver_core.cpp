#include "linsvm/solver_core.hpp"

#include "linsvm/exceptions.hpp"

#include <algorithm>  // std::max, std::min
#include <cmath>      // std::isfinite, std::abs
#include <cstddef>    // std::size_t
#include <stdexcept>  // std::logic_error
#include <string>     // std::to_string
#include <vector>     // std::vector

namespace linsvm {

void solver_config::validate() const {
    if (!(C > 0.0) || !std::isfinite(C)) {
        throw invalid_parameter_error{ "C must be a finite value > 0" };
    }
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw invalid_parameter_error{ "epsilon must be a finite value > 0" };
    }
    if (max_outer_iterations.has_value() && *max_outer_iterations == 0) {
        throw invalid_parameter_error{ "max_outer_iterations must be positive" };
    }
    if (deadline_seconds.has_value() && !(*deadline_seconds > 0.0)) {
        throw invalid_parameter_error{ "deadline must be > 0 seconds" };
    }
}

solver_state solver_state::cold_start(const dataset &data) {
    solver_state state;
    state.alpha.assign(data.size(), 0.0);
    state.w.assign(data.dimension(), 0.0);
    return state;
}

double gradient(const std::size_t i, const solver_state &state, const dataset &data) {
    return 1.0 - data.label(i) * data.example(i).dot(state.w);
}

double coordinate_step(const std::size_t i, const double g, solver_state &state, const double C, const dataset &data) {
    const double q = data.squared_norm(i);
    if (!(q > 0.0)) {
        throw std::logic_error{ "coordinate_step: example " + std::to_string(i) + " has zero norm" };
    }
    const double alpha_old = state.alpha[i];
    const double alpha_new = std::min(std::max(alpha_old + g / q, 0.0), C);
    const double mu = alpha_new - alpha_old;
    state.alpha[i] = alpha_new;
    if (mu != 0.0) {
        data.example(i).add_to(state.w, mu * data.label(i));
    }
    ++state.steps;
    return mu;
}

std::vector<double> recompute_weights(const std::span<const double> alpha, const dataset &data) {
    std::vector<double> w(data.dimension(), 0.0);
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (alpha[i] != 0.0) {
            data.example(i).add_to(w, data.label(i) * alpha[i]);
        }
    }
    return w;
}

double dual_objective(const std::span<const double> alpha, const dataset &data) {
    double linear = 0.0;
    for (const double a : alpha) {
        linear += a;
    }
    double quadratic = 0.0;
    for (const double wj : recompute_weights(alpha, data)) {
        quadratic += wj * wj;
    }
    return linear - 0.5 * quadratic;
}

double exact_max_violation(const std::span<const double> alpha, const dataset &data, const double C) {
    const std::vector<double> w = recompute_weights(alpha, data);
    double worst = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double g = 1.0 - data.label(i) * data.example(i).dot(w);
        worst = std::max(worst, kkt_violation(alpha[i], g, C));
    }
    return worst;
}

double max_abs_difference(const std::span<const double> a, const std::span<const double> b) {
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        worst = std::max(worst, std::abs(a[j] - b[j]));
    }
    return worst;
}

std::vector<std::size_t> prune_zero_norm(solver_state &state, const dataset &data, const double C) {
    std::vector<std::size_t> kept;
    kept.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (data.squared_norm(i) > 0.0) {
            kept.push_back(i);
        } else {
            state.alpha[i] = C;
            data.example(i).add_to(state.w, C * data.label(i));
        }
    }
    return kept;
}

}  // namespace linsvm
