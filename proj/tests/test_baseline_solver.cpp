#include "linsvm/baseline_solver.hpp"
#include "linsvm/random.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <vector>

using namespace linsvm;
using linsvm::test::dense_dataset;

TEST(FisherYates, EveryOrderOfFiveEquallyLikely) {
    random_engine gen{ 99 };
    std::map<std::array<int, 5>, int> counts;
    constexpr int sweeps = 10000;
    for (int s = 0; s < sweeps; ++s) {
        std::array<int, 5> order{ 0, 1, 2, 3, 4 };
        fisher_yates_shuffle(std::span<int>{ order }, gen);
        ++counts[order];
    }
    ASSERT_EQ(counts.size(), 120u);
    const double p = 1.0 / 120.0;
    const double expected = sweeps * p;
    const double sigma = std::sqrt(sweeps * p * (1.0 - p));
    for (const auto &[order, count] : counts) {
        EXPECT_LE(std::abs(count - expected), 4.0 * sigma);
    }
}

TEST(BaselineSolve, SingleExample) {
    const dataset data = dense_dataset({ { 0.5, 1.0 } }, { 1 });
    const solve_result r = baseline_solve(data, { 1.0, 0.01 });
    EXPECT_TRUE(r.report.converged);
    EXPECT_LE(r.report.outer_iterations, 2u);
    EXPECT_LE(r.report.exact_max_kkt_violation, 0.01);
    // closed form: alpha = 1 / ||x||^2 = 0.8
    EXPECT_NEAR(r.state.alpha[0], 0.8, 1e-15);
}

TEST(BaselineSolve, TinyCPutsMostVariablesAtTheBound) {
    const dataset data = generate_synthetic({ 21, 400, 20, 0.5, 0.2 });
    const solver_config config{ 0.01, 0.001 };
    const solve_result r = baseline_solve(data, config);
    EXPECT_TRUE(r.report.converged);
    EXPECT_LE(r.report.exact_max_kkt_violation, 2.0 * config.epsilon);
    const auto at_upper = std::count(r.state.alpha.begin(), r.state.alpha.end(), config.C);
    EXPECT_GT(at_upper, 200);
}

TEST(BaselineSolve, OptimalityCertificateAcrossC) {
    const dataset data = generate_synthetic({ 2, 300, 25, 0.3, 0.1 });
    for (const double C : { 0.01, 1.0, 100.0 }) {
        const solve_result r = baseline_solve(data, { C, 0.001 });
        EXPECT_TRUE(r.report.converged) << C;
        EXPECT_LE(r.report.exact_max_kkt_violation, 0.002) << C;
        for (const double a : r.state.alpha) {
            ASSERT_GE(a, 0.0);
            ASSERT_LE(a, C);
        }
        EXPECT_DOUBLE_EQ(r.report.dual_objective, dual_objective(r.state, data));
        EXPECT_EQ(r.report.steps, r.state.steps);
    }
}

TEST(BaselineSolve, ShrunkVariablesStayUntouchedUntilReset) {
    const dataset data = generate_synthetic({ 6, 300, 20, 0.3, 0.15 });
    const solver_config config{ 10.0, 0.001 };

    std::set<std::size_t> previous;
    std::set<std::size_t> current;
    bool previous_was_reset = true;
    bool saw_shrinking = false;
    std::size_t checked = 0;
    solve_hooks hooks;
    hooks.on_step = [&](const step_event &e, const solver_state &) { current.insert(e.index); };
    hooks.on_sweep = [&](const sweep_event &e) {
        if (!previous_was_reset) {
            EXPECT_TRUE(std::includes(previous.begin(), previous.end(), current.begin(), current.end()))
                << "sweep " << e.outer_iteration << " visited a shrunk variable";
            saw_shrinking = saw_shrinking || current.size() < previous.size();
            ++checked;
        }
        // a reset happens exactly when the spread test passes without stopping
        previous_was_reset = e.violation < config.epsilon && !e.stopped;
        previous.swap(current);
        current.clear();
    };
    const solve_result r = baseline_solve(data, config, hooks);
    EXPECT_TRUE(r.report.converged);
    EXPECT_TRUE(saw_shrinking);
    EXPECT_GT(checked, 10u);
}

TEST(BaselineSolve, TerminatesOnlyAfterAFullSweep) {
    const dataset data = generate_synthetic({ 7, 250, 15, 0.4, 0.1 });
    sweep_event last{};
    std::size_t stops = 0;
    solve_hooks hooks;
    hooks.on_sweep = [&](const sweep_event &e) {
        last = e;
        stops += e.stopped ? 1 : 0;
    };
    const solve_result r = baseline_solve(data, { 1.0, 0.001 }, hooks);
    EXPECT_TRUE(r.report.converged);
    EXPECT_EQ(stops, 1u);
    EXPECT_TRUE(last.stopped);
    EXPECT_EQ(last.visits, data.size());
    EXPECT_LT(last.violation, 0.001);
}

TEST(BaselineSolve, DeterministicGivenSeed) {
    const dataset data = generate_synthetic({ 8, 200, 20, 0.3, 0.1 });
    const solver_config config{ 5.0, 0.01, {}, {}, 42 };
    const solve_result a = baseline_solve(data, config);
    const solve_result b = baseline_solve(data, config);
    EXPECT_EQ(a.state.alpha, b.state.alpha);
    EXPECT_EQ(a.state.w, b.state.w);
    EXPECT_EQ(a.report.steps, b.report.steps);
}

TEST(BaselineSolve, IterationCapReportsNotConverged) {
    const dataset data = generate_synthetic({ 9, 300, 20, 0.3, 0.15 });
    const solve_result r = baseline_solve(data, { 100.0, 1e-6, 3 });
    EXPECT_FALSE(r.report.converged);
    EXPECT_FALSE(r.report.deadline_reached);
    EXPECT_EQ(r.report.outer_iterations, 3u);
}

TEST(BaselineSolve, DeadlineReportsNotConverged) {
    const dataset data = generate_synthetic({ 10, 2000, 100, 0.1, 0.2 });
    const solve_result r = baseline_solve(data, { 1e4, 1e-9, {}, 0.02 });
    EXPECT_FALSE(r.report.converged);
    EXPECT_TRUE(r.report.deadline_reached);
    EXPECT_GE(r.report.wall_time_seconds, 0.02);
}

TEST(BaselineSolve, ZeroNormExamplesArePrunedToC) {
    const dataset data = dense_dataset({ { 1.0, 0.0 }, { 0.0, 0.0 }, { 0.0, -1.0 }, { 0.0, 0.0 } }, { 1, -1, 1, 1 });
    std::set<std::size_t> visited;
    solve_hooks hooks;
    hooks.on_step = [&](const step_event &e, const solver_state &) { visited.insert(e.index); };
    const solve_result r = baseline_solve(data, { 3.0, 1e-6 }, hooks);
    EXPECT_TRUE(r.report.converged);
    EXPECT_EQ(r.state.alpha[1], 3.0);
    EXPECT_EQ(r.state.alpha[3], 3.0);
    EXPECT_EQ(visited, (std::set<std::size_t>{ 0, 2 }));
    EXPECT_LE(r.report.exact_max_kkt_violation, 1e-6);
}

TEST(BaselineSolve, AllZeroNormData) {
    const dataset data = dense_dataset({ { 0.0 }, { 0.0 } }, { 1, -1 });
    const solve_result r = baseline_solve(data, { 2.0, 0.01 });
    EXPECT_TRUE(r.report.converged);
    EXPECT_EQ(r.report.steps, 0u);
    EXPECT_EQ(r.report.exact_max_kkt_violation, 0.0);
}
