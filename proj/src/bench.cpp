#include "linsvm/bench.hpp"

#include "linsvm/baseline_solver.hpp"
#include "linsvm/detail/number_format.hpp"
#include "linsvm/exceptions.hpp"

#include <algorithm>  // std::max, std::find
#include <atomic>     // std::atomic
#include <cmath>      // std::llround
#include <cstddef>    // std::size_t
#include <cstdio>     // std::snprintf
#include <exception>  // std::exception_ptr, std::current_exception, std::rethrow_exception
#include <mutex>      // std::mutex, std::lock_guard
#include <ostream>    // std::ostream
#include <string>     // std::string
#include <thread>     // std::thread
#include <vector>     // std::vector

namespace linsvm {

std::string_view to_string(const solver_kind kind) noexcept {
    return kind == solver_kind::baseline ? "baseline" : "avsf";
}

solver_kind parse_solver_kind(const std::string_view name) {
    if (name == "baseline") {
        return solver_kind::baseline;
    }
    if (name == "avsf") {
        return solver_kind::avsf;
    }
    throw invalid_parameter_error{ "unknown solver '" + std::string{ name } + "' (expected baseline or avsf)" };
}

solve_result run_solver(const solver_kind kind, const dataset &data, const solver_config &config, const avsf_options &options) {
    if (kind == solver_kind::baseline) {
        return baseline_solve(data, config);
    }
    return avsf_solve(data, config, options);
}

namespace {

struct cell {
    double epsilon;
    double C;
    solver_kind solver;
};

comparison_row run_cell(const dataset &data, const std::string &name, const cell &c, const comparison_options &options) {
    comparison_row row;
    row.dataset_name = name;
    row.C = c.C;
    row.solver = c.solver;
    row.epsilon = c.epsilon;
    row.converged = true;

    double time_sum = 0.0;
    double objective_sum = 0.0;
    std::uint64_t step_sum = 0;
    for (std::size_t r = 0; r < options.repeats; ++r) {
        solver_config config;
        config.C = c.C;
        config.epsilon = c.epsilon;
        config.seed = options.seed + r;
        config.max_outer_iterations = options.max_outer_iterations;
        config.deadline_seconds = options.deadline_seconds;
        const solve_result result = run_solver(c.solver, data, config, options.avsf);

        time_sum += result.report.wall_time_seconds;
        objective_sum += result.report.dual_objective;
        step_sum += result.report.steps;
        row.max_kkt_violation = std::max(row.max_kkt_violation, result.report.exact_max_kkt_violation);
        row.converged = row.converged && result.report.converged;
        row.deadline_reached = row.deadline_reached || result.report.deadline_reached;
    }
    const auto repeats = static_cast<double>(options.repeats);
    row.wall_time_seconds = time_sum / repeats;
    row.dual_objective = objective_sum / repeats;
    row.steps = static_cast<std::uint64_t>(std::llround(static_cast<double>(step_sum) / repeats));
    return row;
}

}  // namespace

std::vector<comparison_row> run_comparison(const dataset &data, const std::string &dataset_name, const comparison_options &options) {
    if (options.c_grid.empty() || options.epsilons.empty()) {
        throw invalid_parameter_error{ "comparison grid is empty" };
    }
    if (options.repeats == 0) {
        throw invalid_parameter_error{ "repeats must be positive" };
    }
    if (options.jobs == 0) {
        throw invalid_parameter_error{ "jobs must be positive" };
    }
    // validate every cell up front so a bad grid value fails before any work is done
    for (const double eps : options.epsilons) {
        for (const double C : options.c_grid) {
            solver_config{ C, eps, options.max_outer_iterations, options.deadline_seconds, options.seed }.validate();
        }
    }

    std::vector<cell> cells;
    for (const double eps : options.epsilons) {
        for (const double C : options.c_grid) {
            cells.push_back(cell{ eps, C, solver_kind::baseline });
            cells.push_back(cell{ eps, C, solver_kind::avsf });
        }
    }

    std::vector<comparison_row> rows(cells.size());
    if (options.jobs == 1) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            rows[k] = run_cell(data, dataset_name, cells[k], options);
        }
        return rows;
    }

    std::atomic<std::size_t> next{ 0 };
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&]() {
        for (std::size_t k = next++; k < cells.size(); k = next++) {
            try {
                rows[k] = run_cell(data, dataset_name, cells[k], options);
            } catch (...) {
                const std::lock_guard lock{ failure_mutex };
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    {
        std::vector<std::jthread> threads;
        for (std::size_t t = 0; t < std::min(options.jobs, cells.size()); ++t) {
            threads.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return rows;
}

void write_csv(std::ostream &out, const std::vector<comparison_row> &rows) {
    using detail::format_double;
    std::string text{ csv_header };
    text += '\n';
    char time_buffer[64];
    for (const comparison_row &row : rows) {
        std::snprintf(time_buffer, sizeof(time_buffer), "%.3f", row.wall_time_seconds);
        text += row.dataset_name + ',' + format_double(row.C) + ',' + std::string{ to_string(row.solver) } + ',' + format_double(row.epsilon) + ','
                + time_buffer + ',' + std::to_string(row.steps) + ',' + format_double(row.dual_objective) + ','
                + format_double(row.max_kkt_violation) + ',' + (row.converged ? "true" : "false") + '\n';
    }
    out << text;
}

void write_table(std::ostream &out, const std::vector<comparison_row> &rows) {
    std::vector<double> epsilons;
    std::vector<double> cs;
    std::string name;
    for (const comparison_row &row : rows) {
        if (std::find(epsilons.begin(), epsilons.end(), row.epsilon) == epsilons.end()) {
            epsilons.push_back(row.epsilon);
        }
        if (std::find(cs.begin(), cs.end(), row.C) == cs.end()) {
            cs.push_back(row.C);
        }
        name = row.dataset_name;
    }

    const auto find_row = [&](const double eps, const double C, const solver_kind kind) -> const comparison_row * {
        for (const comparison_row &row : rows) {
            if (row.epsilon == eps && row.C == C && row.solver == kind) {
                return &row;
            }
        }
        return nullptr;
    };

    char buffer[64];
    bool any_star = false;
    for (const double eps : epsilons) {
        std::string text = name + ", epsilon = " + detail::format_double(eps) + '\n';
        std::snprintf(buffer, sizeof(buffer), "%-16s", "C");
        text += buffer;
        for (const double C : cs) {
            std::snprintf(buffer, sizeof(buffer), "%14s", detail::format_double(C).c_str());
            text += buffer;
        }
        text += '\n';
        for (const solver_kind kind : { solver_kind::baseline, solver_kind::avsf }) {
            for (const bool time_row : { true, false }) {
                const std::string label = std::string{ to_string(kind) } + (time_row ? " time" : " steps");
                std::snprintf(buffer, sizeof(buffer), "%-16s", label.c_str());
                text += buffer;
                for (const double C : cs) {
                    const comparison_row *row = find_row(eps, C, kind);
                    std::string cell = "-";
                    if (row != nullptr) {
                        if (time_row) {
                            std::snprintf(buffer, sizeof(buffer), "%.3f", row->wall_time_seconds);
                        } else {
                            std::snprintf(buffer, sizeof(buffer), "%.3g", static_cast<double>(row->steps));
                        }
                        cell = buffer;
                        if (!row->converged) {
                            cell += '*';
                            any_star = true;
                        }
                    }
                    std::snprintf(buffer, sizeof(buffer), "%14s", cell.c_str());
                    text += buffer;
                }
                text += '\n';
            }
        }
        text += '\n';
        out << text;
    }
    if (any_star) {
        out << "* did not converge (deadline or iteration cap); values are lower bounds\n";
    }
}

}  // namespace linsvm
