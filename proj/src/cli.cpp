#include "linsvm/cli.hpp"

#include "linsvm/bench.hpp"
#include "linsvm/dataset.hpp"
#include "linsvm/detail/number_format.hpp"
#include "linsvm/exceptions.hpp"
#include "linsvm/model.hpp"
#include "linsvm/solver_core.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>    // std::reverse
#include <cstdint>      // std::uint64_t
#include <filesystem>   // std::filesystem::path
#include <fstream>      // std::ofstream
#include <optional>     // std::optional
#include <ostream>      // std::ostream
#include <sstream>      // std::ostringstream
#include <string>       // std::string
#include <vector>       // std::vector

namespace linsvm {

namespace {

std::optional<std::uint64_t> parse_max_outer(const std::string &text) {
    if (text == "unbounded") {
        return std::nullopt;
    }
    const auto value = detail::parse_unsigned<std::uint64_t>(text);
    if (!value.has_value() || *value == 0) {
        throw invalid_parameter_error{ "--max-outer must be a positive integer or 'unbounded'" };
    }
    return value;
}

std::optional<double> parse_deadline(const double seconds) {
    if (seconds == 0.0) {
        return std::nullopt;
    }
    if (!(seconds > 0.0)) {
        throw invalid_parameter_error{ "--deadline must be positive" };
    }
    return seconds;
}

preference_rule parse_rule(const std::string &name) {
    if (name == "relative") {
        return preference_rule::relative;
    }
    if (name == "absolute") {
        return preference_rule::absolute_difference;
    }
    throw invalid_parameter_error{ "--preference-rule must be 'relative' or 'absolute'" };
}

std::vector<double> parse_real_list(const std::string &text, const std::string &flag) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto value = detail::parse_double(token);
        if (!value.has_value()) {
            throw invalid_parameter_error{ flag + ": '" + token + "' is not a number" };
        }
        values.push_back(*value);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return values;
}

template <typename Write>
void write_file(const std::filesystem::path &path, Write &&write) {
    std::ofstream out{ path, std::ios::binary };
    if (!out) {
        throw io_error{ "cannot open '" + path.string() + "' for writing" };
    }
    write(out);
    if (!out) {
        throw io_error{ "failed writing '" + path.string() + "'" };
    }
}

nlohmann::json report_json(const model &m, const training_report &report) {
    return nlohmann::json{
        { "solver", m.solver },
        { "C", m.C },
        { "epsilon", m.epsilon },
        { "seed", m.seed },
        { "wall_time_seconds", report.wall_time_seconds },
        { "steps", report.steps },
        { "outer_iterations", report.outer_iterations },
        { "dual_objective", report.dual_objective },
        { "max_kkt_violation", report.exact_max_kkt_violation },
        { "converged", report.converged },
        { "deadline_reached", report.deadline_reached },
    };
}

struct train_flags {
    std::string data;
    std::string solver{ "avsf" };
    double C{ 1.0 };
    double epsilon{ 0.01 };
    std::uint64_t seed{ 0 };
    std::string max_outer{ "unbounded" };
    double deadline{ 0.0 };
    std::string rule{ "relative" };
    std::string model_out;
    std::string report_out;
};

int cmd_train(const train_flags &flags, std::ostream &out) {
    const solver_kind kind = parse_solver_kind(flags.solver);
    solver_config config;
    config.C = flags.C;
    config.epsilon = flags.epsilon;
    config.seed = flags.seed;
    config.max_outer_iterations = parse_max_outer(flags.max_outer);
    config.deadline_seconds = parse_deadline(flags.deadline);
    config.validate();
    avsf_options options;
    options.rule = parse_rule(flags.rule);

    const dataset data = load_libsvm(flags.data);
    const solve_result result = run_solver(kind, data, config, options);
    const model m = model::from_training(std::string{ to_string(kind) }, config, result);
    const training_report &r = result.report;

    if (!flags.model_out.empty()) {
        save_model(flags.model_out, m);
    }
    if (!flags.report_out.empty()) {
        write_file(flags.report_out, [&](std::ostream &file) { file << report_json(m, r).dump(2) << '\n'; });
    }

    char time_buffer[32];
    std::snprintf(time_buffer, sizeof(time_buffer), "%.3f", r.wall_time_seconds);
    out << "solver " << m.solver << ", C " << detail::format_double(m.C) << ", epsilon " << detail::format_double(m.epsilon)
        << ", seed " << m.seed << '\n'
        << "examples " << data.size() << ", dimension " << data.dimension() << '\n'
        << "time " << time_buffer << " s, steps " << r.steps << ", outer iterations " << r.outer_iterations << '\n'
        << "dual objective " << detail::format_double(r.dual_objective) << ", max KKT violation "
        << detail::format_double(r.exact_max_kkt_violation) << ", converged " << (r.converged ? "true" : "false")
        << (r.deadline_reached ? " (deadline reached)" : "") << '\n';
    return 0;
}

struct compare_flags {
    std::string data;
    std::string c_grid{ "0.01,0.1,1,10,100,1000" };
    std::string epsilons{ "0.01,0.001" };
    std::size_t repeats{ 1 };
    std::uint64_t seed{ 0 };
    std::string max_outer{ "unbounded" };
    double deadline{ 0.0 };
    std::size_t jobs{ 1 };
    std::string rule{ "relative" };
    std::string out;
};

int cmd_compare(const compare_flags &flags, std::ostream &out) {
    comparison_options options;
    options.c_grid = parse_real_list(flags.c_grid, "--c-grid");
    options.epsilons = parse_real_list(flags.epsilons, "--epsilons");
    options.repeats = flags.repeats;
    options.seed = flags.seed;
    options.max_outer_iterations = parse_max_outer(flags.max_outer);
    options.deadline_seconds = parse_deadline(flags.deadline);
    options.jobs = flags.jobs;
    options.avsf.rule = parse_rule(flags.rule);

    const dataset data = load_libsvm(flags.data);
    const std::string name = std::filesystem::path{ flags.data }.stem().string();
    const std::vector<comparison_row> rows = run_comparison(data, name, options);

    write_table(out, rows);
    if (flags.out.empty()) {
        write_csv(out, rows);
    } else {
        write_file(flags.out, [&](std::ostream &file) { write_csv(file, rows); });
    }
    return 0;
}

struct predict_flags {
    std::string model;
    std::string data;
    std::string predictions_out;
};

int cmd_predict(const predict_flags &flags, std::ostream &out) {
    const model m = load_model(flags.model);
    const dataset data = load_libsvm(flags.data);
    std::size_t correct = 0;
    std::string predictions;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const int y = m.predict(data.example(i));
        correct += y == data.label(i) ? 1 : 0;
        predictions += y > 0 ? "+1\n" : "-1\n";
    }
    if (!flags.predictions_out.empty()) {
        write_file(flags.predictions_out, [&](std::ostream &file) { file << predictions; });
    }
    out << "accuracy " << detail::format_double(static_cast<double>(correct) / static_cast<double>(data.size())) << " (" << correct << '/'
        << data.size() << ")\n";
    return 0;
}

int cmd_gen_data(const synthetic_spec &spec, const std::string &path, std::ostream &out) {
    const dataset data = generate_synthetic(spec);
    save_libsvm(path, data);
    out << "wrote " << data.size() << " examples, dimension " << data.dimension() << " to " << path << '\n';
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{ "Linear SVM training with dual coordinate descent (baseline and AVSF solvers)", "linsvm" };
    app.require_subcommand(1);

    train_flags train;
    CLI::App *train_cmd = app.add_subcommand("train", "Train one model and report time and update steps");
    train_cmd->add_option("--data", train.data, "libsvm training file")->required();
    train_cmd->add_option("--solver", train.solver, "baseline or avsf")->capture_default_str();
    train_cmd->add_option("--c", train.C, "regularization parameter C")->capture_default_str();
    train_cmd->add_option("--epsilon", train.epsilon, "stopping tolerance")->capture_default_str();
    train_cmd->add_option("--seed", train.seed, "random seed")->capture_default_str();
    train_cmd->add_option("--max-outer", train.max_outer, "outer iteration cap or 'unbounded'")->capture_default_str();
    train_cmd->add_option("--deadline", train.deadline, "core loop time budget in seconds (0: none)")->capture_default_str();
    train_cmd->add_option("--preference-rule", train.rule, "AVSF gain comparison: relative or absolute")->capture_default_str();
    train_cmd->add_option("--model-out", train.model_out, "write the model here");
    train_cmd->add_option("--report-out", train.report_out, "write a JSON training report here");

    compare_flags compare;
    CLI::App *compare_cmd = app.add_subcommand("compare", "Run both solvers over a grid of C and epsilon values");
    compare_cmd->add_option("--data", compare.data, "libsvm training file")->required();
    compare_cmd->add_option("--c-grid", compare.c_grid, "comma separated C values")->capture_default_str();
    compare_cmd->add_option("--epsilons", compare.epsilons, "comma separated epsilon values")->capture_default_str();
    compare_cmd->add_option("--repeats", compare.repeats, "runs per cell, seeds seed..seed+repeats-1")->capture_default_str();
    compare_cmd->add_option("--seed", compare.seed, "base seed")->capture_default_str();
    compare_cmd->add_option("--max-outer", compare.max_outer, "outer iteration cap or 'unbounded'")->capture_default_str();
    compare_cmd->add_option("--deadline", compare.deadline, "per-run time budget in seconds (0: none)")->capture_default_str();
    compare_cmd->add_option("--jobs", compare.jobs, "cells run concurrently (timings are only meaningful with 1)")->capture_default_str();
    compare_cmd->add_option("--preference-rule", compare.rule, "AVSF gain comparison: relative or absolute")->capture_default_str();
    compare_cmd->add_option("--out", compare.out, "CSV output path (default: stdout after the table)");

    predict_flags predict;
    CLI::App *predict_cmd = app.add_subcommand("predict", "Score a libsvm file with a trained model");
    predict_cmd->add_option("--model", predict.model, "model file")->required();
    predict_cmd->add_option("--data", predict.data, "libsvm file")->required();
    predict_cmd->add_option("--predictions-out", predict.predictions_out, "write one predicted label per line");

    synthetic_spec gen;
    std::string gen_out;
    CLI::App *gen_cmd = app.add_subcommand("gen-data", "Write a seeded synthetic data set in libsvm format");
    gen_cmd->add_option("--seed", gen.seed, "random seed")->capture_default_str();
    gen_cmd->add_option("--n", gen.n_examples, "number of examples")->capture_default_str();
    gen_cmd->add_option("--d", gen.dimension, "dimension")->capture_default_str();
    gen_cmd->add_option("--density", gen.density, "fraction of non-zero features, in (0, 1]")->capture_default_str();
    gen_cmd->add_option("--noise", gen.noise, "label flip probability (capped at 0.5)")->capture_default_str();
    gen_cmd->add_option("--out", gen_out, "output path")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }

    try {
        if (train_cmd->parsed()) {
            return cmd_train(train, out);
        }
        if (compare_cmd->parsed()) {
            return cmd_compare(compare, out);
        }
        if (predict_cmd->parsed()) {
            return cmd_predict(predict, out);
        }
        return cmd_gen_data(gen, gen_out, out);
    } catch (const exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace linsvm
