#include "linsvm/model.hpp"

#include "linsvm/detail/number_format.hpp"
#include "linsvm/exceptions.hpp"

#include <cstddef>      // std::size_t
#include <fstream>      // std::ifstream, std::ofstream
#include <istream>      // std::istream, std::getline
#include <functional>   // std::less
#include <map>          // std::map
#include <ostream>      // std::ostream
#include <string>       // std::string
#include <string_view>  // std::string_view
#include <utility>      // std::move

namespace linsvm {

namespace {

constexpr std::string_view magic = "linsvm-model 1";

}  // namespace

model model::from_training(std::string solver, const solver_config &config, const solve_result &result) {
    model m;
    m.solver = std::move(solver);
    m.C = config.C;
    m.epsilon = config.epsilon;
    m.seed = config.seed;
    m.weights = result.state.w;
    m.steps = result.report.steps;
    m.outer_iterations = result.report.outer_iterations;
    m.dual_objective = result.report.dual_objective;
    m.max_kkt_violation = result.report.exact_max_kkt_violation;
    m.converged = result.report.converged;
    return m;
}

void write_model(std::ostream &out, const model &m) {
    using detail::format_double;
    std::string text;
    text += magic;
    text += '\n';
    text += "solver " + m.solver + '\n';
    text += "C " + format_double(m.C) + '\n';
    text += "epsilon " + format_double(m.epsilon) + '\n';
    text += "seed " + std::to_string(m.seed) + '\n';
    text += "dimension " + std::to_string(m.dimension()) + '\n';
    text += "steps " + std::to_string(m.steps) + '\n';
    text += "outer_iterations " + std::to_string(m.outer_iterations) + '\n';
    text += "dual_objective " + format_double(m.dual_objective) + '\n';
    text += "max_kkt_violation " + format_double(m.max_kkt_violation) + '\n';
    text += std::string{ "converged " } + (m.converged ? "true" : "false") + '\n';
    text += "weights\n";
    for (const double w : m.weights) {
        text += format_double(w);
        text += '\n';
    }
    out << text;
}

model read_model(std::istream &in) {
    std::string line;
    std::size_t line_number = 0;
    const auto next_line = [&]() -> bool {
        if (!std::getline(in, line)) {
            return false;
        }
        ++line_number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        return true;
    };

    if (!next_line() || line != magic) {
        throw parse_error{ 1, "missing model header '" + std::string{ magic } + "'" };
    }

    std::map<std::string, std::string, std::less<>> header;
    while (true) {
        if (!next_line()) {
            throw parse_error{ line_number + 1, "unexpected end of model file before 'weights'" };
        }
        if (line == "weights") {
            break;
        }
        const std::size_t space = line.find(' ');
        if (space == std::string::npos) {
            throw parse_error{ line_number, "malformed header line '" + line + "'" };
        }
        header[line.substr(0, space)] = line.substr(space + 1);
    }

    const auto field = [&](const std::string_view key) -> const std::string & {
        const auto it = header.find(key);
        if (it == header.end()) {
            throw parse_error{ line_number, "missing header field '" + std::string{ key } + "'" };
        }
        return it->second;
    };
    const auto real = [&](const std::string_view key) {
        const auto value = detail::parse_double(field(key));
        if (!value.has_value()) {
            throw parse_error{ line_number, "bad value for '" + std::string{ key } + "'" };
        }
        return *value;
    };
    const auto integer = [&](const std::string_view key) {
        const auto value = detail::parse_unsigned<std::uint64_t>(field(key));
        if (!value.has_value()) {
            throw parse_error{ line_number, "bad value for '" + std::string{ key } + "'" };
        }
        return *value;
    };

    model m;
    m.solver = field("solver");
    m.C = real("C");
    m.epsilon = real("epsilon");
    m.seed = integer("seed");
    const std::uint64_t dimension = integer("dimension");
    m.steps = integer("steps");
    m.outer_iterations = integer("outer_iterations");
    m.dual_objective = real("dual_objective");
    m.max_kkt_violation = real("max_kkt_violation");
    const std::string &converged = field("converged");
    if (converged != "true" && converged != "false") {
        throw parse_error{ line_number, "bad value for 'converged'" };
    }
    m.converged = converged == "true";

    m.weights.reserve(dimension);
    while (m.weights.size() < dimension) {
        if (!next_line()) {
            throw parse_error{ line_number + 1, "expected " + std::to_string(dimension) + " weights" };
        }
        const auto w = detail::parse_double(line);
        if (!w.has_value()) {
            throw parse_error{ line_number, "bad weight '" + line + "'" };
        }
        m.weights.push_back(*w);
    }
    return m;
}

void save_model(const std::filesystem::path &path, const model &m) {
    std::ofstream out{ path, std::ios::binary };
    if (!out) {
        throw io_error{ "cannot open '" + path.string() + "' for writing" };
    }
    write_model(out, m);
    if (!out) {
        throw io_error{ "failed writing '" + path.string() + "'" };
    }
}

model load_model(const std::filesystem::path &path) {
    std::ifstream in{ path };
    if (!in) {
        throw io_error{ "cannot open model file '" + path.string() + "'" };
    }
    return read_model(in);
}

double accuracy(const model &m, const dataset &data) {
    std::size_t correct = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (m.predict(data.example(i)) == data.label(i)) {
            ++correct;
        }
    }
    return static_cast<double>(correct) / static_cast<double>(data.size());
}

}  // namespace linsvm
