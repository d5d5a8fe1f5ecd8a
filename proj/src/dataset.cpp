#include "linsvm/dataset.hpp"

#include "linsvm/detail/number_format.hpp"
#include "linsvm/exceptions.hpp"
#include "linsvm/random.hpp"

#include <algorithm>  // std::max, std::all_of, std::sort, std::unique
#include <cmath>      // std::isfinite, std::sqrt
#include <cstddef>    // std::size_t
#include <fstream>    // std::ifstream, std::ofstream
#include <istream>    // std::istream, std::getline
#include <limits>     // std::numeric_limits
#include <ostream>    // std::ostream
#include <random>     // std::normal_distribution
#include <string>     // std::string
#include <string_view>  // std::string_view
#include <utility>    // std::move
#include <vector>     // std::vector

namespace linsvm {

sparse_vector::sparse_vector(std::vector<feature> entries) {
    entries_.reserve(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (k > 0 && entries[k].index <= entries[k - 1].index) {
            throw invalid_parameter_error{ "sparse_vector: indices must be strictly increasing" };
        }
        if (entries[k].value != 0.0) {
            entries_.push_back(entries[k]);
        }
    }
}

double sparse_vector::squared_norm() const noexcept {
    double sum = 0.0;
    for (const feature &f : entries_) {
        sum += f.value * f.value;
    }
    return sum;
}

double sparse_vector::dot(const std::span<const double> dense) const noexcept {
    double sum = 0.0;
    for (const feature &f : entries_) {
        if (f.index < dense.size()) {
            sum += f.value * dense[f.index];
        }
    }
    return sum;
}

void sparse_vector::add_to(const std::span<double> dense, const double scale) const noexcept {
    for (const feature &f : entries_) {
        dense[f.index] += scale * f.value;
    }
}

dataset::dataset(std::vector<sparse_vector> examples, std::vector<int> labels) :
    examples_{ std::move(examples) },
    labels_{ std::move(labels) } {
    if (examples_.empty()) {
        throw invalid_parameter_error{ "dataset: no examples" };
    }
    if (examples_.size() != labels_.size()) {
        throw invalid_parameter_error{ "dataset: number of examples and labels differ" };
    }
    if (!std::all_of(labels_.begin(), labels_.end(), [](const int y) { return y == 1 || y == -1; })) {
        throw invalid_parameter_error{ "dataset: labels must be -1 or +1" };
    }
    squared_norms_.reserve(examples_.size());
    for (const sparse_vector &x : examples_) {
        squared_norms_.push_back(x.squared_norm());
        if (!x.empty()) {
            dimension_ = std::max<std::size_t>(dimension_, x.entries().back().index + std::size_t{ 1 });
        }
    }
}

namespace {

std::vector<std::string_view> split_whitespace(const std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
            ++pos;
        }
        const std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') {
            ++pos;
        }
        if (pos > start) {
            tokens.push_back(line.substr(start, pos - start));
        }
    }
    return tokens;
}

// Maps the distinct raw labels (sorted ascending, at most two) to {-1, +1}.
int map_label(const double raw, const std::vector<double> &distinct) {
    const bool canonical_pm = std::all_of(distinct.begin(), distinct.end(), [](const double v) { return v == -1.0 || v == 1.0; });
    const bool canonical_01 = std::all_of(distinct.begin(), distinct.end(), [](const double v) { return v == 0.0 || v == 1.0; });
    if (canonical_pm || canonical_01) {
        return raw == 1.0 ? 1 : -1;
    }
    if (distinct.size() == 1) {
        return raw > 0.0 ? 1 : -1;
    }
    return raw == distinct.back() ? 1 : -1;
}

}  // namespace

dataset parse_libsvm(std::istream &in) {
    std::vector<sparse_vector> examples;
    std::vector<double> raw_labels;
    std::vector<double> distinct;

    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::string_view view{ line };
        if (const std::size_t hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        if (!view.empty() && view.back() == '\r') {
            view.remove_suffix(1);
        }
        const std::vector<std::string_view> tokens = split_whitespace(view);
        if (tokens.empty()) {
            continue;
        }

        const std::optional<double> label = detail::parse_double(tokens.front());
        if (!label.has_value() || !std::isfinite(*label)) {
            throw parse_error{ line_number, "non-numeric label '" + std::string{ tokens.front() } + "'" };
        }

        std::vector<feature> entries;
        entries.reserve(tokens.size() - 1);
        for (std::size_t t = 1; t < tokens.size(); ++t) {
            const std::string_view token = tokens[t];
            const std::size_t colon = token.find(':');
            if (colon == std::string_view::npos) {
                throw parse_error{ line_number, "bad index:value token '" + std::string{ token } + "'" };
            }
            const auto index = detail::parse_unsigned<std::uint64_t>(token.substr(0, colon));
            const auto value = detail::parse_double(token.substr(colon + 1));
            if (!index.has_value() || *index == 0 || *index > std::numeric_limits<std::uint32_t>::max()
                || !value.has_value() || !std::isfinite(*value)) {
                throw parse_error{ line_number, "bad index:value token '" + std::string{ token } + "'" };
            }
            const auto zero_based = static_cast<std::uint32_t>(*index - 1);
            if (!entries.empty() && zero_based <= entries.back().index) {
                throw parse_error{ line_number, "non-increasing indices" };
            }
            entries.push_back(feature{ zero_based, *value });
        }

        if (std::find(distinct.begin(), distinct.end(), *label) == distinct.end()) {
            if (distinct.size() == 2) {
                throw unsupported_problem_error{ "line " + std::to_string(line_number) + ": more than two distinct labels" };
            }
            distinct.push_back(*label);
        }
        raw_labels.push_back(*label);
        examples.emplace_back(std::move(entries));
    }

    if (examples.empty()) {
        throw unsupported_problem_error{ "empty dataset" };
    }

    std::sort(distinct.begin(), distinct.end());
    std::vector<int> labels;
    labels.reserve(raw_labels.size());
    for (const double raw : raw_labels) {
        labels.push_back(map_label(raw, distinct));
    }
    return dataset{ std::move(examples), std::move(labels) };
}

dataset load_libsvm(const std::filesystem::path &path) {
    std::ifstream in{ path };
    if (!in) {
        throw io_error{ "cannot open data file '" + path.string() + "'" };
    }
    return parse_libsvm(in);
}

void write_libsvm(std::ostream &out, const dataset &data) {
    std::string line;
    for (std::size_t i = 0; i < data.size(); ++i) {
        line = data.label(i) > 0 ? "+1" : "-1";
        for (const feature &f : data.example(i).entries()) {
            line += ' ';
            line += std::to_string(std::uint64_t{ f.index } + 1);
            line += ':';
            line += detail::format_double(f.value);
        }
        line += '\n';
        out << line;
    }
}

void save_libsvm(const std::filesystem::path &path, const dataset &data) {
    std::ofstream out{ path, std::ios::binary };
    if (!out) {
        throw io_error{ "cannot open '" + path.string() + "' for writing" };
    }
    write_libsvm(out, data);
    if (!out) {
        throw io_error{ "failed writing '" + path.string() + "'" };
    }
}

dataset generate_synthetic(const synthetic_spec &spec) {
    if (spec.n_examples < 2) {
        throw invalid_parameter_error{ "generate_synthetic: need at least 2 examples" };
    }
    if (spec.dimension == 0) {
        throw invalid_parameter_error{ "generate_synthetic: dimension must be positive" };
    }
    if (!(spec.density > 0.0 && spec.density <= 1.0)) {
        throw invalid_parameter_error{ "generate_synthetic: density must be in (0, 1]" };
    }
    if (!(spec.noise >= 0.0) || !std::isfinite(spec.noise)) {
        throw invalid_parameter_error{ "generate_synthetic: noise must be a finite value >= 0" };
    }

    random_engine gen{ spec.seed };
    std::normal_distribution<double> normal{ 0.0, 1.0 };

    std::vector<double> hidden(spec.dimension);
    double hidden_norm = 0.0;
    while (hidden_norm == 0.0) {
        hidden_norm = 0.0;
        for (double &h : hidden) {
            h = normal(gen);
            hidden_norm += h * h;
        }
    }
    hidden_norm = std::sqrt(hidden_norm);
    for (double &h : hidden) {
        h /= hidden_norm;
    }

    const double flip_probability = std::min(spec.noise, 0.5);
    std::vector<std::vector<feature>> rows(spec.n_examples);
    std::vector<int> labels(spec.n_examples);
    for (std::size_t i = 0; i < spec.n_examples; ++i) {
        std::vector<feature> &row = rows[i];
        for (std::size_t j = 0; j < spec.dimension; ++j) {
            if (uniform01(gen) < spec.density) {
                const double value = normal(gen);
                if (value != 0.0) {
                    row.push_back(feature{ static_cast<std::uint32_t>(j), value });
                }
            }
        }
        while (row.empty()) {
            const auto j = static_cast<std::uint32_t>(uniform_below(gen, spec.dimension));
            const double value = normal(gen);
            if (value != 0.0) {
                row.push_back(feature{ j, value });
            }
        }
        double score = 0.0;
        for (const feature &f : row) {
            score += f.value * hidden[f.index];
        }
        int y = score >= 0.0 ? 1 : -1;
        if (flip_probability > 0.0 && uniform01(gen) < flip_probability) {
            y = -y;
        }
        labels[i] = y;
    }

    // A single-class draw gets its first example mirrored, which preserves separability.
    if (std::all_of(labels.begin(), labels.end(), [&](const int y) { return y == labels.front(); })) {
        for (feature &f : rows.front()) {
            f.value = -f.value;
        }
        labels.front() = -labels.front();
    }

    std::vector<sparse_vector> examples;
    examples.reserve(rows.size());
    for (std::vector<feature> &row : rows) {
        examples.emplace_back(std::move(row));
    }
    return dataset{ std::move(examples), std::move(labels) };
}

}  // namespace linsvm
