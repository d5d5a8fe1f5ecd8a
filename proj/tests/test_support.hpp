// Test-only helpers: small hand-built data sets and oracles that do not share code paths with the solvers.

#pragma once

#include "linsvm/dataset.hpp"
#include "linsvm/random.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace linsvm::test {

/// Dense rows to a data set; zero entries are skipped.
inline dataset dense_dataset(const std::vector<std::vector<double>> &rows, const std::vector<int> &labels) {
    std::vector<sparse_vector> examples;
    for (const auto &row : rows) {
        std::vector<feature> entries;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] != 0.0) {
                entries.push_back(feature{ static_cast<std::uint32_t>(j), row[j] });
            }
        }
        examples.emplace_back(std::move(entries));
    }
    return dataset{ std::move(examples), labels };
}

/// <x_i, x_j> by merging the two sparse index lists.
inline double sparse_inner(const sparse_vector &a, const sparse_vector &b) {
    const auto ea = a.entries();
    const auto eb = b.entries();
    double sum = 0.0;
    std::size_t p = 0;
    std::size_t q = 0;
    while (p < ea.size() && q < eb.size()) {
        if (ea[p].index < eb[q].index) {
            ++p;
        } else if (eb[q].index < ea[p].index) {
            ++q;
        } else {
            sum += ea[p].value * eb[q].value;
            ++p;
            ++q;
        }
    }
    return sum;
}

/// W(alpha) = sum alpha_i - 1/2 sum_ij alpha_i alpha_j y_i y_j <x_i, x_j>, evaluated through the Gram matrix.
inline double brute_force_dual(std::span<const double> alpha, const dataset &data) {
    double linear = 0.0;
    double quadratic = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        linear += alpha[i];
        for (std::size_t j = 0; j < data.size(); ++j) {
            quadratic += alpha[i] * alpha[j] * data.label(i) * data.label(j) * sparse_inner(data.example(i), data.example(j));
        }
    }
    return linear - 0.5 * quadratic;
}

/// dW/dalpha_i = 1 - sum_j alpha_j y_i y_j <x_i, x_j>, through the Gram matrix.
inline double brute_force_gradient(std::size_t i, std::span<const double> alpha, const dataset &data) {
    double sum = 0.0;
    for (std::size_t j = 0; j < data.size(); ++j) {
        sum += alpha[j] * data.label(i) * data.label(j) * sparse_inner(data.example(i), data.example(j));
    }
    return 1.0 - sum;
}

/// A unique scratch directory, removed on destruction.
class temp_dir {
  public:
    temp_dir() {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() / ("linsvm-test-" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    temp_dir(const temp_dir &) = delete;
    temp_dir &operator=(const temp_dir &) = delete;
    ~temp_dir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }

    [[nodiscard]] std::filesystem::path operator/(const std::string &name) const { return path_ / name; }

  private:
    std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path &path) {
    std::ifstream in{ path, std::ios::binary };
    return std::string{ std::istreambuf_iterator<char>{ in }, std::istreambuf_iterator<char>{} };
}

}  // namespace linsvm::test
