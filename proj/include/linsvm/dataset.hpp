/**
 * @file
 * @brief Sparse training examples, the immutable data set, libsvm text I/O, and the synthetic generator.
 */

#pragma once

#include <cstddef>      // std::size_t
#include <cstdint>      // std::uint32_t, std::uint64_t
#include <filesystem>   // std::filesystem::path
#include <iosfwd>       // std::istream, std::ostream
#include <span>         // std::span
#include <vector>       // std::vector

namespace linsvm {

/// One non-zero component of a sparse vector. The index is 0-based in memory.
struct feature {
    std::uint32_t index;
    double value;

    friend bool operator==(const feature &, const feature &) = default;
};

/**
 * @brief A sparse vector: strictly increasing indices, no explicit zeros.
 */
class sparse_vector {
  public:
    sparse_vector() = default;

    /**
     * @brief Build from (index, value) pairs.
     * @details Zero-valued entries are dropped. Throws linsvm::invalid_parameter_error if the indices
     *          are not strictly increasing.
     */
    explicit sparse_vector(std::vector<feature> entries);

    [[nodiscard]] std::span<const feature> entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t nnz() const noexcept { return entries_.size(); }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }

    /// Sum of squared values, accumulated in entry order.
    [[nodiscard]] double squared_norm() const noexcept;

    /// Inner product with a dense vector. Indices beyond @p dense are treated as zero.
    [[nodiscard]] double dot(std::span<const double> dense) const noexcept;

    /// dense += scale * this. Every index must be inside @p dense.
    void add_to(std::span<double> dense, double scale) const noexcept;

    friend bool operator==(const sparse_vector &, const sparse_vector &) = default;

  private:
    std::vector<feature> entries_;
};

/**
 * @brief Immutable binary classification data: examples, labels in {-1, +1}, precomputed squared norms.
 */
class dataset {
  public:
    /// Throws linsvm::invalid_parameter_error on empty input, length mismatch, or labels other than -1/+1.
    dataset(std::vector<sparse_vector> examples, std::vector<int> labels);

    [[nodiscard]] std::size_t size() const noexcept { return examples_.size(); }
    /// Largest feature index observed (1-based), i.e. the length of a dense weight vector.
    [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }

    [[nodiscard]] const sparse_vector &example(const std::size_t i) const noexcept { return examples_[i]; }
    [[nodiscard]] int label(const std::size_t i) const noexcept { return labels_[i]; }
    [[nodiscard]] double squared_norm(const std::size_t i) const noexcept { return squared_norms_[i]; }

    [[nodiscard]] std::span<const sparse_vector> examples() const noexcept { return examples_; }
    [[nodiscard]] std::span<const int> labels() const noexcept { return labels_; }
    [[nodiscard]] std::span<const double> squared_norms() const noexcept { return squared_norms_; }

    friend bool operator==(const dataset &, const dataset &) = default;

  private:
    std::vector<sparse_vector> examples_;
    std::vector<int> labels_;
    std::vector<double> squared_norms_;
    std::size_t dimension_{ 0 };
};

/**
 * @brief Parse libsvm sparse text: `<label> <idx>:<val> ...` per line.
 * @details `#` starts a comment, blank lines are skipped, LF and CRLF endings are accepted.
 *          Labels are mapped to {-1, +1}: raw label sets within {-1, 1} or {0, 1} map 1 to +1 and the
 *          other value to -1; any other pair maps the larger label to +1. A single label that is not
 *          -1, 0, or 1 maps by its sign.
 * @throws linsvm::parse_error on a malformed line (with its 1-based line number)
 * @throws linsvm::unsupported_problem_error on more than two distinct labels or no examples
 */
[[nodiscard]] dataset parse_libsvm(std::istream &in);

/// parse_libsvm() on the contents of @p path. Throws linsvm::io_error if the file cannot be opened.
[[nodiscard]] dataset load_libsvm(const std::filesystem::path &path);

/// Write @p data in libsvm format with 1-based indices and shortest round-trip value formatting.
void write_libsvm(std::ostream &out, const dataset &data);

/// write_libsvm() to @p path. Throws linsvm::io_error if the file cannot be written.
void save_libsvm(const std::filesystem::path &path, const dataset &data);

/// Parameters of generate_synthetic().
struct synthetic_spec {
    std::uint64_t seed{ 1 };
    std::size_t n_examples{ 100 };
    std::size_t dimension{ 10 };
    /// Probability that a feature is non-zero in an example, in (0, 1].
    double density{ 1.0 };
    /// Label flip probability, capped at 0.5. Zero gives linearly separable data.
    double noise{ 0.0 };
};

/**
 * @brief Deterministic synthetic classification data.
 * @details Draws a hidden unit-length weight vector, then examples whose features are non-zero with
 *          probability `density` (at least one per example) and standard normal values. The label is
 *          the sign of the hidden score (ties to +1), flipped with probability `min(noise, 0.5)`.
 *          Both classes are guaranteed to be present.
 * @throws linsvm::invalid_parameter_error for n_examples < 2, dimension 0, density outside (0, 1], or negative noise
 */
[[nodiscard]] dataset generate_synthetic(const synthetic_spec &spec);

}  // namespace linsvm
