/**
 * @file
 * @brief Exception hierarchy of the library.
 */

#pragma once

#include <cstddef>    // std::size_t
#include <stdexcept>  // std::runtime_error
#include <string>     // std::string, std::to_string
#include <utility>    // std::move

namespace linsvm {

/// Base class of every error raised by this library.
class exception : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed libsvm input; carries the 1-based line number of the offending line.
class parse_error : public exception {
  public:
    parse_error(const std::size_t line, std::string reason) :
        exception{ "line " + std::to_string(line) + ": " + reason },
        line_{ line },
        reason_{ std::move(reason) } {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] const std::string &reason() const noexcept { return reason_; }

  private:
    std::size_t line_;
    std::string reason_;
};

/// The data describes something other than a binary classification problem.
class unsupported_problem_error : public exception {
  public:
    using exception::exception;
};

/// A parameter is outside its documented domain.
class invalid_parameter_error : public exception {
  public:
    using exception::exception;
};

/// Reading or writing a file failed.
class io_error : public exception {
  public:
    using exception::exception;
};

}  // namespace linsvm
