/**
 * @file
 * @brief Locale-independent number formatting and parsing with exact round-trip for doubles.
 */

#pragma once

#include <charconv>      // std::to_chars, std::from_chars
#include <optional>      // std::optional
#include <string>        // std::string
#include <string_view>   // std::string_view
#include <system_error>  // std::errc

namespace linsvm::detail {

/// Shortest decimal representation that parses back to the identical double.
[[nodiscard]] inline std::string format_double(const double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

/// Parse a whole token as a double; a single leading '+' is accepted. Rejects trailing garbage.
[[nodiscard]] inline std::optional<double> parse_double(std::string_view token) {
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    if (token.empty()) {
        return std::nullopt;
    }
    double value{};
    const auto result = std::from_chars(token.data(), token.data() + token.size(), value);
    if (result.ec != std::errc{} || result.ptr != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

/// Parse a whole token as an unsigned integer of type T.
template <typename T>
[[nodiscard]] std::optional<T> parse_unsigned(const std::string_view token) {
    if (token.empty()) {
        return std::nullopt;
    }
    T value{};
    const auto result = std::from_chars(token.data(), token.data() + token.size(), value);
    if (result.ec != std::errc{} || result.ptr != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace linsvm::detail
