#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace attrdq {

std::string_view trim(std::string_view s) noexcept;

// ASCII lowercase; bytes >= 0x80 are left untouched.
std::string to_lower(std::string_view s);

bool iequals(std::string_view a, std::string_view b) noexcept;

bool ends_with_icase(std::string_view s, std::string_view suffix) noexcept;

bool is_all_digits(std::string_view s) noexcept;

/// Strict decimal number: optional sign, digits with an optional decimal
/// point, optional exponent. No thousands separators, no comma decimals,
/// no "inf"/"nan". Surrounding whitespace is not accepted.
std::optional<double> parse_number(std::string_view s) noexcept;

inline bool is_number(std::string_view s) noexcept { return parse_number(s).has_value(); }

/// Shortest decimal representation that round-trips ("0", "360", "-0.5").
std::string format_number(double v);

/// Replaces every byte sequence that is not valid UTF-8 with U+FFFD.
std::string sanitize_utf8(std::string_view bytes);

}  // namespace attrdq
