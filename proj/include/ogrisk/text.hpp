#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ogrisk {

std::vector<std::string> split(std::string_view line, char delim);
std::string join(const std::vector<std::string>& parts, char delim);

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

/// Canonical form for attack-label matching: trimmed, lower-cased, trailing
/// periods stripped, internal whitespace collapsed to single spaces.
std::string normalize_label(std::string_view s);

/// Strict full-token numeric parse; rejects trailing garbage.
std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_int(std::string_view s);

/// Shortest decimal form that round-trips the exact double.
std::string format_number(double v);

} // namespace ogrisk
