#pragma once

// Output helpers shared by the subcommands. Numbers are always printed with
// 12 significant digits in scientific notation, independent of locale.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tlcasimir::cli {

std::string format_number(double value);

/// format_number, or null for non-finite values.
std::string json_number(double value);
std::string json_string(std::string_view text);

/// RFC 4180 field: quoted when it contains a comma, quote or line break.
std::string csv_field(std::string_view text);
std::string csv_row(const std::vector<std::string>& fields);

/// Insertion-ordered JSON object assembled from pre-rendered values.
class JsonObject {
public:
    JsonObject& raw(std::string key, std::string rendered);
    JsonObject& number(std::string key, double value);
    JsonObject& string(std::string key, std::string_view value);
    JsonObject& boolean(std::string key, bool value);
    JsonObject& integer(std::string key, long long value);

    /// Pretty-printed with two-space indentation starting at `indent`.
    std::string render(int indent = 0) const;

private:
    std::vector<std::pair<std::string, std::string>> members_;
};

std::string json_array(const std::vector<std::string>& rendered, int indent = 0);

} // namespace tlcasimir::cli
