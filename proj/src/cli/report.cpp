#include "report.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <cmath>

namespace tlcasimir::cli {

std::string format_number(double value) { return fmt::format("{:.11e}", value); }

std::string json_number(double value) { return std::isfinite(value) ? format_number(value) : "null"; }

std::string json_string(std::string_view text) { return nlohmann::json(std::string(text)).dump(); }

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(text);
    }
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t k = 0; k < fields.size(); ++k) {
        if (k) line += ',';
        line += fields[k];
    }
    line += '\n';
    return line;
}

JsonObject& JsonObject::raw(std::string key, std::string rendered) {
    members_.emplace_back(std::move(key), std::move(rendered));
    return *this;
}

JsonObject& JsonObject::number(std::string key, double value) { return raw(std::move(key), json_number(value)); }

JsonObject& JsonObject::string(std::string key, std::string_view value) {
    return raw(std::move(key), json_string(value));
}

JsonObject& JsonObject::boolean(std::string key, bool value) { return raw(std::move(key), value ? "true" : "false"); }

JsonObject& JsonObject::integer(std::string key, long long value) {
    return raw(std::move(key), std::to_string(value));
}

std::string JsonObject::render(int indent) const {
    if (members_.empty()) return "{}";
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    std::string out = "{\n";
    for (std::size_t k = 0; k < members_.size(); ++k) {
        out += pad + json_string(members_[k].first) + ": " + members_[k].second;
        out += k + 1 < members_.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
    return out;
}

std::string json_array(const std::vector<std::string>& rendered, int indent) {
    if (rendered.empty()) return "[]";
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    std::string out = "[\n";
    for (std::size_t k = 0; k < rendered.size(); ++k) {
        out += pad + rendered[k];
        out += k + 1 < rendered.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
    return out;
}

} // namespace tlcasimir::cli
