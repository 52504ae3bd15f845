#include "tlcasimir/netlist.hpp"

#include "tlcasimir/errors.hpp"
#include "overloaded.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <variant>

namespace tlcasimir {

using detail::Overloaded;

ParseError::ParseError(const std::string& message, std::size_t offset, std::vector<std::string> expected)
    : std::runtime_error(message), offset_(offset), expected_(std::move(expected)) {}

namespace {

const std::vector<std::string> kExprStart = {"R(", "L(", "C(", "short", "open", "series(", "parallel("};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ImpedanceExpr parse() {
        ImpedanceExpr expr = parse_expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input", {"end of input"});
        }
        return expr;
    }

private:
    [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
        fail_at(pos_, message, std::move(expected));
    }

    [[noreturn]] void fail_at(std::size_t offset, const std::string& message, std::vector<std::string> expected) const {
        std::string full = message + " at byte " + std::to_string(offset);
        if (!expected.empty()) {
            full += " (expected ";
            for (std::size_t k = 0; k < expected.size(); ++k) {
                full += (k ? ", '" : "'") + expected[k] + "'";
            }
            full += ")";
        }
        throw ParseError(full, offset, std::move(expected));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c, std::vector<std::string> expected) {
        if (!peek(c)) {
            fail(pos_ < text_.size() ? "unexpected character" : "unexpected end of input", std::move(expected));
        }
        ++pos_;
    }

    std::string read_keyword() {
        std::string word;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_]))));
            ++pos_;
        }
        return word;
    }

    double parse_value() {
        skip_space();
        const std::size_t start = pos_;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        if (first != last && *first == '+') ++first;
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
        if (ec == std::errc::result_out_of_range) {
            fail_at(start, "numeric literal out of range", {});
        }
        if (ec != std::errc() || !std::isfinite(value)) {
            fail_at(start, "expected a numeric literal", {"float"});
        }
        if (value < 0.0 || (value == 0.0 && std::signbit(value))) {
            fail_at(start, "negative element value", {});
        }
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }

    ImpedanceExpr parse_element(const std::string& kind) {
        expect('(', {"("});
        const std::size_t value_offset = pos_;
        const double value = parse_value();
        expect(')', {")"});
        try {
            if (kind == "r") return ImpedanceExpr::resistor(value);
            if (kind == "l") return ImpedanceExpr::inductor(value);
            return ImpedanceExpr::capacitor(value);
        } catch (const std::invalid_argument& e) {
            fail_at(value_offset, e.what(), {});
        }
    }

    ImpedanceExpr parse_composite(const std::string& kind) {
        expect('(', {"("});
        std::vector<ImpedanceExpr> children;
        children.push_back(parse_expr());
        while (true) {
            if (peek(',')) {
                ++pos_;
                children.push_back(parse_expr());
                continue;
            }
            if (peek(')')) {
                if (children.size() < 2) {
                    fail(kind + " requires at least 2 operands", {","});
                }
                ++pos_;
                break;
            }
            fail(pos_ < text_.size() ? "unexpected character" : "unexpected end of input", {",", ")"});
        }
        return kind == "series" ? ImpedanceExpr::series(std::move(children))
                                : ImpedanceExpr::parallel(std::move(children));
    }

    ImpedanceExpr parse_expr() {
        skip_space();
        const std::size_t start = pos_;
        const std::string word = read_keyword();
        if (word == "r" || word == "l" || word == "c") return parse_element(word);
        if (word == "short") return ImpedanceExpr::short_circuit();
        if (word == "open") return ImpedanceExpr::open_circuit();
        if (word == "series" || word == "parallel") return parse_composite(word);
        pos_ = start;
        fail(start < text_.size() ? "unknown element" : "unexpected end of input", kExprStart);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string format_value(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    (void)ec;
    return std::string(buf.data(), ptr);
}

void print(const ImpedanceExpr& expr, std::string& out) {
    auto composite = [&out](const char* name, const std::vector<ImpedanceExpr>& children) {
        out += name;
        out += '(';
        for (std::size_t k = 0; k < children.size(); ++k) {
            if (k) out += ", ";
            print(children[k], out);
        }
        out += ')';
    };
    std::visit(Overloaded{
                   [&](const Resistor& r) { out += "R(" + format_value(r.ohms) + ")"; },
                   [&](const Inductor& l) { out += "L(" + format_value(l.henries) + ")"; },
                   [&](const Capacitor& c) { out += "C(" + format_value(c.farads) + ")"; },
                   [&](const Short&) { out += "short"; },
                   [&](const Open&) { out += "open"; },
                   [&](const Series& s) { composite("series", s.children); },
                   [&](const Parallel& p) { composite("parallel", p.children); },
               },
               expr.node());
}

} // namespace

ImpedanceExpr parse_netlist(std::string_view text) { return Parser(text).parse(); }

std::string to_netlist(const ImpedanceExpr& expr) {
    std::string out;
    print(expr, out);
    return out;
}

} // namespace tlcasimir
