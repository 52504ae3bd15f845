#pragma once

// Text form of impedance networks:
//
//   expr := elem
//         | "series"   "(" expr ("," expr)+ ")"
//         | "parallel" "(" expr ("," expr)+ ")"
//   elem := "R(" float ")" | "L(" float ")" | "C(" float ")" | "short" | "open"
//
// Values are plain SI floats (no unit suffixes). Keywords are
// case-insensitive and whitespace between tokens is ignored.

#include "tlcasimir/circuit.hpp"

#include <string>
#include <string_view>

namespace tlcasimir {

/// Throws ParseError carrying the byte offset of the offending token and the
/// set of tokens that would have been accepted there.
ImpedanceExpr parse_netlist(std::string_view text);

/// Canonical text form; parse_netlist(to_netlist(e)) == e.
std::string to_netlist(const ImpedanceExpr& expr);

} // namespace tlcasimir
