#pragma once

/**
 * Input parsing: JSON {"points": [...]} and CSV, rationals as "p/q"
 * strings or integers.
 */

#include <string>

#include "trophull/point.hpp"

namespace trop {

struct ParseLocation {
  int line = 0;    // 1-based; 0 when unknown
  int column = 0;  // 1-based; 0 when unknown
};

/// InputError specialized with a source position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, ParseLocation loc)
      : InputError(what), location(loc) {}
  ParseLocation location;
};

/// Sniffs JSON vs CSV (leading '{' or '[' means JSON) and parses a point
/// list into a weight matrix. Throws ParseError with line/column.
WeightMatrix parse_points_text(const std::string& text);

WeightMatrix parse_points_json(const std::string& text);
WeightMatrix parse_points_csv(const std::string& text);

/// Reads a whole file; throws InputError when unreadable.
std::string read_file(const std::string& path);

}  // namespace trop
