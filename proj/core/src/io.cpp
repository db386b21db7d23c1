#include "trophull/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "trophull/rational.hpp"

namespace trop {

namespace {

ParseLocation location_of_offset(const std::string& text, size_t offset) {
  ParseLocation loc{1, 1};
  for (size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

Rat rat_from_json(const nlohmann::json& value, ParseLocation loc) {
  if (value.is_string()) {
    try {
      return parse_rat(value.get<std::string>());
    } catch (const InputError& e) {
      throw ParseError(e.what(), loc);
    }
  }
  if (value.is_number_integer()) {
    return Rat(value.get<long long>());
  }
  if (value.is_number_unsigned()) {
    return Rat(static_cast<long long>(value.get<unsigned long long>()));
  }
  if (value.is_number_float()) {
    throw ParseError("floating-point coordinates are not accepted; use \"p/q\" strings", loc);
  }
  throw ParseError("coordinate must be an integer or a \"p/q\" string", loc);
}

}  // namespace

WeightMatrix parse_points_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON: ") + e.what(), location_of_offset(text, e.byte));
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
    throw ParseError("expected an object with a \"points\" array", {1, 1});
  }
  std::vector<std::vector<Rat>> rows;
  for (const auto& row : doc["points"]) {
    if (!row.is_array()) {
      throw ParseError("each point must be an array of coordinates", {1, 1});
    }
    std::vector<Rat> coords;
    for (const auto& value : row) coords.push_back(rat_from_json(value, {1, 1}));
    rows.push_back(std::move(coords));
  }
  try {
    return weight_matrix_from_rows(rows);
  } catch (const InputError& e) {
    throw ParseError(e.what(), {1, 1});
  }
}

WeightMatrix parse_points_csv(const std::string& text) {
  std::vector<std::vector<Rat>> rows;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<Rat> coords;
    size_t pos = 0;
    int column = 1;
    while (pos <= line.size()) {
      size_t comma = line.find(',', pos);
      if (comma == std::string::npos) comma = line.size();
      const std::string field = line.substr(pos, comma - pos);
      try {
        coords.push_back(parse_rat(field));
      } catch (const InputError& e) {
        throw ParseError(e.what(), {line_no, column});
      }
      column = static_cast<int>(comma) + 2;
      pos = comma + 1;
    }
    rows.push_back(std::move(coords));
  }
  try {
    return weight_matrix_from_rows(rows);
  } catch (const InputError& e) {
    throw ParseError(e.what(), {line_no, 1});
  }
}

WeightMatrix parse_points_text(const std::string& text) {
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty input", {1, 1});
  if (text[first] == '{' || text[first] == '[') return parse_points_json(text);
  return parse_points_csv(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace trop
