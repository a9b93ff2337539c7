#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lietrees/integer.hpp"

namespace lietrees::cli {

enum class Format { Text, Tsv, Json };

Format parse_format(const std::string& s);

/// The same content in all three renderings.
struct Payload {
  nlohmann::json json;
  std::string text;
  std::string tsv;

  std::string render(Format f) const;
};

/// Fixed-header table; text rendering aligns columns with two spaces.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string tsv() const;
  std::string text() const;
};

/// JSON number when it fits in 64 bits, decimal string otherwise.
nlohmann::json int_json(const Integer& v);
nlohmann::json int_json(const std::vector<Integer>& v);

/// "(1, -1, 0)"
std::string coords_text(const std::vector<Integer>& v);
/// "[2,3]"
std::string list_text(const std::vector<Integer>& v);

}  // namespace lietrees::cli
