#include "lietrees/cli/output.hpp"

#include <algorithm>

#include "lietrees/core/errors.hpp"

namespace lietrees::cli {

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "tsv") return Format::Tsv;
  if (s == "json") return Format::Json;
  throw Error(Errc::InvalidArgument, "unknown format " + s);
}

std::string Payload::render(Format f) const {
  switch (f) {
    case Format::Json: return json.dump(2) + "\n";
    case Format::Tsv: return tsv;
    case Format::Text: return text;
  }
  return text;
}

std::string Table::tsv() const {
  auto line = [](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += '\t';
      out += cells[i];
    }
    return out + "\n";
  };
  std::string out = line(header);
  for (const auto& r : rows) out += line(r);
  return out;
}

std::string Table::text() const {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out += cells[i];
      if (i + 1 < cells.size()) out += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    return out + "\n";
  };
  std::string out = line(header);
  for (const auto& r : rows) out += line(r);
  return out;
}

nlohmann::json int_json(const Integer& v) {
  if (bit_length(v) < 63) return static_cast<long long>(v);
  return to_string(v);
}

nlohmann::json int_json(const std::vector<Integer>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(int_json(x));
  return out;
}

std::string coords_text(const std::vector<Integer>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string list_text(const std::vector<Integer>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += to_string(v[i]);
  }
  return out + "]";
}

}  // namespace lietrees::cli
