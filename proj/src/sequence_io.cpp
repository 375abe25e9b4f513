#include "seqforge/sequence_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace seqforge {

OutputFormat parse_output_format(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "bfile") return OutputFormat::bfile;
  throw std::invalid_argument("unknown output format: " + std::string(name));
}

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::table: return "table";
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::bfile: return "bfile";
  }
  return "table";
}

std::string render(const SequenceWindow& w, OutputFormat format) {
  switch (format) {
    case OutputFormat::table: return to_table(w);
    case OutputFormat::csv: return to_csv(w);
    case OutputFormat::json: return to_json(w);
    case OutputFormat::bfile: return to_bfile(w);
  }
  return to_table(w);
}

std::string to_bfile(const SequenceWindow& w) {
  std::string out;
  for (std::size_t i = 0; i < w.terms.size(); ++i) {
    out += std::to_string(w.offset + static_cast<Index>(i));
    out += ' ';
    out += to_decimal_string(w.terms[i]);
    out += '\n';
  }
  return out;
}

std::string to_csv(const SequenceWindow& w) {
  std::string out = "index,value\n";
  for (std::size_t i = 0; i < w.terms.size(); ++i) {
    out += std::to_string(w.offset + static_cast<Index>(i));
    out += ',';
    out += to_decimal_string(w.terms[i]);
    out += '\n';
  }
  return out;
}

std::string to_json(const SequenceWindow& w) {
  nlohmann::ordered_json doc;
  doc["schema"] = kJsonSchemaVersion;
  doc["family"] = w.id;
  doc["offset"] = w.offset;
  auto terms = nlohmann::ordered_json::array();
  for (const BigCount& t : w.terms) terms.push_back(to_decimal_string(t));
  doc["terms"] = std::move(terms);
  return doc.dump() + "\n";
}

std::string to_table(const SequenceWindow& w) {
  std::ostringstream os;
  os << "# " << w.id << '\n';
  std::size_t width = std::to_string(w.last_index()).size();
  width = std::max(width, std::to_string(w.offset).size());
  for (std::size_t i = 0; i < w.terms.size(); ++i) {
    std::string index = std::to_string(w.offset + static_cast<Index>(i));
    os << std::string(width - std::min(width, index.size()), ' ') << index << "  "
       << to_decimal_string(w.terms[i]) << '\n';
  }
  return os.str();
}

SequenceWindow parse_bfile(std::string_view text, std::string id) {
  SequenceWindow w;
  w.id = std::move(id);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    line.remove_prefix(first);

    const auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos)
      throw std::invalid_argument("b-file line " + std::to_string(line_no) + ": expected 'index value'");
    std::string_view value = line.substr(space);
    value.remove_prefix(std::min(value.size(), value.find_first_not_of(" \t")));
    while (!value.empty() && (value.back() == ' ' || value.back() == '\t')) value.remove_suffix(1);

    const BigInt index = parse_integer(line.substr(0, space));
    if (!index.fits_slong_p())
      throw std::invalid_argument("b-file line " + std::to_string(line_no) + ": index out of range");
    const Index idx = index.get_si();
    if (w.terms.empty()) {
      w.offset = idx;
    } else if (idx != w.last_index() + 1) {
      throw std::invalid_argument("b-file line " + std::to_string(line_no) + ": indices must be consecutive");
    }
    w.terms.push_back(parse_integer(value));
  }
  return w;
}

SequenceWindow parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    if (doc.at("schema").get<int>() != kJsonSchemaVersion)
      throw std::invalid_argument("unsupported JSON schema version");
    SequenceWindow w;
    w.id = doc.at("family").get<std::string>();
    w.offset = doc.at("offset").get<Index>();
    for (const auto& t : doc.at("terms")) w.terms.push_back(parse_integer(t.get<std::string>()));
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed sequence JSON: ") + e.what());
  }
}

}  // namespace seqforge
