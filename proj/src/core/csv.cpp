#include "core/csv.hpp"

#include <charconv>
#include <istream>

namespace gcg {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    std::string field = line.substr(start, comma - start);
    // trim surrounding whitespace and a trailing CR
    while (!field.empty() && (field.back() == '\r' || field.back() == ' ' ||
                              field.back() == '\t')) {
      field.pop_back();
    }
    std::size_t lead = 0;
    while (lead < field.size() && (field[lead] == ' ' || field[lead] == '\t')) {
      ++lead;
    }
    out.push_back(field.substr(lead));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

CsvReader::CsvReader(std::istream& in) : in_(in) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_csv_line(line);
    for (std::size_t i = 0; i < fields.size(); ++i) header_[fields[i]] = i;
    columns_ = fields.size();
    return;
  }
  throw input_error("CSV input has no header row");
}

std::optional<std::size_t> CsvReader::column(const std::string& name) const {
  const auto it = header_.find(name);
  if (it == header_.end()) return std::nullopt;
  return it->second;
}

bool CsvReader::next(std::vector<std::string>& fields) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (line.empty() || line[0] == '#') continue;
    fields = split_csv_line(line);
    if (fields.size() < columns_) {
      throw input_error("CSV line " + std::to_string(line_) +
                        ": expected " + std::to_string(columns_) +
                        " fields, got " + std::to_string(fields.size()));
    }
    return true;
  }
  return false;
}

double CsvReader::as_double(const std::vector<std::string>& fields,
                            std::size_t idx) const {
  const std::string& s = fields[idx];
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw input_error("CSV line " + std::to_string(line_) +
                      ": cannot parse number '" + s + "'");
  }
  return value;
}

}  // namespace gcg
