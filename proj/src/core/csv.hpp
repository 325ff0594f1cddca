#ifndef GCG_CORE_CSV_HPP
#define GCG_CORE_CSV_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/types.hpp"

namespace gcg {

// Minimal headered CSV reader. No quoting (none of the formats here need
// it); lines starting with '#' are skipped; parse failures report the
// 1-based line number.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in);

  std::optional<std::size_t> column(const std::string& name) const;

  // Reads the next data row into `fields`. Returns false at EOF.
  bool next(std::vector<std::string>& fields);

  double as_double(const std::vector<std::string>& fields,
                   std::size_t idx) const;

  std::size_t line_number() const { return line_; }

 private:
  std::istream& in_;
  std::unordered_map<std::string, std::size_t> header_;
  std::size_t columns_ = 0;
  std::size_t line_ = 0;
};

std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace gcg

#endif
