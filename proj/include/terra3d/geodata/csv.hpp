#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace terra3d::geodata::csv {

// Splits one CSV record. Fields may be wrapped in double quotes; a doubled
// quote inside a quoted field is a literal quote. Unquoted fields are trimmed.
std::vector<std::string> split_record(std::string_view line);

// Splits text into lines, dropping '\r' and blank lines. Returns
// (1-based line number, line) pairs.
std::vector<std::pair<std::size_t, std::string_view>> nonblank_lines(std::string_view text);

// Strict parse of a whole field as a finite real; false on trailing garbage.
bool parse_real(std::string_view field, double& out);

}  // namespace terra3d::geodata::csv
