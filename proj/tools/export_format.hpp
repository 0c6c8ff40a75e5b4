#ifndef ISOCOULOMB_TOOLS_EXPORT_FORMAT_HPP
#define ISOCOULOMB_TOOLS_EXPORT_FORMAT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace isocoulomb::tools {

// Shortest decimal string that parses back to exactly the same double
// (std::to_chars round-trip mode).
std::string format_double(double v);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows; // each row has columns.size() entries
};

// Header line "col1,col2,...\n" followed by one line per row; fields via
// format_double, '\n' line ends, no trailing delimiter.
std::string to_csv(const Table& table);

// {"columns": [...], "data": [[...], ...], "diagnostics": {...},
//  "params": {...}} with keys emitted in sorted order so output bytes are
// deterministic and reparse+dump is the identity.
nlohmann::json table_json(const nlohmann::json& params, const Table& table,
                          const nlohmann::json& diagnostics);

// FNV-1a 64-bit content checksum, rendered as 16 hex digits.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

} // namespace isocoulomb::tools

#endif
