#include "export_format.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace isocoulomb::tools {

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc())
        throw std::runtime_error("format_double: to_chars failed");
    return std::string(buf, res.ptr);
}

std::string to_csv(const Table& table) {
    std::string out;
    out.reserve(64 * (table.rows.size() + 1));
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_double(row[c]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::json table_json(const nlohmann::json& params, const Table& table,
                          const nlohmann::json& diagnostics) {
    nlohmann::json j;
    j["params"] = params;
    j["columns"] = table.columns;
    j["data"] = table.rows;
    j["diagnostics"] = diagnostics;
    return j;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

} // namespace isocoulomb::tools
