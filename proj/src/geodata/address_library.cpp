#include "terra3d/geodata/address_library.hpp"

#include <array>
#include <cmath>
#include <set>

#include "terra3d/error.hpp"
#include "terra3d/geodata/csv.hpp"
#include "terra3d/geodata/file_io.hpp"

namespace terra3d::geodata {

namespace {

bool is_ascii_punct(unsigned char c) {
    return (c >= 0x21 && c <= 0x2f) || (c >= 0x3a && c <= 0x40) || (c >= 0x5b && c <= 0x60) ||
           (c >= 0x7b && c <= 0x7e);
}

bool is_ascii_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

}  // namespace

std::vector<std::string> normalize_address(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (const char ch : text) {
        const auto c = static_cast<unsigned char>(ch);
        if (is_ascii_space(c) || is_ascii_punct(c)) {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
            continue;
        }
        current.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : ch);
    }
    if (!current.empty()) {
        tokens.push_back(std::move(current));
    }
    return tokens;
}

AddressLibrary::AddressLibrary(std::vector<AddressRecord> records, const std::string& source)
    : records_(std::move(records)) {
    std::set<std::string, std::less<>> ids;
    for (auto& r : records_) {
        if (r.id.empty()) {
            throw FormatError(source, "empty id field");
        }
        if (!ids.insert(r.id).second) {
            throw FormatError(source, "duplicate id '" + r.id + "'");
        }
        r.tokens = normalize_address(r.address);
        if (r.tokens.empty()) {
            throw FormatError(source, "empty address field for id '" + r.id + "'");
        }
    }
}

AddressLibrary parse_address_library(std::string_view text, const std::string& source) {
    const auto lines = csv::nonblank_lines(text);
    if (lines.empty()) {
        throw FormatError(source, "missing header line");
    }
    const auto header = csv::split_record(lines.front().second);
    if (header != std::vector<std::string>{"id", "address", "x", "y", "z"}) {
        throw FormatError(source, "header must be id,address,x,y,z");
    }
    std::vector<AddressRecord> records;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto [lineno, line] = lines[li];
        const auto fields = csv::split_record(line);
        const std::string where = " on line " + std::to_string(lineno);
        if (fields.size() != 5) {
            throw FormatError(source, "ragged row" + where + ": expected 5 fields, got " +
                                          std::to_string(fields.size()));
        }
        AddressRecord r;
        r.id = fields[0];
        r.address = fields[1];
        const std::array<double*, 3> coords = {&r.x, &r.y, &r.z};
        for (std::size_t c = 0; c < 3; ++c) {
            if (!csv::parse_real(fields[c + 2], *coords[c])) {
                throw FormatError(source, "non-numeric coordinate '" + fields[c + 2] + "'" + where);
            }
        }
        if (normalize_address(r.address).empty()) {
            throw FormatError(source, "empty address field" + where);
        }
        records.push_back(std::move(r));
    }
    return AddressLibrary(std::move(records), source);
}

AddressLibrary load_address_library(const std::filesystem::path& path) {
    return parse_address_library(read_text_file(path), path.string());
}

}  // namespace terra3d::geodata
