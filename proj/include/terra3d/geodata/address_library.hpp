#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace terra3d::geodata {

// Case-fold ASCII letters, turn punctuation into spaces, split on whitespace.
std::vector<std::string> normalize_address(std::string_view text);

struct AddressRecord {
    std::string id;
    std::string address;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    std::vector<std::string> tokens;
};

class AddressLibrary {
public:
    AddressLibrary() = default;
    // Computes tokens; throws FormatError on duplicate ids or empty addresses.
    explicit AddressLibrary(std::vector<AddressRecord> records, const std::string& source = {});

    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }
    std::span<const AddressRecord> records() const { return records_; }

private:
    std::vector<AddressRecord> records_;
};

// CSV with header `id,address,x,y,z`; the address field may be quoted.
AddressLibrary load_address_library(const std::filesystem::path& path);
AddressLibrary parse_address_library(std::string_view text, const std::string& source = {});

}  // namespace terra3d::geodata
