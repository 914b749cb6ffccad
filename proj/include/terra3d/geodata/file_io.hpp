#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace terra3d::geodata {

std::string read_text_file(const std::filesystem::path& path);

// Writes to "<path>.tmp.<pid>" and renames over `path`, so readers never
// observe a half-written file. Throws terra3d::Error on failure.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

// Hex-encoded SHA-256 of the file contents.
std::string file_sha256(const std::filesystem::path& path);

// printf("%.10g") without locale dependence.
std::string format_number(double v);

}  // namespace terra3d::geodata
