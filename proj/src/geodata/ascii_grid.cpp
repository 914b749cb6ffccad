#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <string>

#include "terra3d/error.hpp"
#include "terra3d/geodata/csv.hpp"
#include "terra3d/geodata/file_io.hpp"
#include "terra3d/geodata/raster_grid.hpp"

namespace terra3d::geodata {

namespace {

constexpr std::array<std::string_view, 6> kHeaderKeys = {
    "ncols", "nrows", "xllcorner", "yllcorner", "cellsize", "nodata_value"};

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

// Tokenizer over the whole text that tracks line numbers for diagnostics.
class Tokens {
public:
    explicit Tokens(std::string_view text) : text_(text) {}

    bool next(std::string_view& tok) {
        while (pos_ < text_.size() && is_space(text_[pos_])) {
            if (text_[pos_] == '\n') {
                ++line_;
            }
            ++pos_;
        }
        if (pos_ >= text_.size()) {
            return false;
        }
        const auto start = pos_;
        while (pos_ < text_.size() && !is_space(text_[pos_])) {
            ++pos_;
        }
        tok = text_.substr(start, pos_ - start);
        return true;
    }

    std::size_t line() const { return line_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

std::size_t parse_dimension(std::string_view tok, std::string_view key, const std::string& source) {
    double v = 0.0;
    if (!csv::parse_real(tok, v) || v < 1.0 || v != std::floor(v) || v > 1e9) {
        throw FormatError(source, std::string(key) + " must be a positive integer, got '" +
                                      std::string(tok) + "'");
    }
    return static_cast<std::size_t>(v);
}

}  // namespace

RasterGrid parse_raster(std::string_view text, const std::string& source) {
    Tokens tokens(text);
    std::array<std::string_view, 6> header{};
    for (std::size_t i = 0; i < kHeaderKeys.size(); ++i) {
        std::string_view key;
        std::string_view value;
        if (!tokens.next(key)) {
            throw FormatError(source, "missing header key " + std::string(kHeaderKeys[i]));
        }
        const std::string k = lower(key);
        if (k != kHeaderKeys[i]) {
            const auto seen = std::find(kHeaderKeys.begin(), kHeaderKeys.begin() + static_cast<long>(i), k);
            if (seen != kHeaderKeys.begin() + static_cast<long>(i)) {
                throw FormatError(source, "duplicate header key " + std::string(key));
            }
            throw FormatError(source, "missing header key " + std::string(kHeaderKeys[i]) +
                                          " (found '" + std::string(key) + "')");
        }
        if (!tokens.next(value)) {
            throw FormatError(source, "missing value for header key " + std::string(key));
        }
        header[i] = value;
    }

    GridSpec spec;
    spec.ncols = parse_dimension(header[0], "ncols", source);
    spec.nrows = parse_dimension(header[1], "nrows", source);
    double nodata = 0.0;
    const std::array<double*, 4> reals = {&spec.x_origin, &spec.y_origin, &spec.cellsize, &nodata};
    for (std::size_t i = 0; i < reals.size(); ++i) {
        if (!csv::parse_real(header[i + 2], *reals[i])) {
            throw FormatError(source, "non-numeric value for " + std::string(kHeaderKeys[i + 2]) +
                                          ": '" + std::string(header[i + 2]) + "'");
        }
    }
    if (!(spec.cellsize > 0.0)) {
        throw FormatError(source, "cellsize must be positive");
    }

    const std::size_t expected = spec.ncols * spec.nrows;
    std::vector<double> values;
    values.reserve(expected);
    std::string_view tok;
    while (tokens.next(tok)) {
        if (std::any_of(kHeaderKeys.begin(), kHeaderKeys.end(),
                        [&](std::string_view k) { return lower(tok) == k; })) {
            throw FormatError(source, "duplicate header key " + std::string(tok));
        }
        double v = 0.0;
        if (!csv::parse_real(tok, v)) {
            throw FormatError(source, "non-numeric cell '" + std::string(tok) + "' on line " +
                                          std::to_string(tokens.line()));
        }
        values.push_back(v);
    }
    if (values.size() != expected) {
        throw FormatError(source, "value count mismatch: expected " + std::to_string(expected) +
                                      " (" + std::to_string(spec.nrows) + "x" + std::to_string(spec.ncols) +
                                      "), got " + std::to_string(values.size()));
    }
    return RasterGrid(spec, nodata, std::move(values));
}

RasterGrid load_raster(const std::filesystem::path& path) {
    return parse_raster(read_text_file(path), path.string());
}

std::string format_raster(const RasterGrid& grid) {
    std::string out;
    out += "ncols " + std::to_string(grid.ncols()) + "\n";
    out += "nrows " + std::to_string(grid.nrows()) + "\n";
    out += "xllcorner " + format_number(grid.x_origin()) + "\n";
    out += "yllcorner " + format_number(grid.y_origin()) + "\n";
    out += "cellsize " + format_number(grid.cellsize()) + "\n";
    out += "NODATA_value " + format_number(grid.nodata_value()) + "\n";
    for (std::size_t r = 0; r < grid.nrows(); ++r) {
        for (std::size_t c = 0; c < grid.ncols(); ++c) {
            if (c > 0) {
                out += ' ';
            }
            const double v = grid.at(r, c);
            out += format_number(grid.is_missing_value(v) ? grid.nodata_value() : v);
        }
        out += '\n';
    }
    return out;
}

void save_raster(const RasterGrid& grid, const std::filesystem::path& path) {
    write_file_atomic(path, format_raster(grid));
}

}  // namespace terra3d::geodata
