#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <vector>

namespace fbp::cli {

/// Shortest text with 17 significant digits; "nan"/"inf"/"-inf" otherwise.
std::string fmt17(double v);

/// Comma-separated table with a header row, built in memory.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);
    void row(const std::vector<std::string>& cells);
    [[nodiscard]] std::string str() const;
    [[nodiscard]] std::size_t rows() const { return rows_; }

private:
    std::size_t columns_;
    std::size_t rows_ = 0;
    std::string text_;
};

/// Creates parent directories; throws std::runtime_error on I/O failure.
void write_text(const std::filesystem::path& path, const std::string& text);

struct Contour {
    std::string label;
    std::string color;
    std::vector<double> theta;
    std::vector<double> rho;
};

/// Overlay of closed polar contours, centered, with fixed-precision coordinates.
std::string contour_svg(const std::vector<Contour>& contours, double reference_radius);

}  // namespace fbp::cli
