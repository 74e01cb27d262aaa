#include "fbp/cli/artifacts.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fbp::cli {

std::string fmt17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : columns_(header.size()) { row(header); rows_ = 0; }

void CsvTable::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) throw std::logic_error("CsvTable: row width does not match the header");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) text_ += ',';
        text_ += cells[i];
    }
    text_ += '\n';
    ++rows_;
}

std::string CsvTable::str() const { return text_; }

void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f << text;
    if (!f) throw std::runtime_error("write to " + path.string() + " failed");
}

std::string contour_svg(const std::vector<Contour>& contours, double reference_radius) {
    double extent = reference_radius;
    for (const Contour& c : contours) {
        for (double r : c.rho) extent = std::max(extent, std::abs(r));
    }
    const double size = 480.0;
    const double scale = 0.42 * size / extent;
    const double mid = 0.5 * size;
    char buf[96];
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    std::snprintf(buf, sizeof buf, "%.4f", reference_radius * scale);
    os << "<circle cx=\"" << mid << "\" cy=\"" << mid << "\" r=\"" << buf
       << "\" fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"4 4\"/>\n";
    int legend = 0;
    for (const Contour& c : contours) {
        os << "<polygon fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t j = 0; j < c.theta.size(); ++j) {
            const double x = mid + scale * c.rho[j] * std::cos(c.theta[j]);
            const double y = mid - scale * c.rho[j] * std::sin(c.theta[j]);
            std::snprintf(buf, sizeof buf, "%s%.4f,%.4f", j == 0 ? "" : " ", x, y);
            os << buf;
        }
        os << "\"/>\n";
        os << "<text x=\"12\" y=\"" << 20 + 18 * legend++ << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\""
           << c.color << "\">" << c.label << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace fbp::cli
