#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace paramres::harness {

struct SvgSeries {
    std::string label;
    std::string color;
    const std::vector<double> *x = nullptr;
    const std::vector<double> *y = nullptr;
};

/// Self-contained polyline plot (axes, ticks, legend). Long series are
/// decimated deterministically; the CSV next to it stays authoritative.
void write_svg_plot(const std::filesystem::path &path,
                    const std::string &title, const std::string &x_label,
                    const std::string &y_label,
                    const std::vector<SvgSeries> &series);

} // namespace paramres::harness
