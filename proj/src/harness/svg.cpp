#include "paramres/harness/svg.hpp"

#include "paramres/errors.hpp"
#include "paramres/harness/csv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace paramres::harness {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0, kRight = 20.0, kTop = 40.0, kBottom = 50.0;
constexpr std::size_t kMaxPointsPerSeries = 4000;

std::string fmt_tick(double v) {
    // ticks get a compact fixed format; data files keep full precision
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

void write_svg_plot(const std::filesystem::path &path,
                    const std::string &title, const std::string &x_label,
                    const std::string &y_label,
                    const std::vector<SvgSeries> &series) {
    if (series.empty())
        throw ValidationError("write_svg_plot: no series");

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto &s : series) {
        if (!s.x || !s.y || s.x->size() != s.y->size() || s.x->empty())
            throw ValidationError("write_svg_plot: bad series '" + s.label +
                                  "'");
        for (double v : *s.x) {
            xmin = std::min(xmin, v);
            xmax = std::max(xmax, v);
        }
        for (double v : *s.y) {
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (!(xmax > xmin)) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (!(ymax > ymin)) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) {
        return kLeft + (x - xmin) / (xmax - xmin) * plot_w;
    };
    auto py = [&](double y) {
        return kTop + (ymax - y) / (ymax - ymin) * plot_h;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           fmt_tick(kWidth) + "\" height=\"" + fmt_tick(kHeight) +
           "\" viewBox=\"0 0 " + fmt_tick(kWidth) + " " + fmt_tick(kHeight) +
           "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + fmt_tick(kWidth / 2) +
           "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"15\">" +
           title + "</text>\n";

    // axes + ticks
    svg += "<g stroke=\"#444\" stroke-width=\"1\" font-family=\"sans-serif\" "
           "font-size=\"11\">\n";
    svg += "<line x1=\"" + fmt_tick(kLeft) + "\" y1=\"" +
           fmt_tick(kTop + plot_h) + "\" x2=\"" + fmt_tick(kLeft + plot_w) +
           "\" y2=\"" + fmt_tick(kTop + plot_h) + "\"/>\n";
    svg += "<line x1=\"" + fmt_tick(kLeft) + "\" y1=\"" + fmt_tick(kTop) +
           "\" x2=\"" + fmt_tick(kLeft) + "\" y2=\"" + fmt_tick(kTop + plot_h) +
           "\"/>\n";
    const int nticks = 6;
    for (int i = 0; i <= nticks; ++i) {
        const double fx = xmin + (xmax - xmin) * i / nticks;
        const double fy = ymin + (ymax - ymin) * i / nticks;
        svg += "<line x1=\"" + fmt_tick(px(fx)) + "\" y1=\"" +
               fmt_tick(kTop + plot_h) + "\" x2=\"" + fmt_tick(px(fx)) +
               "\" y2=\"" + fmt_tick(kTop + plot_h + 5) + "\"/>\n";
        svg += "<text x=\"" + fmt_tick(px(fx)) + "\" y=\"" +
               fmt_tick(kTop + plot_h + 18) +
               "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#222\">" +
               fmt_tick(fx) + "</text>\n";
        svg += "<line x1=\"" + fmt_tick(kLeft - 5) + "\" y1=\"" +
               fmt_tick(py(fy)) + "\" x2=\"" + fmt_tick(kLeft) + "\" y2=\"" +
               fmt_tick(py(fy)) + "\"/>\n";
        svg += "<text x=\"" + fmt_tick(kLeft - 8) + "\" y=\"" +
               fmt_tick(py(fy) + 4) +
               "\" text-anchor=\"end\" stroke=\"none\" fill=\"#222\">" +
               fmt_tick(fy) + "</text>\n";
    }
    svg += "</g>\n";
    svg += "<text x=\"" + fmt_tick(kLeft + plot_w / 2) + "\" y=\"" +
           fmt_tick(kHeight - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">" +
           x_label + "</text>\n";
    svg += "<text x=\"16\" y=\"" + fmt_tick(kTop + plot_h / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\" transform=\"rotate(-90 16 " +
           fmt_tick(kTop + plot_h / 2) + ")\">" + y_label + "</text>\n";

    for (const auto &s : series) {
        const std::size_t n = s.x->size();
        const std::size_t step =
            std::max<std::size_t>(1, n / kMaxPointsPerSeries);
        std::string pts;
        for (std::size_t i = 0; i < n; i += step) {
            pts += fmt_tick(px((*s.x)[i]));
            pts += ',';
            pts += fmt_tick(py((*s.y)[i]));
            pts += ' ';
        }
        if ((n - 1) % step != 0) {
            pts += fmt_tick(px(s.x->back()));
            pts += ',';
            pts += fmt_tick(py(s.y->back()));
        }
        svg += "<polyline fill=\"none\" stroke=\"" + s.color +
               "\" stroke-width=\"1.2\" points=\"" + pts + "\"/>\n";
    }

    // legend
    double ly = kTop + 8;
    for (const auto &s : series) {
        svg += "<line x1=\"" + fmt_tick(kLeft + plot_w - 150) + "\" y1=\"" +
               fmt_tick(ly) + "\" x2=\"" + fmt_tick(kLeft + plot_w - 120) +
               "\" y2=\"" + fmt_tick(ly) + "\" stroke=\"" + s.color +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + fmt_tick(kLeft + plot_w - 114) + "\" y=\"" +
               fmt_tick(ly + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + s.label +
               "</text>\n";
        ly += 18;
    }
    svg += "</svg>\n";
    write_text_atomic(path, svg);
}

} // namespace paramres::harness
