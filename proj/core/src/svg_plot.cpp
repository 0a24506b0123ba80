#include "neorl/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace neorl {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 540.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 830.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 490.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
    // Short fixed form is enough for coordinates and tick labels.
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

void write_curves_svg(std::ostream& os,
                      const std::vector<std::pair<std::string, AggregateCurve>>& curves,
                      const std::string& title) {
    double x_max = 1.0;
    double y_min = 0.0;
    double y_max = 1.0;
    bool any = false;
    for (const auto& [name, curve] : curves) {
        for (const AggregateSample& s : curve.samples) {
            x_max = any ? std::max(x_max, s.minutes) : s.minutes;
            y_min = any ? std::min(y_min, s.mean) : s.mean;
            y_max = any ? std::max(y_max, s.mean) : s.mean;
            any = true;
        }
    }
    if (y_max - y_min < 1e-9) {
        y_min -= 1.0;
        y_max += 1.0;
    }
    const double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;
    if (x_max <= 0.0) x_max = 1.0;

    const auto sx = [&](double minutes) {
        return kLeft + (kRight - kLeft) * (minutes / x_max);
    };
    const auto sy = [&](double value) {
        return kBottom - (kBottom - kTop) * ((value - y_min) / (y_max - y_min));
    };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
       << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"28\" text-anchor=\"middle\" "
          "font-family=\"sans-serif\" font-size=\"16\">"
       << title << "</text>\n";

    // Grid and ticks.
    os << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (int i = 0; i <= 5; ++i) {
        const double minutes = x_max * i / 5.0;
        const double x = sx(minutes);
        os << "<line x1=\"" << x << "\" y1=\"" << kTop << "\" x2=\"" << x << "\" y2=\"" << kBottom
           << "\" stroke=\"#ddd\"/>\n";
        os << "<text x=\"" << x << "\" y=\"" << kBottom + 18 << "\" text-anchor=\"middle\">"
           << fmt(minutes) << "</text>\n";
        const double value = y_min + (y_max - y_min) * i / 5.0;
        const double y = sy(value);
        os << "<line x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\"" << kRight << "\" y2=\"" << y
           << "\" stroke=\"#ddd\"/>\n";
        os << "<text x=\"" << kLeft - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">"
           << fmt(value) << "</text>\n";
    }
    os << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kBottom + 38
       << "\" text-anchor=\"middle\">minutes</text>\n";
    os << "</g>\n";
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kRight - kLeft
       << "\" height=\"" << kBottom - kTop << "\" fill=\"none\" stroke=\"#333\"/>\n";

    int color = 0;
    for (const auto& [name, curve] : curves) {
        const char* stroke = kPalette[color % (sizeof(kPalette) / sizeof(kPalette[0]))];
        os << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.8\" points=\"";
        for (const AggregateSample& s : curve.samples) {
            os << fmt(sx(s.minutes)) << ',' << fmt(sy(s.mean)) << ' ';
        }
        os << "\"/>\n";
        const double ly = kTop + 18.0 + 18.0 * color;
        os << "<line x1=\"" << kLeft + 12 << "\" y1=\"" << ly << "\" x2=\"" << kLeft + 40
           << "\" y2=\"" << ly << "\" stroke=\"" << stroke << "\" stroke-width=\"1.8\"/>\n";
        os << "<text x=\"" << kLeft + 46 << "\" y=\"" << ly + 4
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << name << "</text>\n";
        ++color;
    }
    os << "</svg>\n";
}

}  // namespace neorl
