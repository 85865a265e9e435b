#include "posenergy/report.hpp"

#include "posenergy/text.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace posenergy {

namespace {

constexpr std::array<const char*, 16> palette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939", "#8c6d31", "#843c39", "#7b4173", "#3182bd",
};

struct LogAxes {
    double x_min;
    double x_max;
    double y_min;
    double y_max;
    double left;
    double top;
    double width;
    double height;

    double px(double x) const {
        return left + (std::log10(x) - std::log10(x_min)) / (std::log10(x_max) - std::log10(x_min)) * width;
    }
    double py(double y) const {
        return top + height - (std::log10(y) - std::log10(y_min)) / (std::log10(y_max) - std::log10(y_min)) * height;
    }
};

std::string coord(double v) { return format_fixed(v, 3); }

double decade_floor(double v) { return std::pow(10.0, std::floor(std::log10(v))); }
double decade_ceil(double v) { return std::pow(10.0, std::ceil(std::log10(v))); }

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;

    void add(double v) {
        if (v > 0.0 && std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    bool empty() const { return hi == 0.0; }
};

std::string decade_label(double v) {
    const int exponent = static_cast<int>(std::lround(std::log10(v)));
    return "10<tspan dy=\"-6\" font-size=\"10\">" + std::to_string(exponent) + "</tspan>";
}

} // namespace

std::string chart_svg(const ChartData& chart, int width, int height) {
    Range xs;
    Range ys;
    for (const auto& s : chart.series) {
        for (const auto& p : s.band.points) {
            xs.add(p.tps);
            if (p.physical) {
                ys.add(p.kwh_per_tx_lower);
                ys.add(p.kwh_per_tx_upper);
            }
        }
        if (s.latest) {
            ys.add(s.latest->kwh_per_tx_lower);
            ys.add(s.latest->kwh_per_tx_upper);
        }
    }
    for (const auto& b : {chart.bitcoin, chart.visa}) {
        if (b) {
            xs.add(b->tps);
            ys.add(b->kwh_per_tx_lower);
            ys.add(b->kwh_per_tx_upper);
        }
    }
    if (xs.empty()) {
        xs.add(0.01);
        xs.add(1e4);
    }
    if (ys.empty()) {
        ys.add(1e-8);
        ys.add(1.0);
    }

    LogAxes axes{decade_floor(xs.lo), decade_ceil(xs.hi), decade_floor(ys.lo), decade_ceil(ys.hi),
                 90.0, 40.0, width - 90.0 - 220.0, height - 40.0 - 70.0};
    if (axes.x_max <= axes.x_min) {
        axes.x_max = axes.x_min * 10.0;
    }
    if (axes.y_max <= axes.y_min) {
        axes.y_max = axes.y_min * 10.0;
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    svg << "<g id=\"plot\" data-x-min=\"" << format_exact(axes.x_min) << "\" data-x-max=\""
        << format_exact(axes.x_max) << "\" data-y-min=\"" << format_exact(axes.y_min) << "\" data-y-max=\""
        << format_exact(axes.y_max) << "\" data-left=\"" << coord(axes.left) << "\" data-top=\""
        << coord(axes.top) << "\" data-width=\"" << coord(axes.width) << "\" data-height=\""
        << coord(axes.height) << "\">\n";

    // Decade grid and tick labels.
    svg << "<g class=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (double x = axes.x_min; x <= axes.x_max * 1.0000001; x *= 10.0) {
        svg << "<line x1=\"" << coord(axes.px(x)) << "\" y1=\"" << coord(axes.top) << "\" x2=\""
            << coord(axes.px(x)) << "\" y2=\"" << coord(axes.top + axes.height) << "\"/>\n";
    }
    for (double y = axes.y_min; y <= axes.y_max * 1.0000001; y *= 10.0) {
        svg << "<line x1=\"" << coord(axes.left) << "\" y1=\"" << coord(axes.py(y)) << "\" x2=\""
            << coord(axes.left + axes.width) << "\" y2=\"" << coord(axes.py(y)) << "\"/>\n";
    }
    svg << "</g>\n<g class=\"ticks\">\n";
    for (double x = axes.x_min; x <= axes.x_max * 1.0000001; x *= 10.0) {
        svg << "<text x=\"" << coord(axes.px(x)) << "\" y=\"" << coord(axes.top + axes.height + 20)
            << "\" text-anchor=\"middle\">" << decade_label(x) << "</text>\n";
    }
    for (double y = axes.y_min; y <= axes.y_max * 1.0000001; y *= 10.0) {
        svg << "<text x=\"" << coord(axes.left - 8) << "\" y=\"" << coord(axes.py(y) + 4)
            << "\" text-anchor=\"end\">" << decade_label(y) << "</text>\n";
    }
    svg << "</g>\n";
    svg << "<rect class=\"frame\" x=\"" << coord(axes.left) << "\" y=\"" << coord(axes.top) << "\" width=\""
        << coord(axes.width) << "\" height=\"" << coord(axes.height) << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << coord(axes.left + axes.width / 2) << "\" y=\"" << height - 20
        << "\" text-anchor=\"middle\">Throughput (tx/s)</text>\n";
    svg << "<text transform=\"translate(22," << coord(axes.top + axes.height / 2)
        << ") rotate(-90)\" text-anchor=\"middle\">Energy per transaction (kWh)</text>\n";

    for (std::size_t i = 0; i < chart.series.size(); ++i) {
        const auto& s = chart.series[i];
        const char* color = palette[i % palette.size()];
        const auto& pts = s.band.points;
        // One polygon per run of physical points: upper edge forward, lower edge back.
        std::size_t start = 0;
        while (start < pts.size()) {
            if (!pts[start].physical) {
                ++start;
                continue;
            }
            std::size_t end = start;
            while (end < pts.size() && pts[end].physical) {
                ++end;
            }
            svg << "<polygon class=\"band\" data-network=\"" << s.band.network.str() << "\" fill=\"" << color
                << "\" fill-opacity=\"0.35\" stroke=\"" << color << "\" stroke-width=\"1\" points=\"";
            for (std::size_t j = start; j < end; ++j) {
                svg << coord(axes.px(pts[j].tps)) << ',' << coord(axes.py(pts[j].kwh_per_tx_upper)) << ' ';
            }
            for (std::size_t j = end; j-- > start;) {
                svg << coord(axes.px(pts[j].tps)) << ',' << coord(axes.py(pts[j].kwh_per_tx_lower))
                    << (j == start ? "" : " ");
            }
            svg << "\"/>\n";
            start = end;
        }
        if (s.latest) {
            for (double v : {s.latest->kwh_per_tx_lower, s.latest->kwh_per_tx_upper}) {
                svg << "<circle class=\"marker\" data-network=\"" << s.band.network.str() << "\" cx=\""
                    << coord(axes.px(s.latest->tps)) << "\" cy=\"" << coord(axes.py(v)) << "\" r=\"4\" fill=\""
                    << color << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
            }
        }
        const double legend_y = axes.top + 10 + 18.0 * static_cast<double>(i);
        svg << "<rect x=\"" << coord(axes.left + axes.width + 20) << "\" y=\"" << coord(legend_y - 9)
            << "\" width=\"14\" height=\"10\" fill=\"" << color << "\" fill-opacity=\"0.5\"/>\n";
        svg << "<text x=\"" << coord(axes.left + axes.width + 40) << "\" y=\"" << coord(legend_y) << "\">"
            << s.band.network.str() << "</text>\n";
    }

    std::size_t legend_row = chart.series.size();
    auto legend = [&](const char* color, const char* label) {
        const double legend_y = axes.top + 10 + 18.0 * static_cast<double>(legend_row++);
        svg << "<rect x=\"" << coord(axes.left + axes.width + 20) << "\" y=\"" << coord(legend_y - 9)
            << "\" width=\"14\" height=\"10\" fill=\"" << color << "\"/>\n";
        svg << "<text x=\"" << coord(axes.left + axes.width + 40) << "\" y=\"" << coord(legend_y) << "\">" << label
            << "</text>\n";
    };
    if (chart.bitcoin) {
        const double x = axes.px(chart.bitcoin->tps);
        const double y_top = axes.py(chart.bitcoin->kwh_per_tx_upper);
        const double y_bottom = axes.py(chart.bitcoin->kwh_per_tx_lower);
        svg << "<rect class=\"baseline\" data-network=\"bitcoin\" x=\"" << coord(x - 4) << "\" y=\"" << coord(y_top)
            << "\" width=\"8\" height=\"" << coord(std::max(y_bottom - y_top, 1.0))
            << "\" fill=\"#f7931a\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
        legend("#f7931a", "bitcoin (lower-upper)");
    }
    if (chart.visa) {
        svg << "<circle class=\"baseline\" data-network=\"visa\" cx=\"" << coord(axes.px(chart.visa->tps))
            << "\" cy=\"" << coord(axes.py(chart.visa->kwh_per_tx_mid))
            << "\" r=\"6\" fill=\"#1a1f71\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
        legend("#1a1f71", "visanet");
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

} // namespace posenergy
