// Minimal static SVG line charts for sweep results. Cosmetic companion to
// the CSV output: one chart per sweep, one polyline per grid series.
#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "parity/sweep.hpp"

namespace parity {

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;  // sorted by x
};

namespace detail {

inline std::string fmt_num(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace detail

inline std::string render_line_chart(const std::string& title, const std::string& x_label,
                                     const std::string& y_label,
                                     const std::vector<PlotSeries>& series) {
    const double width = 720, height = 480;
    const double left = 70, right = 40, top = 40, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
    bool first = true;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            if (first) {
                x_min = x_max = x;
                y_min = y_max = y;
                first = false;
            }
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    if (x_max == x_min) x_max = x_min + 1;
    if (y_max == y_min) y_max = y_min + 1;
    const double y_pad = 0.05 * (y_max - y_min);
    y_min -= y_pad;
    y_max += y_pad;

    const auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
    const auto py = [&](double y) { return top + plot_h - (y - y_min) / (y_max - y_min) * plot_h; };

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    const int palette_size = 8;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\" "
           "viewBox=\"0 0 720 480\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out += "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";
    out += "<text x=\"360\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" + title + "</text>\n";

    // Axes with four ticks each.
    out += "<line x1=\"" + detail::fmt_num(left) + "\" y1=\"" + detail::fmt_num(top) +
           "\" x2=\"" + detail::fmt_num(left) + "\" y2=\"" + detail::fmt_num(top + plot_h) +
           "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + detail::fmt_num(left) + "\" y1=\"" + detail::fmt_num(top + plot_h) +
           "\" x2=\"" + detail::fmt_num(left + plot_w) + "\" y2=\"" +
           detail::fmt_num(top + plot_h) + "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 3; ++k) {
        const double fx = x_min + (x_max - x_min) * k / 3.0;
        const double fy = y_min + (y_max - y_min) * k / 3.0;
        out += "<text x=\"" + detail::fmt_num(px(fx)) + "\" y=\"" +
               detail::fmt_num(top + plot_h + 18) + "\" text-anchor=\"middle\">" +
               detail::fmt_num(fx) + "</text>\n";
        out += "<text x=\"" + detail::fmt_num(left - 8) + "\" y=\"" +
               detail::fmt_num(py(fy) + 4) + "\" text-anchor=\"end\">" + detail::fmt_num(fy) +
               "</text>\n";
    }
    out += "<text x=\"" + detail::fmt_num(left + plot_w / 2) + "\" y=\"" +
           detail::fmt_num(height - 12) + "\" text-anchor=\"middle\">" + x_label + "</text>\n";
    out += "<text x=\"16\" y=\"" + detail::fmt_num(top + plot_h / 2) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
           detail::fmt_num(top + plot_h / 2) + ")\">" + y_label + "</text>\n";

    int color = 0;
    double legend_y = top + 8;
    for (const auto& s : series) {
        const char* stroke = palette[color % palette_size];
        std::string pts;
        for (const auto& [x, y] : s.points) {
            pts += detail::fmt_num(px(x)) + "," + detail::fmt_num(py(y)) + " ";
        }
        out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + stroke +
               "\" stroke-width=\"1.8\"/>\n";
        out += "<text x=\"" + detail::fmt_num(left + plot_w - 4) + "\" y=\"" +
               detail::fmt_num(legend_y) + "\" text-anchor=\"end\" fill=\"" + stroke + "\">" +
               s.label + "</text>\n";
        legend_y += 16;
        ++color;
    }
    out += "</svg>\n";
    return out;
}

// Chart for a finished sweep. Self-winning fractions plot against the degree
// with one line per node count; the other kinds plot against the node count
// with one line per degree.
inline std::string svg_for_sweep(const SweepSpec& spec, const std::vector<SweepCell>& cells) {
    std::map<std::string, PlotSeries> by_label;
    std::vector<std::string> order;
    const bool x_is_degree = (spec.kind == SweepKind::SelfWinningFrac);
    for (const SweepCell& c : cells) {
        const std::string label =
            x_is_degree ? ("n=" + std::to_string(c.n)) : ("d=" + std::to_string(c.d_effective));
        if (!by_label.count(label)) {
            by_label[label].label = label;
            order.push_back(label);
        }
        by_label[label].points.emplace_back(
            x_is_degree ? static_cast<double>(c.d_effective) : static_cast<double>(c.n),
            c.metric);
    }
    std::vector<PlotSeries> series;
    for (const std::string& label : order) {
        auto s = by_label[label];
        std::sort(s.points.begin(), s.points.end());
        series.push_back(std::move(s));
    }
    const std::string metric_name =
        (spec.kind == SweepKind::Timing) ? "seconds" : "fraction";
    return render_line_chart(sweep_kind_name(spec.kind), x_is_degree ? "degree" : "nodes",
                             metric_name, series);
}

}  // namespace parity
