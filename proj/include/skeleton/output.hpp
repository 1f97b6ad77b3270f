#pragma once

// Deterministic serialisation helpers: fixed 17-significant-digit CSV, JSON
// with non-finite values spelled out, and a minimal SVG line plot.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace skeleton {

inline constexpr const char* kVersion = "1.0.0";

/// "%.17g", with "inf", "-inf" and "nan" for non-finite values.
inline std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

/// JSON number, or a string for non-finite values (JSON has no infinity).
inline nlohmann::json json_number(double x) {
    if (std::isfinite(x)) return x;
    return format_double(x);
}

/// The only non-deterministic line in any output; suppressed by --no-meta.
inline std::string metadata_line(const std::string& command) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return std::string("skeleton ") + kVersion + " " + command + " " + stamp;
}

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void comment(const std::string& text) { out_ << "# " << text << '\n'; }

    void header(const std::vector<std::string>& columns) { row(columns); }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << escape(cells[i]);
        }
        out_ << '\n';
    }

private:
    static std::string escape(const std::string& cell) {
        if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
        std::string quoted = "\"";
        for (char c : cell) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        return quoted + '"';
    }

    std::ostream& out_;
};

struct PlotSeries {
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotLabels {
    std::string title;
    std::string x_label;
    std::string y_label;
};

namespace detail {

inline std::string svg_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

inline std::string svg_number(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3f", x);
    return buffer;
}

inline std::string tick_label(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.4g", x);
    return buffer;
}

} // namespace detail

/// Single-polyline plot with axes, five ticks per axis and labels.
inline std::string svg_line_plot(const PlotSeries& series, const PlotLabels& labels) {
    constexpr double width = 640.0, height = 480.0;
    constexpr double left = 80.0, right = 20.0, top = 40.0, bottom = 60.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    if (!series.x.empty()) {
        const auto [xa, xb] = std::minmax_element(series.x.begin(), series.x.end());
        const auto [ya, yb] = std::minmax_element(series.y.begin(), series.y.end());
        x_min = *xa;
        x_max = *xb;
        y_min = std::min(0.0, *ya);
        y_max = *yb;
    }
    if (x_max <= x_min) x_max = x_min + 1.0;
    if (y_max <= y_min) y_max = y_min + 1.0;
    const auto sx = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
    const auto sy = [&](double y) { return top + (1.0 - (y - y_min) / (y_max - y_min)) * plot_h; };

    std::ostringstream svg;
    svg << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << width << R"(" height=")" << height
        << R"(" viewBox="0 0 )" << width << ' ' << height << R"(">)" << '\n';
    svg << R"(<rect width="100%" height="100%" fill="white"/>)" << '\n';
    svg << R"(<text x=")" << width / 2 << R"(" y="24" text-anchor="middle" font-size="16">)"
        << detail::svg_escape(labels.title) << "</text>\n";
    // Axes.
    svg << R"(<line x1=")" << left << R"(" y1=")" << top + plot_h << R"(" x2=")" << left + plot_w << R"(" y2=")"
        << top + plot_h << R"(" stroke="black"/>)" << '\n';
    svg << R"(<line x1=")" << left << R"(" y1=")" << top << R"(" x2=")" << left << R"(" y2=")" << top + plot_h
        << R"(" stroke="black"/>)" << '\n';
    for (int i = 0; i <= 4; ++i) {
        const double xv = x_min + (x_max - x_min) * i / 4.0;
        const double yv = y_min + (y_max - y_min) * i / 4.0;
        svg << R"(<text x=")" << detail::svg_number(sx(xv)) << R"(" y=")" << top + plot_h + 18
            << R"(" text-anchor="middle" font-size="11">)" << detail::tick_label(xv)
            << "</text>\n";
        svg << R"(<text x=")" << left - 6 << R"(" y=")" << detail::svg_number(sy(yv) + 4)
            << R"(" text-anchor="end" font-size="11">)" << detail::tick_label(yv)
            << "</text>\n";
    }
    svg << R"(<text x=")" << left + plot_w / 2 << R"(" y=")" << height - 16 << R"(" text-anchor="middle" font-size="13">)"
        << detail::svg_escape(labels.x_label) << "</text>\n";
    svg << R"(<text x="18" y=")" << top + plot_h / 2 << R"(" text-anchor="middle" font-size="13" transform="rotate(-90 18 )"
        << top + plot_h / 2 << ")\">" << detail::svg_escape(labels.y_label) << "</text>\n";
    svg << R"(<polyline fill="none" stroke="steelblue" stroke-width="2" points=")";
    for (std::size_t i = 0; i < series.x.size(); ++i) {
        if (i) svg << ' ';
        svg << detail::svg_number(sx(series.x[i])) << ',' << detail::svg_number(sy(series.y[i]));
    }
    svg << R"("/>)" << '\n' << "</svg>\n";
    return svg.str();
}

} // namespace skeleton
