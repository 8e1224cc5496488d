#include "mlca/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace mlca {

namespace {

constexpr std::array<std::string_view, 8> kPalette{"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                                   "#66a61e", "#e6ab02", "#a6761d", "#666666"};

std::string escape_xml(std::string_view s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out.push_back(c);
        }
    }
    return out;
}

std::string sig3(double v)
{
    return v == 0.0 ? "0" : fmt::format("{:.3g}", v);
}

std::string header(int w, int h)
{
    return fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
                       "font-family=\"sans-serif\" font-size=\"11\">\n"
                       "<rect width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n",
                       w, h);
}

} // namespace

std::string bar_chart_svg(const BarChart& chart)
{
    const int left = 70;
    const int right = 150;
    const int top = 40;
    const int bottom = 60;
    const int plot_h = 300;
    const int group_w = std::max<int>(60, 24 * static_cast<int>(chart.series.size()) + 20);
    const int plot_w = group_w * static_cast<int>(std::max<std::size_t>(1, chart.categories.size()));
    const int w = left + plot_w + right;
    const int h = top + plot_h + bottom;

    double lo = 0.0;
    double hi = 0.0;
    for (const auto& s : chart.series) {
        for (double v : s.values) {
            if (std::isfinite(v)) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
    }
    if (hi == lo) {
        hi = lo + 1.0;
    }
    auto y_of = [&](double v) { return top + (hi - v) / (hi - lo) * plot_h; };

    std::string out = header(w, h);
    out += fmt::format("<text x=\"{}\" y=\"20\" font-size=\"14\">{}</text>\n", left, escape_xml(chart.title));
    out += fmt::format("<text x=\"12\" y=\"{}\" transform=\"rotate(-90 12 {})\">{}</text>\n", top + plot_h / 2,
                       top + plot_h / 2, escape_xml(chart.unit));

    for (int t = 0; t <= 4; ++t) {
        const double v = lo + (hi - lo) * t / 4.0;
        const double y = y_of(v);
        out += fmt::format("<line x1=\"{}\" y1=\"{:.2f}\" x2=\"{}\" y2=\"{:.2f}\" stroke=\"#ddd\"/>\n", left, y,
                           left + plot_w, y);
        out += fmt::format("<text x=\"{}\" y=\"{:.2f}\" text-anchor=\"end\">{}</text>\n", left - 4, y + 4, sig3(v));
    }
    const double y0 = y_of(0.0);
    out += fmt::format("<line x1=\"{}\" y1=\"{:.2f}\" x2=\"{}\" y2=\"{:.2f}\" stroke=\"black\"/>\n", left, y0,
                       left + plot_w, y0);

    const double bar_w = (group_w - 20.0) / static_cast<double>(std::max<std::size_t>(1, chart.series.size()));
    for (std::size_t c = 0; c < chart.categories.size(); ++c) {
        const double gx = left + static_cast<double>(c) * group_w + 10.0;
        for (std::size_t s = 0; s < chart.series.size(); ++s) {
            const auto& series = chart.series[s];
            if (c >= series.values.size() || !std::isfinite(series.values[c])) {
                continue;
            }
            const double v = series.values[c];
            const double y = std::min(y_of(v), y0);
            const double bh = std::abs(y_of(v) - y0);
            const double x = gx + static_cast<double>(s) * bar_w;
            out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"{}\"/>\n",
                               x, y, bar_w - 2.0, bh, kPalette[s % kPalette.size()]);
            out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" font-size=\"9\">{}</text>\n",
                               x + (bar_w - 2.0) / 2.0, y - 3.0, sig3(v));
        }
        out += fmt::format("<text x=\"{:.2f}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", gx + (group_w - 20.0) / 2.0,
                           top + plot_h + 18, escape_xml(chart.categories[c]));
    }

    for (std::size_t s = 0; s < chart.series.size(); ++s) {
        const int ly = top + 10 + static_cast<int>(s) * 18;
        out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"12\" height=\"12\" fill=\"{}\"/>\n", left + plot_w + 12,
                           ly, kPalette[s % kPalette.size()]);
        out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", left + plot_w + 30, ly + 10,
                           escape_xml(chart.series[s].name));
    }
    out += "</svg>\n";
    return out;
}

std::string radar_chart_svg(const NormalizedMatrix& m, std::string_view title)
{
    const int w = 620;
    const int h = 480;
    const double cx = 240.0;
    const double cy = 250.0;
    const double r = 170.0;
    const auto n = kIndicatorCount;

    auto point = [&](std::size_t axis, double v) {
        const double a = -std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * static_cast<double>(axis) / n;
        return std::pair{cx + r * v * std::cos(a), cy + r * v * std::sin(a)};
    };

    std::string out = header(w, h);
    out += fmt::format("<text x=\"20\" y=\"24\" font-size=\"14\">{}</text>\n", escape_xml(title));
    for (int ring = 1; ring <= 4; ++ring) {
        std::string pts;
        for (std::size_t i = 0; i < n; ++i) {
            auto [x, y] = point(i, ring / 4.0);
            pts += fmt::format("{}{:.2f},{:.2f}", i ? " " : "", x, y);
        }
        out += fmt::format("<polygon points=\"{}\" fill=\"none\" stroke=\"#ccc\"/>\n", pts);
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto [x, y] = point(i, 1.0);
        auto [lx, ly] = point(i, 1.12);
        out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#999\"/>\n", cx, cy,
                           x, y);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n", lx, ly + 4,
                           to_string(kAllIndicators[i]));
    }
    for (std::size_t k = 0; k < m.modes.size(); ++k) {
        std::string pts;
        for (std::size_t i = 0; i < n; ++i) {
            auto [x, y] = point(i, std::max(0.0, m.values[k][kAllIndicators[i]]));
            pts += fmt::format("{}{:.2f},{:.2f}", i ? " " : "", x, y);
        }
        const auto colour = kPalette[k % kPalette.size()];
        out += fmt::format("<polygon points=\"{}\" fill=\"{}\" fill-opacity=\"0.08\" stroke=\"{}\"/>\n", pts, colour,
                           colour);
        const int ly = 60 + static_cast<int>(k) * 18;
        out += fmt::format("<rect x=\"450\" y=\"{}\" width=\"12\" height=\"12\" fill=\"{}\"/>\n", ly, colour);
        out += fmt::format("<text x=\"468\" y=\"{}\">{}</text>\n", ly + 10, escape_xml(m.modes[k]));
    }
    out += "</svg>\n";
    return out;
}

} // namespace mlca
