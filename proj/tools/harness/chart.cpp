#include "chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "epr/scenario.hpp"

namespace epr::harness {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 80;
constexpr int kMarginRight = 24;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 56;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

struct Series {
    std::string method;
    std::vector<std::pair<double, double>> points; // (N, metric value)
};

std::string svg_header(const std::string& title) {
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(kWidth) + "\" height=\"" + std::to_string(kHeight) +
           "\" viewBox=\"0 0 " + std::to_string(kWidth) + " " +
           std::to_string(kHeight) + "\">\n";
    out += "<rect width=\"" + std::to_string(kWidth) + "\" height=\"" +
           std::to_string(kHeight) + "\" fill=\"#ffffff\"/>\n";
    out += "<text x=\"" + std::to_string(kWidth / 2) +
           "\" y=\"24\" font-family=\"monospace\" font-size=\"16\" "
           "text-anchor=\"middle\">" +
           title + "</text>\n";
    return out;
}

std::string axis_frame() {
    const int x0 = kMarginLeft, x1 = kWidth - kMarginRight;
    const int y0 = kHeight - kMarginBottom, y1 = kMarginTop;
    std::string out;
    out += "<line x1=\"" + std::to_string(x0) + "\" y1=\"" + std::to_string(y0) +
           "\" x2=\"" + std::to_string(x1) + "\" y2=\"" + std::to_string(y0) +
           "\" stroke=\"#000000\"/>\n";
    out += "<line x1=\"" + std::to_string(x0) + "\" y1=\"" + std::to_string(y0) +
           "\" x2=\"" + std::to_string(x0) + "\" y2=\"" + std::to_string(y1) +
           "\" stroke=\"#000000\"/>\n";
    return out;
}

} // namespace

std::string render_chart(const std::vector<SweepRow>& rows, ChartMetric metric,
                         const std::string& title) {
    if (rows.empty())
        throw std::runtime_error("chart: no data rows");

    // Per-(method, N) median of the metric.
    std::map<std::string, std::map<std::uint64_t, std::vector<double>>> grouped;
    for (const auto& r : rows) {
        const double value = metric == ChartMetric::error
                                 ? r.abs_error
                                 : static_cast<double>(r.elapsed_ns) / 1e9;
        grouped[r.method][r.n].push_back(value);
    }

    std::vector<Series> series;
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    const bool log_y = metric == ChartMetric::time;
    for (auto& [method, by_n] : grouped) {
        Series s;
        s.method = method;
        for (auto& [n, values] : by_n) {
            double v = median_of(std::move(values));
            if (log_y)
                v = std::log10(std::max(v, 1e-12));
            const double lx = std::log10(static_cast<double>(std::max<std::uint64_t>(n, 1)));
            s.points.emplace_back(lx, v);
            if (first) {
                xmin = xmax = lx;
                ymin = ymax = v;
                first = false;
            } else {
                xmin = std::min(xmin, lx);
                xmax = std::max(xmax, lx);
                ymin = std::min(ymin, v);
                ymax = std::max(ymax, v);
            }
        }
        series.push_back(std::move(s));
    }

    if (xmax - xmin < 1e-12) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (!log_y) {
        ymin = 0.0;
        ymax = ymax <= 0.0 ? 1.0 : ymax * 1.05;
    } else if (ymax - ymin < 1e-12) {
        ymin -= 0.5;
        ymax += 0.5;
    } else {
        const double pad = 0.05 * (ymax - ymin);
        ymin -= pad;
        ymax += pad;
    }

    const double px0 = kMarginLeft, px1 = kWidth - kMarginRight;
    const double py0 = kHeight - kMarginBottom, py1 = kMarginTop;
    const auto sx = [&](double lx) { return px0 + (lx - xmin) / (xmax - xmin) * (px1 - px0); };
    const auto sy = [&](double v) { return py0 - (v - ymin) / (ymax - ymin) * (py0 - py1); };

    std::string out = svg_header(title);
    out += axis_frame();

    // x ticks at the integer powers of ten inside the data range.
    for (int k = static_cast<int>(std::ceil(xmin)); k <= static_cast<int>(std::floor(xmax)); ++k) {
        const double X = sx(k);
        out += "<line x1=\"" + num(X) + "\" y1=\"" + num(py0) + "\" x2=\"" + num(X) +
               "\" y2=\"" + num(py0 + 6) + "\" stroke=\"#000000\"/>\n";
        out += "<text x=\"" + num(X) + "\" y=\"" + num(py0 + 22) +
               "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">1e" +
               std::to_string(k) + "</text>\n";
    }
    out += "<text x=\"" + num((px0 + px1) / 2) + "\" y=\"" + num(py0 + 42) +
           "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\">"
           "N (accepted samples, log scale)</text>\n";

    // y ticks: 5 evenly spaced values.
    for (int i = 0; i <= 4; ++i) {
        const double v = ymin + (ymax - ymin) * i / 4.0;
        const double Y = sy(v);
        out += "<line x1=\"" + num(px0 - 6) + "\" y1=\"" + num(Y) + "\" x2=\"" +
               num(px0) + "\" y2=\"" + num(Y) + "\" stroke=\"#000000\"/>\n";
        const std::string label = log_y ? sci(std::pow(10.0, v)) : sci(v);
        out += "<text x=\"" + num(px0 - 10) + "\" y=\"" + num(Y + 4) +
               "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">" +
               label + "</text>\n";
    }
    out += std::string("<text x=\"18\" y=\"") + num((py0 + py1) / 2) +
           "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 18 " +
           num((py0 + py1) / 2) + ")\">" +
           (metric == ChartMetric::error ? "median |max_s - analytic|"
                                         : "median elapsed (s, log scale)") +
           "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = kPalette[si % (sizeof(kPalette) / sizeof(kPalette[0]))];
        std::string pts;
        for (const auto& [lx, v] : series[si].points)
            pts += num(sx(lx)) + "," + num(sy(v)) + " ";
        if (!pts.empty())
            pts.pop_back();
        out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
        for (const auto& [lx, v] : series[si].points)
            out += "<circle cx=\"" + num(sx(lx)) + "\" cy=\"" + num(sy(v)) +
                   "\" r=\"3\" fill=\"" + color + "\"/>\n";
        // legend entry
        const double ly = kMarginTop + 16.0 * static_cast<double>(si);
        out += "<rect x=\"" + num(px1 - 150) + "\" y=\"" + num(ly) +
               "\" width=\"10\" height=\"10\" fill=\"" + color + "\"/>\n";
        out += "<text x=\"" + num(px1 - 134) + "\" y=\"" + num(ly + 9) +
               "\" font-family=\"monospace\" font-size=\"12\">" + series[si].method +
               "</text>\n";
    }

    out += "</svg>\n";
    return out;
}

std::string render_distribution_chart(const GlobalDistribution& d,
                                      const std::string& title) {
    double wmax = 0.0;
    for (double w : d.p)
        wmax = std::max(wmax, w);
    if (wmax <= 0.0)
        wmax = 1.0;

    const double px0 = kMarginLeft, px1 = kWidth - kMarginRight;
    const double py0 = kHeight - kMarginBottom, py1 = kMarginTop;
    const double slot = (px1 - px0) / 16.0;

    std::string out = svg_header(title);
    out += axis_frame();
    for (int i = 0; i < 16; ++i) {
        const JointVertex v = joint_vertex(i);
        const double h = d[i] / (wmax * 1.05) * (py0 - py1);
        const double bx = px0 + slot * i + slot * 0.15;
        out += "<rect x=\"" + num(bx) + "\" y=\"" + num(py0 - h) + "\" width=\"" +
               num(slot * 0.7) + "\" height=\"" + num(h) + "\" fill=\"" +
               kPalette[v.x * 2 + v.y] + "\"/>\n";
        out += "<text x=\"" + num(px0 + slot * i + slot / 2) + "\" y=\"" +
               num(py0 + 16) +
               "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">" +
               std::to_string(v.a) + std::to_string(v.b) + "|" + std::to_string(v.x) +
               std::to_string(v.y) + "</text>\n";
        out += "<text x=\"" + num(px0 + slot * i + slot / 2) + "\" y=\"" +
               num(py0 - h - 4) +
               "\" font-family=\"monospace\" font-size=\"9\" text-anchor=\"middle\">" +
               sci(d[i]) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace epr::harness
