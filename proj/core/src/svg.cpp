#include "nadrc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nadrc {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e"};
constexpr std::size_t kMaxPointsPerSeries = 2000;

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fmt(double v, const char* spec = "%.2f") {
    char buf[40];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

double nice_step(double range, int target) {
    const double raw = range / std::max(target, 1);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    const double step = norm < 1.5 ? 1.0 : norm < 3.5 ? 2.0 : norm < 7.5 ? 5.0 : 10.0;
    return step * mag;
}

struct Series {
    const std::vector<double>* t;
    const std::vector<double>* y;
    std::string label;
};

struct Panel {
    std::string title;
    std::vector<Series> series;
};

void render_panel(std::ostringstream& out, const Panel& p, double ox, double oy,
                  double cw, double ch) {
    const double px0 = ox + 58, px1 = ox + cw - 14;
    const double py0 = oy + 24, py1 = oy + ch - 34;

    double tmin = 0, tmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& s : p.series)
        for (std::size_t k = 0; k < s.t->size(); ++k) {
            const double tv = (*s.t)[k], yv = (*s.y)[k];
            if (first) {
                tmin = tmax = tv;
                ymin = ymax = yv;
                first = false;
            } else {
                tmin = std::min(tmin, tv);
                tmax = std::max(tmax, tv);
                ymin = std::min(ymin, yv);
                ymax = std::max(ymax, yv);
            }
        }
    if (tmax - tmin < 1e-12) tmax = tmin + 1.0;
    const double pad = (ymax - ymin < 1e-12) ? std::max(std::abs(ymax), 1.0) * 0.1
                                             : (ymax - ymin) * 0.06;
    ymin -= pad;
    ymax += pad;

    auto sx = [&](double t) { return px0 + (t - tmin) / (tmax - tmin) * (px1 - px0); };
    auto sy = [&](double y) { return py1 - (y - ymin) / (ymax - ymin) * (py1 - py0); };

    out << "<text x=\"" << fmt(px0) << "\" y=\"" << fmt(oy + 16)
        << "\" font-size=\"12\" fill=\"#222\">" << xml_escape(p.title) << "</text>\n";

    const double xstep = nice_step(tmax - tmin, 5);
    for (double t = std::ceil(tmin / xstep) * xstep; t <= tmax + 1e-9 * xstep; t += xstep) {
        const double X = sx(t);
        out << "<line x1=\"" << fmt(X) << "\" y1=\"" << fmt(py0) << "\" x2=\"" << fmt(X)
            << "\" y2=\"" << fmt(py1) << "\" stroke=\"#e5e5e5\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt(X) << "\" y=\"" << fmt(py1 + 14)
            << "\" font-size=\"10\" fill=\"#555\" text-anchor=\"middle\">" << fmt(t, "%.4g")
            << "</text>\n";
    }
    const double ystep = nice_step(ymax - ymin, 4);
    for (double yv = std::ceil(ymin / ystep) * ystep; yv <= ymax + 1e-9 * ystep; yv += ystep) {
        const double Y = sy(yv);
        out << "<line x1=\"" << fmt(px0) << "\" y1=\"" << fmt(Y) << "\" x2=\"" << fmt(px1)
            << "\" y2=\"" << fmt(Y) << "\" stroke=\"#e5e5e5\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt(px0 - 5) << "\" y=\"" << fmt(Y + 3)
            << "\" font-size=\"10\" fill=\"#555\" text-anchor=\"end\">" << fmt(yv, "%.4g")
            << "</text>\n";
    }

    out << "<rect x=\"" << fmt(px0) << "\" y=\"" << fmt(py0) << "\" width=\""
        << fmt(px1 - px0) << "\" height=\"" << fmt(py1 - py0)
        << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << fmt((px0 + px1) / 2) << "\" y=\"" << fmt(py1 + 27)
        << "\" font-size=\"10\" fill=\"#555\" text-anchor=\"middle\">t [s]</text>\n";

    for (std::size_t si = 0; si < p.series.size(); ++si) {
        const auto& s = p.series[si];
        const char* color = kPalette[si % 4];
        const std::size_t n = s.t->size();
        if (n == 0) continue;
        const std::size_t stride = n > kMaxPointsPerSeries ? (n + kMaxPointsPerSeries - 1) / kMaxPointsPerSeries : 1;
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.2\" points=\"";
        for (std::size_t k = 0; k < n; k += stride)
            out << fmt(sx((*s.t)[k])) << ',' << fmt(sy((*s.y)[k])) << ' ';
        if ((n - 1) % stride != 0)
            out << fmt(sx(s.t->back())) << ',' << fmt(sy(s.y->back())) << ' ';
        out << "\"/>\n";

        const double lx = px1 - 150, ly = py0 + 13 + 14 * static_cast<double>(si);
        out << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly - 3) << "\" x2=\""
            << fmt(lx + 18) << "\" y2=\"" << fmt(ly - 3) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << fmt(lx + 23) << "\" y=\"" << fmt(ly)
            << "\" font-size=\"10\" fill=\"#333\">" << xml_escape(s.label) << "</text>\n";
    }
}

void render_grid(const std::vector<std::vector<Panel>>& grid, double cw, double ch,
                 const std::string& doc_title, const std::string& path) {
    const std::size_t rows = grid.size();
    std::size_t cols = 0;
    for (const auto& row : grid) cols = std::max(cols, row.size());
    const double W = static_cast<double>(cols) * cw;
    const double H = static_cast<double>(rows) * ch + 22;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(W, "%.0f")
        << "\" height=\"" << fmt(H, "%.0f") << "\" viewBox=\"0 0 " << fmt(W, "%.0f") << ' '
        << fmt(H, "%.0f") << "\" font-family=\"Helvetica,Arial,sans-serif\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << fmt(W, "%.0f") << "\" height=\""
        << fmt(H, "%.0f") << "\" fill=\"#ffffff\"/>\n";
    out << "<text x=\"" << fmt(W / 2) << "\" y=\"16\" font-size=\"13\" fill=\"#111\" "
           "text-anchor=\"middle\">"
        << xml_escape(doc_title) << "</text>\n";
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < grid[r].size(); ++c)
            render_panel(out, grid[r][c], static_cast<double>(c) * cw,
                         22 + static_cast<double>(r) * ch, cw, ch);
    out << "</svg>\n";

    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << out.str();
    f.flush();
    if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace

void export_svg(const RunResult& result, const std::string& path) {
    const SimulationTrace& tr = result.trace;
    if (tr.samples() < 2)
        throw std::runtime_error("trace has fewer than two samples; nothing to plot");

    // one stacked panel per channel group actually present; a bare trace
    // (say, a lone output channel) still renders as a single panel
    const auto& t = tr.grid;
    std::vector<std::vector<Panel>> grid;
    Panel output{"output vs profile", {}};
    if (tr.has("x1")) output.series.push_back({&t, &tr.channel("x1"), "plant output x1"});
    if (tr.has("r1")) output.series.push_back({&t, &tr.channel("r1"), "td profile r1"});
    if (!output.series.empty()) grid.push_back({output});
    if (tr.has("u")) grid.push_back({Panel{"plant input", {{&t, &tr.channel("u"), "u"}}}});
    if (tr.has("e3")) {
        Panel est{"disturbance estimation error", {{&t, &tr.channel("e3"), "e3 (inner)"}}};
        if (tr.has("zeta3")) est.series.push_back({&t, &tr.channel("zeta3"), "zeta3 (nested)"});
        grid.push_back({est});
    }
    if (grid.empty() && !tr.names.empty())
        grid.push_back({Panel{tr.names[0], {{&t, &tr.columns[0], tr.names[0]}}}});
    if (grid.empty()) throw std::runtime_error("trace has no channels to plot");

    char metrics[96];
    std::snprintf(metrics, sizeof metrics, "  [ITAE %.6g, ISU %.6g]", result.metrics.itae,
                  result.metrics.isu);
    render_grid(grid, 900, 230, result.scenario.name + metrics, path);
}

void export_svg(const CompareResult& result, const std::string& path) {
    std::vector<std::vector<Panel>> grid(2);
    const char* noise_tag[2] = {"noise-free", "noisy"};
    for (int nz = 0; nz < 2; ++nz)
        for (int vi = 0; vi < 2; ++vi) {
            const RunResult& run = result.runs[vi][nz];
            const char* variant =
                run.scenario.variant == AdrcVariant::Nested ? "nested" : "conventional";
            char title[128];
            std::snprintf(title, sizeof title, "%s, %s  [ITAE %.6g, ISU %.6g]", variant,
                          noise_tag[nz], result.itae[vi][nz], result.isu[vi][nz]);
            grid[nz].push_back(Panel{title,
                                     {{&run.trace.grid, &run.trace.channel("x1"), "x1"},
                                      {&run.trace.grid, &run.trace.channel("r1"), "r1"}}});
        }
    render_grid(grid, 480, 240, result.runs[0][0].scenario.name + "  (variant comparison)",
                path);
}

}  // namespace nadrc
