#include "ietflip/svg.hpp"

#include <cstdio>

#include "ietflip/orbits.hpp"

namespace ietflip {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#000000", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22"};
constexpr int kPaletteSize = 10;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

} // namespace

std::string orbit_svg(const Iet& t, const ComponentReport& report,
                      const std::vector<Scalar>& witnesses, int steps) {
    const double margin = 50.0;
    const double width = 900.0;
    const double row_height = 46.0;
    const double c = t.total().approx();
    const double scale = width / c;
    auto sx = [&](double v) { return margin + v * scale; };

    const int rows = static_cast<int>(report.components.size());
    const double axis_y = 40.0;
    const double legend_y = axis_y + 30.0 + rows * row_height + 20.0;
    const double height = legend_y + 18.0 * witnesses.size() + 30.0;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width + 2 * margin) +
           "\" height=\"" + fmt(height) + "\" font-family=\"monospace\" font-size=\"11\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // top axis with singular points
    svg += "<line x1=\"" + fmt(sx(0)) + "\" y1=\"" + fmt(axis_y) + "\" x2=\"" + fmt(sx(c)) +
           "\" y2=\"" + fmt(axis_y) + "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    for (int i = 0; i <= t.n(); ++i) {
        const double x = sx(t.breakpoint(i).approx());
        const bool interior = i >= 1 && i <= t.n() - 1;
        svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(axis_y - 8) + "\" x2=\"" + fmt(x) +
               "\" y2=\"" + fmt(axis_y + 8) + "\" stroke=\"" +
               (interior ? "#c01010" : "#444444") + "\" stroke-width=\"1.5\"/>\n";
        svg += "<text x=\"" + fmt(x - 6) + "\" y=\"" + fmt(axis_y - 12) + "\">x" +
               std::to_string(i) + "</text>\n";
    }

    // witness -> component assignment
    std::vector<int> owner(witnesses.size(), -1);
    for (std::size_t w = 0; w < witnesses.size(); ++w)
        for (int ci = 0; ci < rows; ++ci) {
            for (const auto& piece : report.components[ci].support)
                if (piece.contains_closed(witnesses[w])) {
                    owner[w] = ci;
                    break;
                }
            if (owner[w] >= 0) break;
        }

    std::vector<OrbitResult> orbits;
    orbits.reserve(witnesses.size());
    for (const auto& w : witnesses) orbits.push_back(orbit(t, w, steps));

    for (int ci = 0; ci < rows; ++ci) {
        const double y = axis_y + 30.0 + ci * row_height + row_height / 2.0;
        const char* color = kPalette[ci % kPaletteSize];
        const auto& comp = report.components[ci];
        // support pieces as thick underlays
        for (const auto& piece : comp.support) {
            svg += "<line x1=\"" + fmt(sx(piece.lo.approx())) + "\" y1=\"" + fmt(y) +
                   "\" x2=\"" + fmt(sx(piece.hi.approx())) + "\" y2=\"" + fmt(y) +
                   "\" stroke=\"" + color + "\" stroke-width=\"2\" stroke-opacity=\"0.25\"/>\n";
        }
        std::string label = comp.kind == ComponentKind::Periodic
                                ? "periodic m=" + std::to_string(comp.period) +
                                      (comp.flipped ? " flipped" : "")
                                : "minimal";
        svg += "<text x=\"4\" y=\"" + fmt(y + 4) + "\" fill=\"" + color + "\">" + label +
               "</text>\n";
        // orbit ticks of witnesses owned by this component
        for (std::size_t w = 0; w < witnesses.size(); ++w) {
            if (owner[w] != ci) continue;
            for (const auto& pt : orbits[w].points) {
                const double x = sx(pt.approx());
                svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(y - 7) + "\" x2=\"" + fmt(x) +
                       "\" y2=\"" + fmt(y + 7) + "\" stroke=\"" + color +
                       "\" stroke-width=\"1\"/>\n";
            }
        }
    }

    // legend
    double ly = legend_y;
    for (std::size_t w = 0; w < witnesses.size(); ++w) {
        const char* color = owner[w] >= 0 ? kPalette[owner[w] % kPaletteSize] : "#7f7f7f";
        std::string note = "witness " + std::to_string(w + 1) + " at " +
                           fmt(witnesses[w].approx()) + ": " +
                           std::to_string(orbits[w].points.size()) + " points";
        if (orbits[w].halted) note += " (orbit truncated at a singular point)";
        if (owner[w] < 0) note += " (no owning component)";
        svg += "<text x=\"" + fmt(margin) + "\" y=\"" + fmt(ly) + "\" fill=\"" + color +
               "\">" + note + "</text>\n";
        ly += 18.0;
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace ietflip
