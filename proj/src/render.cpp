#include "hbg/render.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace hbg
{
    namespace
    {
        // Evenly spaced hues; fixed text so output is byte-stable.
        auto class_colour(int k, int classes) -> std::string
        {
            int hue = classes <= 0 ? 0 : (360 * k) / classes;
            return "hsl(" + std::to_string(hue) + ",70%,40%)";
        }

        auto fixed(double value) -> std::string
        {
            std::ostringstream out;
            out.setf(std::ios::fixed);
            out.precision(3);
            // avoid "-0.000"
            out << (std::fabs(value) < 5e-4 ? 0.0 : value);
            return out.str();
        }
    }

    auto render(const CatalogEntry & entry, const RenderStyle & style) -> std::string
    {
        auto report = verify_witness(entry);
        if (! report.passed())
            throw RenderError("refusing to render an unverified witness: " + report.first_failure());

        auto pattern = validate_pattern(entry.order / 2, entry.b, std::span<const long long>{entry.offsets});
        const int n = pattern.order();
        const double centre = style.radius + style.margin;
        const double size = 2 * centre;

        std::vector<double> xs(n), ys(n);
        for (int v = 0; v < n; ++v) {
            double angle = 2 * std::numbers::pi * v / n - std::numbers::pi / 2;
            xs[v] = centre + style.radius * std::cos(angle);
            ys[v] = centre + style.radius * std::sin(angle);
        }

        std::ostringstream svg;
        svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed(size) << "\" height=\"" << fixed(size)
            << "\" viewBox=\"0 0 " << fixed(size) << ' ' << fixed(size) << "\">\n";
        svg << "<title>" << n << " sym " << pattern.b() << ", girth " << *report.measured_girth << "</title>\n";

        auto line = [&](int from, int to, const char * cls, const std::string & stroke, double width, int k) {
            svg << "<line class=\"" << cls << "\"";
            if (k >= 0)
                svg << " data-position=\"" << 2 * k + 1 << "\"";
            svg << " x1=\"" << fixed(xs[from]) << "\" y1=\"" << fixed(ys[from]) << "\" x2=\"" << fixed(xs[to]) << "\" y2=\""
                << fixed(ys[to]) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << fixed(width) << "\"/>\n";
        };

        svg << "<g id=\"cycle\">\n";
        for (int v = 0; v < n; ++v)
            line(v, (v + 1) % n, "cycle", "black", style.cycle_stroke, -1);
        svg << "</g>\n";

        // each chord joins an even and an odd vertex; draw it from the even end
        svg << "<g id=\"chords\">\n";
        for (int v = 0; v < n; v += 2) {
            int k = (v % pattern.period()) / 2;
            auto colour = style.colour_chord_classes ? class_colour(k, pattern.b()) : std::string("gray");
            line(v, (v + pattern.offset_of_vertex(v)) % n, "chord", colour, style.chord_stroke, k);
        }
        svg << "</g>\n";

        svg << "<g id=\"vertices\">\n";
        for (int v = 0; v < n; ++v)
            svg << "<circle class=\"vertex\" data-label=\"" << v + 1 << "\" cx=\"" << fixed(xs[v]) << "\" cy=\"" << fixed(ys[v])
                << "\" r=\"" << fixed(style.vertex_radius) << "\" fill=\"" << (v % 2 == 0 ? "black" : "white")
                << "\" stroke=\"black\"/>\n";
        svg << "</g>\n";
        svg << "</svg>\n";
        return svg.str();
    }
}
