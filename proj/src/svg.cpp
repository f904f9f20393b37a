#include "rectadd/svg.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace rectadd {

namespace {

constexpr double kViewport = 800.0;
constexpr double kMargin = 20.0;

struct Frame {
    double x0, y1, scale;

    double px(const QNum& x) const { return kMargin + (x.to_double() - x0) * scale; }
    // SVG y grows downwards
    double py(const QNum& y) const { return kMargin + (y1 - y.to_double()) * scale; }
};

void emit_rect(std::ostringstream& os, const Frame& f, const Rect& r, const char* cls, double stroke,
               const char* fill) {
    os << "  <rect class=\"" << cls << "\" x=\"" << f.px(r.x1()) << "\" y=\"" << f.py(r.y2()) << "\" width=\""
       << r.width().to_double() * f.scale << "\" height=\"" << r.height().to_double() * f.scale
       << "\" fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"" << stroke << "\"/>\n";
}

}  // namespace

std::string render_svg(const Decomposition& d) {
    const Rect& o = d.original;
    const double w = o.width().to_double();
    const double h = o.height().to_double();
    const Frame frame{o.x1().to_double(), o.y2().to_double(), kViewport / std::max(w, h)};

    // Stroke proportional to the smallest packed square.
    const double smallest = d.steps.empty() ? std::min(w, h) : d.steps.back().side.to_double();
    const double stroke = std::clamp(0.04 * smallest * frame.scale, 0.05, 2.0);

    std::ostringstream os;
    os << std::setprecision(10);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w * frame.scale + 2 * kMargin
       << "\" height=\"" << h * frame.scale + 2 * kMargin << "\">\n";
    os << "  <defs>\n"
          "    <pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\"6\" height=\"6\" "
          "patternTransform=\"rotate(45)\">\n"
          "      <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"gray\" stroke-width=\"1.5\"/>\n"
          "    </pattern>\n"
          "  </defs>\n";
    os << "  <title>" << o.to_string() << "</title>\n";
    for (const auto& step : d.steps) {
        for (const auto& sq : step.squares) emit_rect(os, frame, sq, "square", stroke, "none");
    }
    if (d.remainder) emit_rect(os, frame, *d.remainder, "remainder", stroke, "url(#hatch)");
    emit_rect(os, frame, o, "outline", 2 * stroke, "none");
    os << "</svg>\n";
    return os.str();
}

void write_svg(const Decomposition& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << render_svg(d);
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace rectadd
