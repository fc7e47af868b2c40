#include "singpack/svg.hpp"

#include <algorithm>
#include <sstream>

namespace singpack {

namespace {

constexpr double kWidth = 640.0;
constexpr double kMargin = 20.0;

struct Mapper {
    double scale;
    double min_x, min_y, max_y;

    double x(const Rational& r) const { return kMargin + (r.to_double() - min_x) * scale; }
    double y(const Rational& r) const { return kMargin + (max_y - r.to_double()) * scale; }
};

std::string points_attr(const Polytope& p, const Mapper& m) {
    std::ostringstream os;
    for (size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) os << ' ';
        os << m.x(p.vertices[i][0]) << ',' << m.y(p.vertices[i][1]);
    }
    return os.str();
}

} // namespace

std::string polytope_svg(const Polytope& outline,
                         const std::vector<Polytope>& shaded,
                         const std::vector<SvgSegment>& segments) {
    outline.validate();

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    for (const auto& v : outline.vertices) {
        double x = v[0].to_double(), y = v[1].to_double();
        if (first) {
            min_x = max_x = x;
            min_y = max_y = y;
            first = false;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    const double span_x = std::max(max_x - min_x, 1e-12);
    const double span_y = std::max(max_y - min_y, 1e-12);
    const double scale = (kWidth - 2 * kMargin) / span_x;
    const double height = span_y * scale + 2 * kMargin;
    const Mapper m{scale, min_x, min_y, max_y};

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
       << "width=\"640\" height=\"" << height << "\">\n"
       << "<!-- scale: " << scale << " px per unit -->\n";

    static const char* fills[] = {"#9ecae1", "#fdae6b", "#a1d99b", "#bcbddc"};
    for (size_t i = 0; i < shaded.size(); ++i) {
        os << "  <polygon points=\"" << points_attr(shaded[i], m)
           << "\" fill=\"" << fills[i % 4] << "\" fill-opacity=\"0.6\" stroke=\"none\"/>\n";
    }
    os << "  <polygon points=\"" << points_attr(outline, m)
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (const auto& s : segments) {
        os << "  <line x1=\"" << m.x(s.from[0]) << "\" y1=\"" << m.y(s.from[1])
           << "\" x2=\"" << m.x(s.to[0]) << "\" y2=\"" << m.y(s.to[1])
           << "\" stroke=\"#d62728\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n";
    }
    os << "  <text x=\"" << kMargin << "\" y=\"" << height - 5.0
       << "\" font-size=\"12\">scale " << scale << " px/unit</text>\n"
       << "</svg>\n";
    return os.str();
}

} // namespace singpack
