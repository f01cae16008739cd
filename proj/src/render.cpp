#include "latmut/render.hpp"

#include <sstream>

namespace latmut {

Panel panel_of(const LaurentPoly& f, const std::string& caption) {
    Panel p;
    p.polygon = newton(f);
    for (const auto& [e, c] : f.terms()) p.labels[e] = to_string(c);
    p.caption = caption;
    return p;
}

Panel panel_of(const Polygon& P, const std::string& caption) {
    Panel p;
    p.polygon = P;
    p.caption = caption;
    return p;
}

std::vector<Panel> panels_of(const MutationTrace& t) {
    std::vector<Panel> out{panel_of(t.start, "f")};
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        std::ostringstream cap;
        cap << "f" << i + 1 << " m=" << t.steps[i].m;
        out.push_back(panel_of(t.steps[i].result, cap.str()));
    }
    return out;
}

namespace {

struct Box {
    long x0, y0, x1, y1;
};

Box box_of(const Panel& p, bool origin) {
    const auto& vs = p.polygon.vertices();
    Box b{to_long(vs[0].x), to_long(vs[0].y), to_long(vs[0].x), to_long(vs[0].y)};
    auto grow = [&](long x, long y) {
        b.x0 = std::min(b.x0, x);
        b.y0 = std::min(b.y0, y);
        b.x1 = std::max(b.x1, x);
        b.y1 = std::max(b.y1, y);
    };
    for (const auto& v : vs) grow(to_long(v.x), to_long(v.y));
    for (const auto& [e, s] : p.labels) grow(to_long(e.x), to_long(e.y));
    if (origin) grow(0, 0);
    return b;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

}  // namespace

std::string render_svg(const std::vector<Panel>& panels, const RenderOptions& opt) {
    const long u = opt.unit, margin = u, gap = u;
    std::vector<Box> boxes;
    long width = margin, height = 0;
    for (const auto& p : panels) {
        if (p.polygon.empty()) throw PreconditionError("cannot render an empty panel");
        boxes.push_back(box_of(p, opt.origin));
        const Box& b = boxes.back();
        width += (b.x1 - b.x0) * u + gap;
        height = std::max(height, (b.y1 - b.y0) * u);
    }
    width += margin - gap;
    height += 2 * margin + u / 2;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    long left = margin;
    for (std::size_t i = 0; i < panels.size(); ++i) {
        const Panel& p = panels[i];
        const Box& b = boxes[i];
        long base = margin + (height - 2 * margin - u / 2);
        auto X = [&](const Int& x) { return left + (to_long(x) - b.x0) * u; };
        auto Y = [&](const Int& y) { return base - (to_long(y) - b.y0) * u; };
        os << "<g>\n";
        const auto& vs = p.polygon.vertices();
        if (vs.size() >= 2) {
            os << "<polygon points=\"";
            for (std::size_t k = 0; k < vs.size(); ++k) os << (k ? " " : "") << X(vs[k].x) << "," << Y(vs[k].y);
            os << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
        }
        for (const auto& v : p.polygon.lattice_points())
            os << "<circle cx=\"" << X(v.x) << "\" cy=\"" << Y(v.y) << "\" r=\"3\" fill=\"black\"/>\n";
        if (opt.origin) os << "<circle cx=\"" << X(0) << "\" cy=\"" << Y(0) << "\" r=\"4\" fill=\"red\"/>\n";
        if (opt.labels)
            for (const auto& [e, s] : p.labels)
                os << "<text x=\"" << X(e.x) + 4 << "\" y=\"" << Y(e.y) - 4
                   << "\" font-family=\"serif\" font-size=\"" << u * 2 / 5 << "\">" << xml_escape(s) << "</text>\n";
        if (!p.caption.empty())
            os << "<text x=\"" << left << "\" y=\"" << height - u / 4 << "\" font-family=\"serif\" font-size=\""
               << u * 2 / 5 << "\">" << xml_escape(p.caption) << "</text>\n";
        os << "</g>\n";
        left += (b.x1 - b.x0) * u + gap;
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_tikz(const std::vector<Panel>& panels, const RenderOptions& opt) {
    std::ostringstream os;
    for (std::size_t i = 0; i < panels.size(); ++i) {
        const Panel& p = panels[i];
        if (p.polygon.empty()) throw PreconditionError("cannot render an empty panel");
        if (i) os << "~~~~~~~~~\n";
        os << "\\begin{tikzpicture}[scale=0.8]\n";
        const auto& vs = p.polygon.vertices();
        if (vs.size() >= 2) {
            os << "\\draw[thick, color=black]\n  ";
            for (const auto& v : vs) os << "(" << v.x << "," << v.y << ") -- ";
            os << "cycle;\n";
        }
        os << "\\fill[thick, color=black]\n";
        for (const auto& v : p.polygon.lattice_points()) os << "  (" << v.x << "," << v.y << ") circle (2.5pt)\n";
        os << "  ;\n";
        if (opt.origin) os << "\\fill[color=red] (0,0) circle (3pt);\n";
        if (opt.labels)
            for (const auto& [e, s] : p.labels)
                os << "\\node[anchor=south west] at (" << e.x << "," << e.y << ") {$" << s << "$};\n";
        os << "\\end{tikzpicture}\n";
    }
    return os.str();
}

}  // namespace latmut
