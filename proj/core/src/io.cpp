#include "visconn/io.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

namespace visconn {

PointSet LabelledPoints::of_label(int label) const {
    if (!has_labels()) {
        if (label == 0) return points;
        return PointSet();
    }
    std::vector<Point> out;
    for (int i = 0; i < points.size(); ++i) {
        if (labels[i] == label) out.push_back(points[i]);
    }
    return PointSet(out);
}

std::string format_scalar(const Scalar& s) {
    Integer num = numerator(s), den = denominator(s);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Scalar parse_scalar(const std::string& token) {
    if (token.empty()) throw ParseError("empty rational token");
    try {
        auto slash = token.find('/');
        if (slash == std::string::npos) {
            return Scalar(Integer(token));
        }
        Integer num(token.substr(0, slash));
        Integer den(token.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + token + "'");
        return Scalar(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad rational token '" + token + "'");
    }
}

LabelledPoints parse_point_file(const std::string& text) {
    std::vector<Point> pts;
    std::vector<int> labels;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string xs, ys, label;
        if (!(ls >> xs)) continue;  // blank
        if (!(ls >> ys)) throw ParseError("line " + std::to_string(lineno) + ": missing y");
        Point p{parse_scalar(xs), parse_scalar(ys)};
        bool has_label = static_cast<bool>(ls >> label);
        std::string extra;
        if (ls >> extra) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
        if (has_label) {
            if (label != "A" && label != "B" && label != "C") {
                throw ParseError("line " + std::to_string(lineno) + ": bad label '" + label + "'");
            }
            labels.push_back(label == "A" ? 0 : label == "B" ? 1 : 2);
        }
        pts.push_back(std::move(p));
        if (!labels.empty() && labels.size() != pts.size()) {
            throw ParseError("labels must appear on every line or none");
        }
    }
    LabelledPoints lp;
    try {
        lp.points = PointSet(std::move(pts));
    } catch (const Error& e) {
        throw ParseError(std::string("point file: ") + e.what());
    }
    lp.labels = std::move(labels);
    return lp;
}

std::string serialize_point_file(const LabelledPoints& lp) {
    static const char* names[] = {"A", "B", "C"};
    std::string out;
    for (int i = 0; i < lp.points.size(); ++i) {
        out += format_scalar(lp.points[i].x);
        out += ' ';
        out += format_scalar(lp.points[i].y);
        if (lp.has_labels()) {
            out += ' ';
            out += names[lp.labels[i]];
        }
        out += '\n';
    }
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("edge list: bad header");
    if (n < 0 || m < 0) throw ParseError("edge list: negative header");
    Graph g(n);
    for (int k = 0; k < m; ++k) {
        int i = 0, j = 0;
        if (!(in >> i >> j)) throw ParseError("edge list: truncated");
        if (i >= j || i < 0 || j >= n) throw ParseError("edge list: bad edge");
        if (g.has_edge(i, j)) throw ParseError("edge list: duplicate edge");
        g.add_edge(i, j);
    }
    std::string extra;
    if (in >> extra) throw ParseError("edge list: trailing tokens");
    return g;
}

std::string serialize_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [i, j] : g.edges()) {  // std::set iterates in canonical order
        out += std::to_string(i) + " " + std::to_string(j) + "\n";
    }
    return out;
}

std::string serialize_report(const Report& r) {
    std::vector<std::string> lines;
    auto kv = [&](const std::string& k, const std::string& v) { lines.push_back(k + "=" + v); };
    if (!r.descriptor.empty()) kv("instance", r.descriptor);
    kv("n", std::to_string(r.n));
    kv("ell", std::to_string(r.ell));
    kv("delta", std::to_string(r.delta));
    kv("kappa", std::to_string(r.kappa));
    kv("lambda", std::to_string(r.lambda));
    kv("diameter", std::to_string(r.diam));
    for (const ClaimResult& c : r.claims) {
        const char* st = c.status == ClaimStatus::Pass ? "pass"
                         : c.status == ClaimStatus::Fail ? "fail"
                                                         : "not-applicable";
        kv("claim." + c.id, st);
        if (!c.details.empty()) kv("claim." + c.id + ".details", c.details);
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const std::string& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

// Viewport mapping: bounding box to 800x800 with a 5% margin; rendering is
// the one place approximate arithmetic is acceptable.
struct SvgMapper {
    double minx, miny, scale, offx, offy;

    explicit SvgMapper(const PointSet& ps) {
        double maxx, maxy;
        minx = miny = 1e300;
        maxx = maxy = -1e300;
        for (const Point& p : ps) {
            double x = static_cast<double>(p.x), y = static_cast<double>(p.y);
            minx = std::min(minx, x);
            maxx = std::max(maxx, x);
            miny = std::min(miny, y);
            maxy = std::max(maxy, y);
        }
        double span = std::max({maxx - minx, maxy - miny, 1e-9});
        scale = 720.0 / span;  // 800 minus 5% margin on each side
        offx = 40.0 - minx * scale;
        offy = 40.0 - miny * scale;
    }
    double x(const Point& p) const { return static_cast<double>(p.x) * scale + offx; }
    // SVG y grows downward; flip to keep the mathematical orientation.
    double y(const Point& p) const { return 800.0 - (static_cast<double>(p.y) * scale + offy); }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string svg_render(const PointSet& ps, const std::set<Edge>& edges,
                       const std::vector<int>& colour) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c"};
    SvgMapper m(ps);
    std::string out =
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
        "viewBox=\"0 0 800 800\">\n";
    for (const auto& [i, j] : edges) {
        out += "  <line x1=\"" + num(m.x(ps[i])) + "\" y1=\"" + num(m.y(ps[i])) + "\" x2=\"" +
               num(m.x(ps[j])) + "\" y2=\"" + num(m.y(ps[j])) +
               "\" stroke=\"#555555\" stroke-width=\"1.5\"/>\n";
    }
    for (int i = 0; i < ps.size(); ++i) {
        const char* fill = "#000000";
        if (!colour.empty() && colour[i] >= 0 && colour[i] < 3) fill = palette[colour[i]];
        out += "  <circle cx=\"" + num(m.x(ps[i])) + "\" cy=\"" + num(m.y(ps[i])) +
               "\" r=\"5\" fill=\"" + std::string(fill) + "\">\n    <title>" +
               xml_escape(format_scalar(ps[i].x) + " " + format_scalar(ps[i].y)) +
               "</title>\n  </circle>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace

std::string svg_graph(const GeomGraph& g) { return svg_render(g.base, g.edges, g.colour); }

std::string svg_points(const PointSet& ps) { return svg_render(ps, {}, {}); }

}  // namespace visconn
