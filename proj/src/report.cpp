// SPDX-License-Identifier: Apache-2.0
#include "rotakit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "rotakit/errors.hpp"

namespace rotakit {

std::string format_value(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

void write_chain_csv(std::ostream& os, const std::string& body_id,
                     const ChainReport& report)
{
    os << "body_id,k_C,chi,k,dM_formula,dM_brute,equals_R,equality_chain,"
          "unique_minimum\n";
    for (const ChainEntry& e : report.entries) {
        os << body_id << ',' << report.profile.max_degree << ','
           << report.profile.min_degree << ',' << e.k << ','
           << (e.formula ? format_value(*e.formula) : std::string("na")) << ','
           << format_value(e.brute) << ',' << bool_str(e.equals_R) << ','
           << bool_str(report.equality_chain) << ','
           << bool_str(report.unique_minimum) << '\n';
    }
}

void write_analysis_header(std::ostream& os)
{
    os << "body_id,n,k_C,chi,divisors,R,r,area\n";
}

void write_analysis_row(std::ostream& os, const std::string& body_id,
                        const ConvexBody& body, const SymmetryProfile& profile)
{
    os << body_id << ',' << body.vertices.size() << ',' << profile.max_degree
       << ',' << profile.min_degree << ',';
    for (std::size_t i = 0; i < profile.divisors.size(); ++i) {
        if (i) os << '|';
        os << profile.divisors[i];
    }
    os << ',' << format_value(body.circumradius) << ','
       << format_value(body.inradius) << ','
       << format_value(polygon_area(body.vertices)) << '\n';
}

void write_sweep_csv(std::ostream& os, const std::string& body_id,
                     const SweepResult& result)
{
    os << "body_id,angle,max_diameter\n";
    for (const SweepSample& s : result.samples)
        os << body_id << ',' << format_value(s.angle) << ','
           << format_value(s.value) << '\n';
}

Filter parse_filter(const std::string& expr)
{
    Filter f;
    std::size_t pos = 0;
    while (pos < expr.size()) {
        std::size_t end = expr.find(',', pos);
        if (end == std::string::npos) end = expr.size();
        std::string clause = expr.substr(pos, end - pos);
        pos = end + 1;
        if (clause.empty()) continue;

        static const char* ops[] = {"<=", ">=", "!=", "=", "<", ">"};
        std::size_t op_at = std::string::npos;
        std::string op;
        for (const char* o : ops) {
            std::size_t at = clause.find(o);
            if (at != std::string::npos && (op_at == std::string::npos || at < op_at
                                            || (at == op_at && op.size() < 2))) {
                op_at = at;
                op = o;
            }
        }
        if (op_at == std::string::npos || op_at == 0)
            throw ParseError("filter clause without comparison: '" + clause + "'");

        FilterClause fc;
        fc.field = clause.substr(0, op_at);
        fc.op = op;
        fc.text_value = clause.substr(op_at + op.size());
        if (fc.text_value.empty())
            throw ParseError("filter clause without value: '" + clause + "'");

        if (fc.field == "kC" || fc.field == "chi" || fc.field == "n") {
            fc.numeric = true;
            try {
                std::size_t used = 0;
                fc.num_value = std::stod(fc.text_value, &used);
                if (used != fc.text_value.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("filter value for '" + fc.field
                                 + "' is not a number: '" + fc.text_value + "'");
            }
        } else if (fc.field == "generator" || fc.field == "id") {
            if (fc.op != "=" && fc.op != "!=")
                throw ParseError("field '" + fc.field + "' only supports = and !=");
        } else {
            throw ParseError("unknown filter field '" + fc.field + "'");
        }
        f.clauses.push_back(std::move(fc));
    }
    return f;
}

bool filter_matches(const Filter& filter, const std::string& id,
                    const std::string& generator, const SymmetryProfile& profile,
                    std::size_t vertex_count)
{
    for (const FilterClause& fc : filter.clauses) {
        if (fc.numeric) {
            double lhs = 0.0;
            if (fc.field == "kC") lhs = profile.max_degree;
            else if (fc.field == "chi") lhs = profile.min_degree;
            else lhs = double(vertex_count);
            bool ok = false;
            if (fc.op == "=") ok = lhs == fc.num_value;
            else if (fc.op == "!=") ok = lhs != fc.num_value;
            else if (fc.op == "<") ok = lhs < fc.num_value;
            else if (fc.op == "<=") ok = lhs <= fc.num_value;
            else if (fc.op == ">") ok = lhs > fc.num_value;
            else ok = lhs >= fc.num_value;
            if (!ok) return false;
        } else {
            const std::string& lhs = (fc.field == "generator") ? generator : id;
            bool eq = lhs == fc.text_value;
            if (fc.op == "=" ? !eq : eq) return false;
        }
    }
    return true;
}

PanelSpec make_panel(const ConvexBody& body, const StandardPartition& partition)
{
    PanelSpec p;
    p.partition = partition;
    p.dm = 0.0;
    for (const auto& subset : partition.subsets) {
        for (std::size_t i = 0; i < subset.size(); ++i)
            for (std::size_t j = i + 1; j < subset.size(); ++j) {
                double d = norm2(subset[i] - subset[j]);
                if (d > p.dm) {
                    p.dm = d;
                    p.seg_a = subset[i];
                    p.seg_b = subset[j];
                }
            }
    }
    p.dm = std::sqrt(p.dm);
    p.label = "k=" + std::to_string(partition.k) + " max=" + format_value(p.dm);
    (void)body;
    return p;
}

namespace {

struct Mapper {
    double scale, ox, oy, h;
    double x(Point2 p) const { return ox + scale * p.x; }
    double y(Point2 p) const { return h - (oy + scale * p.y); }
};

void emit_point_list(std::ostream& os, const std::vector<Point2>& pts,
                     const Mapper& m)
{
    char buf[64];
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", i ? " " : "", m.x(pts[i]),
                      m.y(pts[i]));
        os << buf;
    }
}

}  // namespace

void render_partitions_svg(std::ostream& os, const ConvexBody& body,
                           const std::vector<PanelSpec>& panels)
{
    const double side = 800.0;
    const std::size_t count = std::max<std::size_t>(panels.size(), 1);

    double minx = body.vertices[0].x, maxx = minx;
    double miny = body.vertices[0].y, maxy = miny;
    for (const Point2& v : body.vertices) {
        minx = std::min(minx, v.x); maxx = std::max(maxx, v.x);
        miny = std::min(miny, v.y); maxy = std::max(maxy, v.y);
    }
    double bw = std::max(maxx - minx, 1e-9), bh = std::max(maxy - miny, 1e-9);
    double scale = 0.9 * side / std::max(bw, bh);

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side * count
       << "\" height=\"" << side << "\" viewBox=\"0 0 " << side * count << ' '
       << side << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    char buf[256];
    for (std::size_t pi = 0; pi < panels.size(); ++pi) {
        const PanelSpec& p = panels[pi];
        Mapper m;
        m.scale = scale;
        m.h = side;
        m.ox = pi * side + (side - scale * bw) / 2.0 - scale * minx;
        m.oy = (side - scale * bh) / 2.0 - scale * miny;

        os << "  <g>\n    <polygon points=\"";
        emit_point_list(os, body.vertices, m);
        os << "\" fill=\"#edf1fa\" stroke=\"#334466\" stroke-width=\"2\"/>\n";

        for (const auto& subset : p.partition.subsets) {
            os << "    <polygon points=\"";
            emit_point_list(os, subset, m);
            os << "\" fill=\"none\" stroke=\"#99a6c4\" stroke-width=\"1\"/>\n";
        }

        for (const Point2& e : p.partition.endpoints) {
            std::snprintf(buf, sizeof buf,
                          "    <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" "
                          "y2=\"%.2f\" stroke=\"#667799\" stroke-width=\"1.5\"/>\n",
                          m.x(p.partition.center), m.y(p.partition.center), m.x(e),
                          m.y(e));
            os << buf;
            std::snprintf(buf, sizeof buf,
                          "    <circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" "
                          "fill=\"#334466\"/>\n",
                          m.x(e), m.y(e));
            os << buf;
        }

        std::snprintf(buf, sizeof buf,
                      "    <circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"#000\"/>\n",
                      m.x(p.partition.center), m.y(p.partition.center));
        os << buf;
        std::snprintf(buf, sizeof buf,
                      "    <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                      "stroke=\"#cc2222\" stroke-width=\"2.5\"/>\n",
                      m.x(p.seg_a), m.y(p.seg_a), m.x(p.seg_b), m.y(p.seg_b));
        os << buf;
        std::snprintf(buf, sizeof buf,
                      "    <text x=\"%.2f\" y=\"40\" font-family=\"sans-serif\" "
                      "font-size=\"28\">%s</text>\n  </g>\n",
                      pi * side + 20.0, p.label.c_str());
        os << buf;
    }
    os << "</svg>\n";
}

}  // namespace rotakit
