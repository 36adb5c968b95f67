#include "tilepack/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "tilepack/enumerate.hpp"
#include "tilepack/errors.hpp"

namespace tilepack {

namespace {

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Window {
    double x0, y0, x1, y1;
};

// svg y runs downward; flip about the x axis
void rect(std::ostringstream& out, const Box& b, double dx, double dy, const char* style) {
    double x = b.lo[0].approx() + dx;
    double y = b.hi[1].approx() + dy;
    double w = (b.hi[0] - b.lo[0]).approx();
    double h = (b.hi[1] - b.lo[1]).approx();
    out << "  <rect x=\"" << num(x) << "\" y=\"" << num(-y) << "\" width=\"" << num(w)
        << "\" height=\"" << num(h) << "\" " << style << "/>\n";
}

} // namespace

std::string construction_svg(const ConstructionResult& res) {
    if (res.body.dim != 2) throw DimensionError("svg export needs a 2-dimensional construction");
    const BodyF& f = res.body;
    Box bb = f.bounding_box();

    Window win{bb.lo[0].approx() - 2.0, bb.lo[1].approx() - 2.0,
               bb.hi[0].approx() + 2.0, bb.hi[1].approx() + 2.0};

    std::ostringstream out;
    double w = win.x1 - win.x0, h = win.y1 - win.y0;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(win.x0) << " "
        << num(-win.y1) << " " << num(w) << " " << num(h) << "\" width=\"" << num(96.0 * w)
        << "\" height=\"" << num(96.0 * h) << "\">\n";
    out << "  <rect x=\"" << num(win.x0) << "\" y=\"" << num(-win.y1) << "\" width=\"" << num(w)
        << "\" height=\"" << num(h) << "\" fill=\"white\"/>\n";

    // window of L-translates of the body, outlined
    for_each_box_vector({Integer(-2), Integer(-2)}, {Integer(2), Integer(2)},
                        [&](const std::vector<Integer>& k) {
                            if (sgn(k[0]) == 0 && sgn(k[1]) == 0) return true;
                            FVec t = lattice_point(res.l_canonical, k);
                            for (const auto& b : f.boxes)
                                rect(out, b, t[0].approx(), t[1].approx(),
                                     "fill=\"none\" stroke=\"#9aa7b2\" stroke-width=\"0.015\"");
                            return true;
                        });

    // fundamental parallelepiped of M, dashed
    {
        const Matrix& bm = res.m_canonical.basis();
        double ax = bm.at(0, 0).approx(), ay = bm.at(1, 0).approx();
        double bx = bm.at(0, 1).approx(), by = bm.at(1, 1).approx();
        out << "  <polygon points=\"0,0 " << num(ax) << "," << num(-ay) << " " << num(ax + bx) << ","
            << num(-(ay + by)) << " " << num(bx) << "," << num(-by)
            << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"0.02\" stroke-dasharray=\"0.08 0.05\"/>\n";
    }

    for (const auto& b : f.boxes)
        rect(out, b, 0.0, 0.0,
             "fill=\"#4f8fd0\" fill-opacity=\"0.75\" stroke=\"#1f4e79\" stroke-width=\"0.02\"");

    // lattice points inside the window
    auto draw_points = [&](const Lattice& lat, const char* fill, double r) {
        long reach = 8;
        for_each_box_vector({Integer(-reach), Integer(-reach)}, {Integer(reach), Integer(reach)},
                            [&](const std::vector<Integer>& k) {
                                FVec p = lattice_point(lat, k);
                                double x = p[0].approx(), y = p[1].approx();
                                if (x < win.x0 || x > win.x1 || y < win.y0 || y > win.y1) return true;
                                out << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(-y) << "\" r=\""
                                    << num(r) << "\" fill=\"" << fill << "\"/>\n";
                                return true;
                            });
    };
    draw_points(res.l_canonical, "#222222", 0.045);
    draw_points(res.m_canonical, "#c0392b", 0.06);

    out << "</svg>\n";
    return out.str();
}

} // namespace tilepack
