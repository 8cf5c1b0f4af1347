#include "pg3xray/transform.hpp"

#include <numeric>

namespace pg3xray {

LineFunction xray(const Geometry& g, const PointFunction& f,
                  const std::vector<int>& domain) {
    if ((int)f.values.size() != g.num_points())
        throw LengthMismatch("point function length");
    LineFunction out;
    out.values.reserve(domain.size());
    for (int l : domain) {
        mpq_class s = 0;
        for (int p : g.points_on_line(l)) s += f.values[p];
        out.values.push_back(std::move(s));
    }
    return out;
}

LineFunction xray_full(const Geometry& g, const PointFunction& f) {
    std::vector<int> all(g.num_lines());
    std::iota(all.begin(), all.end(), 0);
    return xray(g, f, all);
}

PointFunction dual_xray(const Geometry& g, const LineFunction& lf) {
    if ((int)lf.values.size() != g.num_lines())
        throw LengthMismatch("line function length");
    PointFunction out;
    out.values.reserve(g.num_points());
    for (int p = 0; p < g.num_points(); ++p) {
        mpq_class s = 0;
        for (int l : g.lines_through_point(p)) s += lf.values[l];
        out.values.push_back(std::move(s));
    }
    return out;
}

BolkerConstants bolker_check(const Geometry& g) {
    const int64_t q = g.q();
    BolkerConstants c{q * q + q + 1, 1};

    for (int p = 0; p < g.num_points(); ++p)
        if ((int64_t)g.lines_through_point(p).size() != c.alpha)
            throw UniformityViolation("alpha not uniform");

    // beta: every distinct point pair lies on exactly one common line
    for (int p1 = 0; p1 < g.num_points(); ++p1) {
        const auto& lp1 = g.lines_through_point(p1);
        for (int p2 = p1 + 1; p2 < g.num_points(); ++p2) {
            int64_t common = 0;
            for (int l : lp1)
                if (g.incident(p2, l)) ++common;
            if (common != c.beta)
                throw UniformityViolation("beta not uniform");
        }
    }
    return c;
}

PointFunction bolker_invert(const Geometry& g, const LineFunction& rf) {
    if ((int)rf.values.size() != g.num_lines())
        throw LengthMismatch("line function length");
    const int64_t q = g.q();
    const mpq_class alpha = q * q + q + 1, beta = 1;

    mpq_class total = 0;
    for (const auto& v : rf.values) total += v;
    mpq_class s = total / alpha;

    PointFunction back = dual_xray(g, rf);
    mpq_class denom = alpha - beta;
    for (auto& v : back.values) v = (v - beta * s) / denom;
    return back;
}

IntMatrix xray_matrix(const Geometry& g, const std::vector<int>& domain) {
    IntMatrix m((int)domain.size(), g.num_points());
    for (int r = 0; r < (int)domain.size(); ++r)
        for (int p : g.points_on_line(domain[r])) m.at(r, p) = 1;
    return m;
}

IntMatrix xray_matrix_full(const Geometry& g) {
    std::vector<int> all(g.num_lines());
    std::iota(all.begin(), all.end(), 0);
    return xray_matrix(g, all);
}

} // namespace pg3xray
