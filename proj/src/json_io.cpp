#include "pg3xray/json_io.hpp"

#include <algorithm>

namespace pg3xray {

json field_to_json(const Field& f) {
    return {{"p", f.p()}, {"k", f.k()}, {"modulus", f.modulus()}};
}

Field field_from_json(const json& j) {
    Field f = Field::make(j.at("p").get<int>(), j.at("k").get<int>());
    if (j.contains("modulus") &&
        j.at("modulus").get<std::vector<int>>() != f.modulus())
        throw InconsistentData("modulus does not match the canonical choice");
    return f;
}

json geometry_to_json(const Geometry& g) {
    json points = json::array();
    for (const auto& p : g.points()) points.push_back(p.coords);
    json lines = json::array();
    for (const auto& l : g.lines()) lines.push_back(l.pluecker);
    return {{"field", field_to_json(g.field())},
            {"num_points", g.num_points()},
            {"num_lines", g.num_lines()},
            {"points", points},
            {"lines", lines}};
}

json drq_to_json(const Drq& d) {
    return {{"m", d.ruling_m}, {"n", d.ruling_n}};
}

Drq drq_from_json(const json& j) {
    Drq d;
    d.ruling_m = j.at("m").get<std::vector<int>>();
    d.ruling_n = j.at("n").get<std::vector<int>>();
    return d;
}

namespace {

std::string rat_str(const mpq_class& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

mpq_class rat_parse(const std::string& s) {
    mpq_class x(s);
    x.canonicalize();
    return x;
}

} // namespace

json rationals_to_json(const RatVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_str(x));
    return a;
}

RatVector rationals_from_json(const json& j) {
    RatVector v;
    v.reserve(j.size());
    for (const auto& s : j) v.push_back(rat_parse(s.get<std::string>()));
    return v;
}

json point_function_to_json(const PointFunction& f) {
    return rationals_to_json(f.values);
}
PointFunction point_function_from_json(const json& j) {
    return {rationals_from_json(j)};
}
json line_function_to_json(const LineFunction& f) {
    return rationals_to_json(f.values);
}
LineFunction line_function_from_json(const json& j) {
    return {rationals_from_json(j)};
}

json complex_to_json(const Geometry& g, const LineComplex& L) {
    const Field& f = g.field();
    return {{"q", f.q()},
            {"p", f.p()},
            {"k", f.k()},
            {"modulus", f.modulus()},
            {"lines", L.lines}};
}

LineComplex complex_from_json(const Geometry& g, const json& j) {
    if (j.contains("q") && j.at("q").get<int>() != g.q())
        throw GeometryMismatch("complex file q does not match geometry");

    LineComplex L;
    if (j.contains("lines")) {
        L.lines = j.at("lines").get<std::vector<int>>();
        for (int l : L.lines)
            if (l < 0 || l >= g.num_lines())
                throw InconsistentData("line index out of range");
    } else if (j.contains("pluecker")) {
        for (const auto& t : j.at("pluecker")) {
            auto v = t.get<std::vector<int>>();
            if (v.size() != 6) throw InconsistentData("pluecker tuple size");
            int idx = g.line_index({v[0], v[1], v[2], v[3], v[4], v[5]});
            if (idx < 0) throw InconsistentData("pluecker tuple is not a line");
            L.lines.push_back(idx);
        }
    } else {
        throw InconsistentData("complex file needs \"lines\" or \"pluecker\"");
    }
    std::sort(L.lines.begin(), L.lines.end());
    L.lines.erase(std::unique(L.lines.begin(), L.lines.end()), L.lines.end());
    return L;
}

json verdict_to_json(const AdmissibilityVerdict& v) {
    json j = {{"admissible", v.admissible}, {"rank", v.rank}};
    if (!v.admissible) j["certificate"] = rationals_to_json(v.certificate);
    return j;
}

} // namespace pg3xray
