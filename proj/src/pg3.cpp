#include "pg3xray/pg3.hpp"

#include <algorithm>

#include "pg3xray/errors.hpp"

namespace pg3xray {

namespace {

uint64_t pack4(const std::array<int, 4>& v, int q) {
    uint64_t k = 0;
    for (int i = 0; i < 4; ++i) k = k * (uint64_t)q + (uint64_t)v[i];
    return k;
}

uint64_t pack6(const std::array<int, 6>& v, int q) {
    uint64_t k = 0;
    for (int i = 0; i < 6; ++i) k = k * (uint64_t)q + (uint64_t)v[i];
    return k;
}

std::array<int, 6> pluecker_of(const Field& f, const std::array<int, 4>& x,
                               const std::array<int, 4>& y) {
    auto minor = [&](int a, int b) {
        return f.sub(f.mul(x[a], y[b]), f.mul(x[b], y[a]));
    };
    return {minor(0, 1), minor(0, 2), minor(0, 3),
            minor(1, 2), minor(1, 3), minor(2, 3)};
}

// The pairing whose vanishing is equivalent to the two lines meeting:
// p01 q23 - p02 q13 + p03 q12 + p12 q03 - p13 q02 + p23 q01.
int line_pairing(const Field& f, const std::array<int, 6>& a,
                 const std::array<int, 6>& b) {
    int s = 0;
    s = f.add(s, f.mul(a[0], b[5]));
    s = f.sub(s, f.mul(a[1], b[4]));
    s = f.add(s, f.mul(a[2], b[3]));
    s = f.add(s, f.mul(a[3], b[2]));
    s = f.sub(s, f.mul(a[4], b[1]));
    s = f.add(s, f.mul(a[5], b[0]));
    return s;
}

} // namespace

std::array<int, 4> Geometry::normalize_point(std::array<int, 4> v) const {
    for (int i = 0; i < 4; ++i) {
        if (v[i] != 0) {
            int s = field_.inv(v[i]);
            for (int j = i; j < 4; ++j) v[j] = field_.mul(v[j], s);
            return v;
        }
    }
    return v; // all zero; callers reject
}

std::array<int, 6> Geometry::normalize_line(std::array<int, 6> v) const {
    for (int i = 0; i < 6; ++i) {
        if (v[i] != 0) {
            int s = field_.inv(v[i]);
            for (int j = i; j < 6; ++j) v[j] = field_.mul(v[j], s);
            return v;
        }
    }
    return v;
}

Geometry Geometry::build(const Field& field, int budget_q) {
    if (field.q() > budget_q)
        throw BudgetExceeded("field order exceeds geometry budget");

    Geometry g(field);
    const Field& f = g.field_;
    const int q = f.q();

    // Points: all normalized nonzero 4-vectors, lex order of coordinate codes.
    std::vector<std::array<int, 4>> pts;
    for (int c0 = 0; c0 < q; ++c0)
        for (int c1 = 0; c1 < q; ++c1)
            for (int c2 = 0; c2 < q; ++c2)
                for (int c3 = 0; c3 < q; ++c3) {
                    std::array<int, 4> v{c0, c1, c2, c3};
                    if (v == std::array<int, 4>{0, 0, 0, 0}) continue;
                    auto n = g.normalize_point(v);
                    if (n == v) pts.push_back(v);
                }
    std::sort(pts.begin(), pts.end());
    g.points_.reserve(pts.size());
    for (int i = 0; i < (int)pts.size(); ++i) {
        g.points_.push_back({pts[i], i});
        g.point_by_key_[pack4(pts[i], q)] = i;
    }

    // Lines: Pluecker vectors from all point pairs, deduplicated, lex order.
    struct ProtoLine {
        std::array<int, 6> pl;
        std::vector<int> pts;
    };
    std::unordered_map<uint64_t, ProtoLine> proto;
    const int np = (int)g.points_.size();
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j) {
            auto pl = g.normalize_line(
                pluecker_of(f, g.points_[i].coords, g.points_[j].coords));
            auto& pr = proto[pack6(pl, q)];
            if (pr.pts.empty()) pr.pl = pl;
            pr.pts.push_back(i);
            pr.pts.push_back(j);
        }

    std::vector<ProtoLine> lns;
    lns.reserve(proto.size());
    for (auto& [key, pr] : proto) {
        std::sort(pr.pts.begin(), pr.pts.end());
        pr.pts.erase(std::unique(pr.pts.begin(), pr.pts.end()), pr.pts.end());
        lns.push_back(std::move(pr));
    }
    std::sort(lns.begin(), lns.end(),
              [](const ProtoLine& a, const ProtoLine& b) { return a.pl < b.pl; });

    const int nl = (int)lns.size();
    g.lines_.reserve(nl);
    g.line_points_.resize(nl);
    for (int i = 0; i < nl; ++i) {
        g.lines_.push_back({lns[i].pl, i});
        g.line_by_key_[pack6(lns[i].pl, q)] = i;
        g.line_points_[i] = std::move(lns[i].pts);
    }

    g.point_lines_.resize(np);
    for (int l = 0; l < nl; ++l)
        for (int p : g.line_points_[l]) g.point_lines_[p].push_back(l);
    for (auto& v : g.point_lines_) std::sort(v.begin(), v.end());

    g.point_words_ = (np + 63) / 64;
    g.incidence_bits_.assign(g.point_words_ * nl, 0);
    for (int l = 0; l < nl; ++l)
        for (int p : g.line_points_[l])
            g.incidence_bits_[g.point_words_ * l + p / 64] |= 1ull << (p % 64);

    // Dense relation table; skipped for very large geometries, in which
    // case relation() falls back to the pairing.
    if ((int64_t)nl * nl <= 16'000'000) {
        g.relation_.assign((size_t)nl * nl, (uint8_t)Relation::Skew);
        for (int a = 0; a < nl; ++a) {
            g.relation_[(size_t)a * nl + a] = (uint8_t)Relation::Equal;
            for (int b = a + 1; b < nl; ++b) {
                if (line_pairing(f, g.lines_[a].pluecker, g.lines_[b].pluecker) == 0) {
                    g.relation_[(size_t)a * nl + b] = (uint8_t)Relation::Meet;
                    g.relation_[(size_t)b * nl + a] = (uint8_t)Relation::Meet;
                }
            }
        }
    }

    return g;
}

bool Geometry::incident(int pt, int line) const {
    return (incidence_bits_[point_words_ * line + pt / 64] >> (pt % 64)) & 1u;
}

Relation Geometry::relation(int l1, int l2) const {
    if (l1 == l2) return Relation::Equal;
    if (!relation_.empty())
        return (Relation)relation_[(size_t)l1 * lines_.size() + l2];
    return line_pairing(field_, lines_[l1].pluecker, lines_[l2].pluecker) == 0
               ? Relation::Meet
               : Relation::Skew;
}

int Geometry::point_index(std::array<int, 4> coords) const {
    if (coords == std::array<int, 4>{0, 0, 0, 0}) return -1;
    auto it = point_by_key_.find(pack4(normalize_point(coords), field_.q()));
    return it == point_by_key_.end() ? -1 : it->second;
}

int Geometry::line_through(int p1, int p2) const {
    if (p1 == p2) throw Error("line_through: identical points");
    auto pl = pluecker_of(field_, points_[p1].coords, points_[p2].coords);
    return line_index(pl);
}

int Geometry::line_index(std::array<int, 6> pluecker) const {
    auto it = line_by_key_.find(pack6(normalize_line(pluecker), field_.q()));
    return it == line_by_key_.end() ? -1 : it->second;
}

IncidenceCounts Geometry::incidence_counts() const {
    const int64_t q = field_.q();
    IncidenceCounts c{q * q + q + 1, q + 1, q * q * q * q};

    for (const auto& v : point_lines_)
        if ((int64_t)v.size() != c.per_point)
            throw UniformityViolation("lines-per-point not uniform");
    for (const auto& v : line_points_)
        if ((int64_t)v.size() != c.per_line)
            throw UniformityViolation("points-per-line not uniform");

    const int nl = num_lines();
    for (int a = 0; a < nl; ++a) {
        int64_t skew = 0;
        for (int b = 0; b < nl; ++b)
            if (relation(a, b) == Relation::Skew) ++skew;
        if (skew != c.skew_per_line)
            throw UniformityViolation("skew-per-line not uniform");
    }
    return c;
}

RelationCensus Geometry::third_line_census(int l1, int l2) const {
    if (l1 < 0 || l2 < 0 || l1 >= num_lines() || l2 >= num_lines())
        throw GeometryMismatch("line index out of range");
    RelationCensus c;
    c.base = relation(l1, l2);
    for (int l3 = 0; l3 < num_lines(); ++l3) {
        if (l3 == l1 || l3 == l2) continue;
        ++c.counts[(int)relation(l3, l1)][(int)relation(l3, l2)];
    }
    return c;
}

} // namespace pg3xray
