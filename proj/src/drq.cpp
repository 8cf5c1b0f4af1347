#include "pg3xray/drq.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "pg3xray/errors.hpp"

namespace pg3xray {

std::vector<int> Drq::point_set(const Geometry& g) const {
    std::vector<int> pts;
    for (int l : ruling_m)
        for (int p : g.points_on_line(l)) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

int64_t count_triad_extensions(const Geometry& g, int l1, int l2) {
    if (g.relation(l1, l2) != Relation::Skew) throw NotSkew();
    int64_t n = 0;
    for (int l3 = 0; l3 < g.num_lines(); ++l3)
        if (g.relation(l3, l1) == Relation::Skew &&
            g.relation(l3, l2) == Relation::Skew)
            ++n;
    return n;
}

std::vector<int> transversals(const Geometry& g, const Triad& t) {
    auto [a, b, c] = t.lines;
    if (g.relation(a, b) != Relation::Skew ||
        g.relation(a, c) != Relation::Skew ||
        g.relation(b, c) != Relation::Skew)
        throw InvalidTriad();

    std::vector<int> out;
    out.reserve(g.q() + 1);
    for (int p : g.points_on_line(a)) {
        int found = -1;
        for (int l : g.lines_through_point(p)) {
            if (g.relation(l, b) == Relation::Meet &&
                g.relation(l, c) == Relation::Meet) {
                if (found >= 0) throw InvalidTriad("transversal not unique");
                found = l;
            }
        }
        if (found < 0) throw InvalidTriad("missing transversal");
        out.push_back(found);
    }
    return out;
}

Drq extend_triad(const Geometry& g, const Triad& t) {
    std::vector<int> n = transversals(g, t);
    std::vector<int> m = transversals(g, Triad{{n[0], n[1], n[2]}});
    std::sort(m.begin(), m.end());
    std::sort(n.begin(), n.end());
    for (int l : t.lines)
        if (!std::binary_search(m.begin(), m.end(), l))
            throw InvalidTriad("triad not contained in its ruling");
    Drq d;
    if (m < n) {
        d.ruling_m = std::move(m);
        d.ruling_n = std::move(n);
    } else {
        d.ruling_m = std::move(n);
        d.ruling_n = std::move(m);
    }
    return d;
}

namespace {

// Walks all triads l1 < l2 < l3 with l1 in [lo, hi), extends each, and
// emits the DRQ when the triad is its canonical generator: the three
// smallest lines of the lexicographically smaller ruling.
void enumerate_range(const Geometry& g, int lo, int hi, int thread_id,
                     const std::function<void(int, const Drq&)>& sink) {
    const int nl = g.num_lines();
    for (int l1 = lo; l1 < hi; ++l1) {
        for (int l2 = l1 + 1; l2 < nl; ++l2) {
            if (g.relation(l1, l2) != Relation::Skew) continue;
            for (int l3 = l2 + 1; l3 < nl; ++l3) {
                if (g.relation(l3, l1) != Relation::Skew ||
                    g.relation(l3, l2) != Relation::Skew)
                    continue;
                Drq d = extend_triad(g, Triad{{l1, l2, l3}});
                if (d.ruling_m[0] == l1 && d.ruling_m[1] == l2 &&
                    d.ruling_m[2] == l3)
                    sink(thread_id, d);
            }
        }
    }
}

} // namespace

void enumerate_drqs(const Geometry& g,
                    const std::function<void(int, const Drq&)>& sink,
                    int threads) {
    const int nl = g.num_lines();
    if (threads <= 1) {
        enumerate_range(g, 0, nl, 0, sink);
        return;
    }
    std::vector<std::thread> workers;
    // Interleaved stripes: the work per l1 shrinks as l1 grows, so
    // contiguous blocks would be unbalanced.
    std::atomic<int> next{0};
    for (int t = 0; t < threads; ++t)
        workers.emplace_back([&, t] {
            for (int l1 = next.fetch_add(1); l1 < nl; l1 = next.fetch_add(1))
                enumerate_range(g, l1, l1 + 1, t, sink);
        });
    for (auto& w : workers) w.join();
}

std::vector<Drq> enumerate_drqs(const Geometry& g, int threads) {
    std::vector<std::vector<Drq>> per_thread(std::max(threads, 1));
    enumerate_drqs(
        g, [&](int t, const Drq& d) { per_thread[t].push_back(d); }, threads);
    std::vector<Drq> all;
    for (auto& v : per_thread)
        all.insert(all.end(), std::make_move_iterator(v.begin()),
                   std::make_move_iterator(v.end()));
    std::sort(all.begin(), all.end(), [](const Drq& a, const Drq& b) {
        return std::tie(a.ruling_m, a.ruling_n) < std::tie(b.ruling_m, b.ruling_n);
    });
    return all;
}

int64_t drq_count_formula(int64_t q) {
    return (q * q + 1) * (q * q + q + 1) * q * q * q * q * (q - 1) / 2;
}

std::vector<int64_t> drq_vector(const Drq& d, int total_lines) {
    std::vector<int64_t> v(total_lines, 0);
    for (int l : d.ruling_m) v[l] = 1;
    for (int l : d.ruling_n) v[l] = -1;
    return v;
}

namespace {

// Nullspace basis of a matrix over GF(q), rows x 10 columns.
std::vector<std::array<int, 10>> field_nullspace10(
    const Field& f, std::vector<std::array<int, 10>> m) {
    const int cols = 10;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < (int)m.size(); ++col) {
        int piv = -1;
        for (int r = rank; r < (int)m.size(); ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        int inv = f.inv(m[rank][col]);
        for (int j = col; j < cols; ++j) m[rank][j] = f.mul(m[rank][j], inv);
        for (int r = 0; r < (int)m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            int fac = m[r][col];
            for (int j = col; j < cols; ++j)
                m[r][j] = f.sub(m[r][j], f.mul(fac, m[rank][j]));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::array<bool, 10> is_pivot{};
    for (int c : pivot_col) is_pivot[c] = true;

    std::vector<std::array<int, 10>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::array<int, 10> v{};
        v[free] = 1;
        for (int i = 0; i < rank; ++i) v[pivot_col[i]] = f.neg(m[i][free]);
        basis.push_back(v);
    }
    return basis;
}

int eval_form(const Field& f, const std::array<int, 10>& c,
              const std::array<int, 4>& x) {
    static constexpr int mono[10][2] = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1},
                                        {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
    int s = 0;
    for (int i = 0; i < 10; ++i) {
        if (c[i] == 0) continue;
        s = f.add(s, f.mul(c[i], f.mul(x[mono[i][0]], x[mono[i][1]])));
    }
    return s;
}

} // namespace

std::array<int, 10> quadric_fit(const Geometry& g, const Drq& d) {
    const Field& f = g.field();
    const int q = g.q();
    auto pts = d.point_set(g);
    if ((int)pts.size() != (q + 1) * (q + 1))
        throw NoQuadric("DRQ point set has wrong size");

    std::vector<std::array<int, 10>> rows;
    rows.reserve(pts.size());
    for (int p : pts) {
        const auto& x = g.points()[p].coords;
        std::array<int, 10> row{
            f.mul(x[0], x[0]), f.mul(x[0], x[1]), f.mul(x[0], x[2]),
            f.mul(x[0], x[3]), f.mul(x[1], x[1]), f.mul(x[1], x[2]),
            f.mul(x[1], x[3]), f.mul(x[2], x[2]), f.mul(x[2], x[3]),
            f.mul(x[3], x[3])};
        rows.push_back(row);
    }

    auto basis = field_nullspace10(f, std::move(rows));
    if (basis.empty()) throw NoQuadric();

    // Scan nonzero combinations of the nullspace for a form whose full
    // vanishing set is exactly the DRQ's point set.
    int64_t combos = 1;
    for (size_t i = 0; i < basis.size(); ++i) combos *= q;
    for (int64_t code = 1; code < combos; ++code) {
        std::array<int, 10> form{};
        int64_t c = code;
        for (size_t i = 0; i < basis.size(); ++i) {
            int coef = (int)(c % q);
            c /= q;
            if (coef == 0) continue;
            for (int j = 0; j < 10; ++j)
                form[j] = f.add(form[j], f.mul(coef, basis[i][j]));
        }
        int64_t vanish = 0;
        for (const auto& pt : g.points())
            if (eval_form(f, form, pt.coords) == 0) ++vanish;
        if (vanish == (int64_t)pts.size()) return form;
    }
    throw NoQuadric("no form with the exact vanishing set");
}

} // namespace pg3xray
