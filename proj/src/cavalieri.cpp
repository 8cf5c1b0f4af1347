#include "pg3xray/cavalieri.hpp"

#include <algorithm>
#include <mutex>

#include "pg3xray/transform.hpp"

namespace pg3xray {

CavalieriEntries CavalieriEntries::for_q(int64_t q) {
    CavalieriEntries e;
    e.b_equal = q * q * q * q * (q * q - 1);
    e.b_meet = -q * q * q * (q - 1);
    e.b_skew = q * (q * q - 1);
    e.v = q * q * (q - 1) * (q + 1) * (q * q + q + 1);
    return e;
}

IntMatrix cavalieri_from_formula(const Geometry& g) {
    const auto e = CavalieriEntries::for_q(g.q());
    const int nl = g.num_lines();
    IntMatrix b(nl, nl);
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nl; ++j) {
            switch (g.relation(i, j)) {
                case Relation::Equal: b.at(i, j) = e.b_equal; break;
                case Relation::Meet: b.at(i, j) = e.b_meet; break;
                case Relation::Skew: b.at(i, j) = e.b_skew; break;
            }
        }
    return b;
}

IntMatrix cavalieri_from_drqs(const Geometry& g, int threads,
                              int64_t* out_count) {
    const int nl = g.num_lines();
    threads = std::max(threads, 1);

    // Per-thread int64 accumulators; entries stay far below 2^63 at the
    // supported field sizes.
    std::vector<std::vector<int64_t>> acc(threads,
                                          std::vector<int64_t>((size_t)nl * nl, 0));
    std::vector<int64_t> counts(threads, 0);

    enumerate_drqs(
        g,
        [&](int t, const Drq& d) {
            ++counts[t];
            auto& m = acc[t];
            std::vector<std::pair<int, int>> support;
            support.reserve(d.ruling_m.size() + d.ruling_n.size());
            for (int l : d.ruling_m) support.emplace_back(l, 1);
            for (int l : d.ruling_n) support.emplace_back(l, -1);
            for (auto [li, si] : support)
                for (auto [lj, sj] : support)
                    m[(size_t)li * nl + lj] += si * sj;
        },
        threads);

    int64_t total = 0;
    for (int64_t c : counts) total += c;
    if (out_count) *out_count = total;
    if (total != drq_count_formula(g.q()))
        throw IncompleteEnumeration("DRQ census mismatch");

    IntMatrix b(nl, nl);
    for (size_t i = 0; i < b.a.size(); ++i) {
        int64_t s = 0;
        for (int t = 0; t < threads; ++t) s += acc[t][i];
        b.a[i] = (long)s;
    }
    return b;
}

ProjectionReport verify_scaled_projection(const Geometry& g, const IntMatrix& b) {
    const int nl = g.num_lines();
    if (b.rows != nl || b.cols != nl) throw NotSquare("B must be lines x lines");
    const auto e = CavalieriEntries::for_q(g.q());

    IntMatrix c = b * b;
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nl; ++j)
            if (c.at(i, j) != e.v * b.at(i, j))
                throw NotIdempotent("B^2 != vB at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");

    ProjectionReport r;
    r.v = e.v;
    // representatives of the three relation classes
    r.c_equal = c.at(0, 0);
    bool have_meet = false, have_skew = false;
    for (int j = 1; j < nl && !(have_meet && have_skew); ++j) {
        if (!have_meet && g.relation(0, j) == Relation::Meet) {
            r.c_meet = c.at(0, j);
            have_meet = true;
        }
        if (!have_skew && g.relation(0, j) == Relation::Skew) {
            r.c_skew = c.at(0, j);
            have_skew = true;
        }
    }
    return r;
}

RankReport cavalieri_rank(const Geometry& g, const IntMatrix& b,
                          bool run_elimination) {
    const int64_t q = g.q();
    const auto e = CavalieriEntries::for_q(q);
    const int64_t expected = q * q * q * q + q * q;

    mpz_class tr = b.trace();
    mpz_class rank_z = tr / e.v;
    if (rank_z * e.v != tr) throw RankMismatch("trace not divisible by v");

    RankReport r;
    r.trace_rank = rank_z.get_si();
    if (run_elimination) {
        r.elim_rank = rank_exact(b);
        if (*r.elim_rank != r.trace_rank)
            throw RankMismatch("elimination rank != trace rank");
    }
    if (r.trace_rank != expected)
        throw RankMismatch("rank != q^4+q^2");
    return r;
}

std::vector<std::vector<int64_t>> drq_span_basis(const Geometry& g,
                                                 const std::vector<Drq>& drqs) {
    const int nl = g.num_lines();
    const int64_t q = g.q();
    const int64_t target = q * q * q * q + q * q;

    RowSpan span(nl);
    std::vector<std::vector<int64_t>> basis;
    for (const Drq& d : drqs) {
        if (span.rank() >= target) break;
        auto v = drq_vector(d, nl);
        RatVector rv(v.begin(), v.end());
        if (span.insert(std::move(rv))) basis.push_back(std::move(v));
    }
    return basis;
}

SpanKernelReport drq_span_equals_dual_kernel(const Geometry& g,
                                             const std::vector<Drq>& drqs) {
    const int nl = g.num_lines();

    SpanKernelReport r{};
    r.total_drqs = (int64_t)drqs.size();

    // Containment: the dual transform annihilates every DRQ vector,
    // because both rulings cover the same points with opposite signs.
    for (const Drq& d : drqs) {
        auto v = drq_vector(d, nl);
        LineFunction lf;
        lf.values.assign(v.begin(), v.end());
        PointFunction img = dual_xray(g, lf);
        bool zero = std::all_of(img.values.begin(), img.values.end(),
                                [](const mpq_class& x) { return x == 0; });
        if (zero) ++r.annihilated;
    }

    r.span_dim = (int64_t)drq_span_basis(g, drqs).size();

    // ker of the dual transform matrix (points x lines) has dimension
    // lines - rank; the rank equals the rank of the full xray matrix.
    IntMatrix xm = xray_matrix_full(g);
    r.kernel_dim = nl - rank_exact(xm.transposed());
    return r;
}

PointDrqReport drqs_through_point(const Geometry& g,
                                  const std::vector<Drq>& drqs) {
    std::vector<int64_t> per_point(g.num_points(), 0);
    for (const Drq& d : drqs)
        for (int p : d.point_set(g)) ++per_point[p];
    for (int64_t c : per_point)
        if (c != per_point[0])
            throw UniformityViolation("DRQs-per-point not uniform");

    PointDrqReport r;
    r.per_point = per_point.empty() ? 0 : per_point[0];
    r.v = CavalieriEntries::for_q(g.q()).v;
    r.ratio_to_v = mpq_class(r.per_point) / mpq_class(r.v);
    r.ratio_to_v.canonicalize();
    return r;
}

IntMatrix incidence_gram(const Geometry& g) {
    const int nl = g.num_lines();
    const int64_t q = g.q();
    IntMatrix m(nl, nl);
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nl; ++j) {
            switch (g.relation(i, j)) {
                case Relation::Equal: m.at(i, j) = q + 1; break;
                case Relation::Meet: m.at(i, j) = 1; break;
                case Relation::Skew: m.at(i, j) = 0; break;
            }
        }
    return m;
}

GramSpectrumReport incidence_gram_spectrum(const Geometry& g) {
    const int64_t q = g.q();
    IntMatrix m = incidence_gram(g);

    GramSpectrumReport r;
    r.ev_constants = (q + 1) * (q * q + q + 1);
    r.ev_projection = (q + 1) * q;

    // row sums: constants are an eigenvector
    for (int i = 0; i < m.rows; ++i) {
        mpz_class s = 0;
        for (int j = 0; j < m.cols; ++j) s += m.at(i, j);
        if (s != r.ev_constants)
            throw UniformityViolation("constant vector is not an eigenvector");
    }

    r.mult_constants = eigen_multiplicity(m, r.ev_constants);
    r.mult_projection = eigen_multiplicity(m, r.ev_projection);
    r.mult_zero = eigen_multiplicity(m, 0);
    return r;
}

} // namespace pg3xray
