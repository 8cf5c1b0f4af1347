#include "pg3xray/admissibility.hpp"

#include <algorithm>
#include <numeric>

#include "pg3xray/rng.hpp"

namespace pg3xray {

std::vector<int> Rng::subset(int n, int k) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < k; ++i)
        std::swap(idx[i], idx[i + (int)bounded(n - i)]);
    std::vector<int> out(idx.begin(), idx.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

AdmissibilityVerdict is_admissible(const Geometry& g, const LineComplex& L) {
    const int np = g.num_points();
    if ((int)L.lines.size() != np)
        throw WrongSize("complex size must equal the point count");

    IntMatrix m = xray_matrix(g, L.lines);
    int rank = rank_exact(m);

    AdmissibilityVerdict v;
    v.rank = rank;
    v.admissible = (rank == np);
    if (!v.admissible) {
        auto kernel = kernel_basis(m.transposed());
        if (kernel.empty()) throw Error("rank deficient but no left kernel");
        v.certificate = std::move(kernel.front());
    }
    return v;
}

SupportResult supports_drq_combination(
    const Geometry& g, const std::vector<std::vector<int64_t>>& basis,
    const LineComplex& L) {
    const int nl = g.num_lines();

    std::vector<bool> in_L(nl, false);
    for (int l : L.lines) in_L[l] = true;
    std::vector<int> complement;
    complement.reserve(nl - (int)L.lines.size());
    for (int l = 0; l < nl; ++l)
        if (!in_L[l]) complement.push_back(l);

    // x^t basis vanishes outside L  <=>  x in ker of the basis restricted
    // to the complement columns (transposed so x is a right kernel vector).
    const int d = (int)basis.size();
    IntMatrix restricted((int)complement.size(), d);
    for (int r = 0; r < (int)complement.size(); ++r)
        for (int c = 0; c < d; ++c)
            restricted.at(r, c) = (long)basis[c][complement[r]];

    auto kernel = kernel_basis(restricted);
    SupportResult res;
    res.nullity = (int64_t)kernel.size();
    if (!kernel.empty()) {
        RatVector combo(nl, 0);
        for (int c = 0; c < d; ++c) {
            if (kernel[0][c] == 0) continue;
            for (int l = 0; l < nl; ++l)
                if (basis[c][l] != 0) combo[l] += kernel[0][c] * (long)basis[c][l];
        }
        res.combination = std::move(combo);
    }
    return res;
}

PointFunction invert_restricted(const Geometry& g, const LineComplex& L,
                                const LineFunction& rf) {
    const int np = g.num_points();
    if ((int)L.lines.size() != np)
        throw WrongSize("complex size must equal the point count");
    if (rf.values.size() != L.lines.size())
        throw LengthMismatch("line function length");

    IntMatrix m = xray_matrix(g, L.lines);
    PointFunction f;
    try {
        f.values = solve_square(m, rf.values);
    } catch (const InconsistentData&) {
        throw NotAdmissible("restricted transform is singular");
    }
    return f;
}

LineComplex search_admissible(const Geometry& g, uint64_t seed) {
    const int np = g.num_points();
    std::vector<int> order(g.num_lines());
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(order);

    RowSpan span(np);
    LineComplex L;
    for (int l : order) {
        RatVector row(np, 0);
        for (int p : g.points_on_line(l)) row[p] = 1;
        if (span.insert(std::move(row))) {
            L.lines.push_back(l);
            if (span.rank() == np) break;
        }
    }
    std::sort(L.lines.begin(), L.lines.end());
    return L;
}

LineComplex random_complex(const Geometry& g, uint64_t seed) {
    Rng rng(seed);
    return {rng.subset(g.num_lines(), g.num_points())};
}

LineComplex embed_drq_complex(const Geometry& g, const Drq& d, uint64_t seed) {
    const int np = g.num_points();
    std::vector<bool> used(g.num_lines(), false);
    LineComplex L;
    for (int l : d.ruling_m) {
        L.lines.push_back(l);
        used[l] = true;
    }
    for (int l : d.ruling_n) {
        L.lines.push_back(l);
        used[l] = true;
    }

    std::vector<int> rest;
    for (int l = 0; l < g.num_lines(); ++l)
        if (!used[l]) rest.push_back(l);
    Rng rng(seed);
    rng.shuffle(rest);
    for (int i = 0; (int)L.lines.size() < np; ++i) L.lines.push_back(rest[i]);
    std::sort(L.lines.begin(), L.lines.end());
    return L;
}

} // namespace pg3xray
