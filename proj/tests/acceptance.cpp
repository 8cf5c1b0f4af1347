// Acceptance suite: one pass/fail line per criterion, exit nonzero on any
// failure. All arithmetic exact; every expected value is an identity.
//
// Set PG3XRAY_SKIP_Q4_ELIMINATION=1 to skip the full exact elimination of
// the 357x357 Cavalieri matrix at q=4 (the trace-based rank always runs).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "pg3xray/admissibility.hpp"
#include "pg3xray/json_io.hpp"
#include "pg3xray/rng.hpp"

using namespace pg3xray;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)),
          start_(std::chrono::steady_clock::now()) {}

    void check(bool ok, const std::string& detail) {
        if (!ok) {
            pass_ = false;
            details_ += "\n    FAIL: " + detail;
        }
    }
    template <typename A, typename B>
    void equal(const A& expected, const B& actual, const std::string& what) {
        check(expected == actual, what);
    }

    ~Criterion() {
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
        std::cout << (pass_ ? "PASS" : "FAIL") << "  criterion " << number_
                  << ": " << title_ << "  (" << (int)ms << " ms)" << details_
                  << std::endl;
        if (!pass_) ++failures;
    }

private:
    int number_;
    std::string title_;
    bool pass_ = true;
    std::string details_;
    std::chrono::steady_clock::time_point start_;
};

Geometry geometry_for_q(int q) {
    for (int base = 2; base <= q; ++base) {
        if (!is_prime(base) || q % base != 0) continue;
        int deg = 0, rest = q;
        while (rest % base == 0) {
            rest /= base;
            ++deg;
        }
        return Geometry::build(Field::make(base, deg));
    }
    throw Error("bad q");
}

PointFunction random_pf(const Geometry& g, Rng& rng) {
    PointFunction f;
    for (int i = 0; i < g.num_points(); ++i) {
        mpq_class v((long)rng.bounded(201) - 100, (long)rng.bounded(9) + 1);
        v.canonicalize();
        f.values.push_back(v);
    }
    return f;
}

} // namespace

int main() {
    const int threads = (int)std::max(1u, std::thread::hardware_concurrency());
    const bool skip_q4_elim =
        std::getenv("PG3XRAY_SKIP_Q4_ELIMINATION") != nullptr;

    // shared builds
    Geometry g2 = geometry_for_q(2);
    Geometry g3 = geometry_for_q(3);
    Geometry g4 = geometry_for_q(4);
    Geometry g5 = geometry_for_q(5);
    auto geom = [&](int q) -> Geometry& {
        return q == 2 ? g2 : q == 3 ? g3 : q == 4 ? g4 : g5;
    };

    std::vector<Drq> drqs2 = enumerate_drqs(g2, threads);
    std::vector<Drq> drqs3 = enumerate_drqs(g3, threads);

    { // 1. point/line/incidence/triad-extension counts, q = 2..5
        Criterion c(1, "counts for q in {2,3,4,5}");
        for (int q : {2, 3, 4, 5}) {
            const Geometry& g = geom(q);
            const int64_t Q = q;
            c.equal(Q * Q * Q + Q * Q + Q + 1, (int64_t)g.num_points(),
                    "points q=" + std::to_string(q));
            c.equal((Q * Q + 1) * (Q * Q + Q + 1), (int64_t)g.num_lines(),
                    "lines q=" + std::to_string(q));
            auto ic = g.incidence_counts(); // asserts uniformity exhaustively
            c.equal(Q * Q + Q + 1, ic.per_point, "lines per point");
            c.equal(Q * Q * Q * Q, ic.skew_per_line, "skew per line");

            int64_t ext = Q * (Q + 1) * (Q - 1) * (Q - 1);
            int checked = 0;
            for (int a = 0; a < g.num_lines() && checked < 5; ++a)
                for (int b = a + 1; b < g.num_lines() && checked < 5; ++b) {
                    if (g.relation(a, b) != Relation::Skew) continue;
                    c.equal(ext, count_triad_extensions(g, a, b),
                            "triad extensions q=" + std::to_string(q));
                    ++checked;
                }
        }
    }

    IntMatrix b4_drqs; // shared between criteria 2 and 3
    int64_t count4 = 0;
    { // 2. DRQ census
        Criterion c(2, "DRQ census 280 / 10530 / 137088");
        c.equal((int64_t)280, (int64_t)drqs2.size(), "q=2 census");
        c.equal((int64_t)10530, (int64_t)drqs3.size(), "q=3 census");
        b4_drqs = cavalieri_from_drqs(g4, threads, &count4);
        c.equal((int64_t)137088, count4, "q=4 census");
        c.equal(drq_count_formula(2), (int64_t)drqs2.size(), "q=2 formula");
        c.equal(drq_count_formula(3), (int64_t)drqs3.size(), "q=3 formula");
        c.equal(drq_count_formula(4), count4, "q=4 formula");
    }

    { // 3. Cavalieri matrix: AA^t equals the closed form
        Criterion c(3, "Cavalieri entries from DRQs match the closed form");
        c.check(cavalieri_from_drqs(g2, threads) == cavalieri_from_formula(g2),
                "q=2 entrywise");
        c.check(cavalieri_from_drqs(g3, threads) == cavalieri_from_formula(g3),
                "q=3 entrywise");
        // q=4 spot rows against the formula (the full matrix is on hand)
        IntMatrix f4 = cavalieri_from_formula(g4);
        bool spot_ok = true;
        for (int r : {0, 1, 50, 123, 200, 356})
            for (int j = 0; j < f4.cols; ++j)
                if (b4_drqs.at(r, j) != f4.at(r, j)) spot_ok = false;
        c.check(spot_ok, "q=4 spot rows");
    }

    { // 4. scaled projection and rank
        Criterion c(4, "B^2 = vB, c-values, rank q^4+q^2");
        struct Row {
            int q;
            int64_t v, rank;
        };
        for (auto [q, v, rank] :
             {Row{2, 84, 20}, Row{3, 936, 90}, Row{4, 5040, 272}}) {
            const Geometry& g = geom(q);
            IntMatrix b = cavalieri_from_formula(g);
            try {
                auto pr = verify_scaled_projection(g, b);
                c.equal(mpz_class((long)v), pr.v, "v q=" + std::to_string(q));
                if (q == 2) {
                    c.equal(mpz_class(4032), pr.c_equal, "c_equal q=2");
                    c.equal(mpz_class(-672), pr.c_meet, "c_meet q=2");
                    c.equal(mpz_class(504), pr.c_skew, "c_skew q=2");
                }
                bool elim = !(q == 4 && skip_q4_elim);
                auto rr = cavalieri_rank(g, b, elim);
                c.equal(rank, rr.trace_rank, "trace rank q=" + std::to_string(q));
                if (elim)
                    c.equal(rank, *rr.elim_rank,
                            "elimination rank q=" + std::to_string(q));
                else
                    std::cout << "  (q=4 elimination skipped by request; "
                                 "trace path verified)\n";
            } catch (const Error& e) {
                c.check(false, std::string("exception: ") + e.what());
            }
        }
    }

    { // 5. kernel equality
        Criterion c(5, "span(DRQs) = ker(dual transform), dim q^4+q^2");
        for (int q : {2, 3}) {
            const Geometry& g = geom(q);
            auto sk = drq_span_equals_dual_kernel(g, q == 2 ? drqs2 : drqs3);
            const int64_t expected = (int64_t)q * q * q * q + q * q;
            c.equal(expected, sk.span_dim, "span dim q=" + std::to_string(q));
            c.equal(expected, sk.kernel_dim,
                    "kernel dim q=" + std::to_string(q));
            c.equal(sk.total_drqs, sk.annihilated,
                    "all DRQ vectors annihilated q=" + std::to_string(q));
        }
    }

    { // 6. Bolker round-trip and normal matrix
        Criterion c(6, "Bolker inversion round-trip; normal matrix (q^2+q)I + J");
        for (int q : {2, 3, 4, 5}) {
            const Geometry& g = geom(q);
            Rng rng(600 + (uint64_t)q);
            bool ok = true;
            for (int trial = 0; trial < 100; ++trial) {
                PointFunction f = random_pf(g, rng);
                if (bolker_invert(g, xray_full(g, f)).values != f.values)
                    ok = false;
            }
            c.check(ok, "round-trip q=" + std::to_string(q));
        }
        for (int q : {2, 3, 4}) {
            const Geometry& g = geom(q);
            IntMatrix xm = xray_matrix_full(g);
            IntMatrix normal = xm.transposed() * xm;
            bool ok = true;
            for (int i = 0; i < g.num_points() && ok; ++i)
                for (int j = 0; j < g.num_points(); ++j)
                    if (normal.at(i, j) !=
                        (i == j ? (int64_t)q * q + q + 1 : 1)) {
                        ok = false;
                        break;
                    }
            c.check(ok, "normal matrix q=" + std::to_string(q));
        }
    }

    { // 7. Theorem 2 equivalence on random complexes
        Criterion c(7, "rank verdict == DRQ-support verdict (1000 @ q=2, 100 @ q=3)");
        struct Row {
            int q, samples;
        };
        for (auto [q, samples] : {Row{2, 1000}, Row{3, 100}}) {
            const Geometry& g = geom(q);
            auto basis = drq_span_basis(g, q == 2 ? drqs2 : drqs3);
            bool agree = true, nullities = true;
            for (int i = 0; i < samples; ++i) {
                LineComplex L = random_complex(g, (uint64_t)i);
                auto rank_verdict = is_admissible(g, L);
                auto support = supports_drq_combination(g, basis, L);
                if (rank_verdict.admissible != !support.combination.has_value())
                    agree = false;
                if (support.nullity != g.num_points() - rank_verdict.rank)
                    nullities = false;
            }
            c.check(agree, "verdicts agree q=" + std::to_string(q));
            c.check(nullities, "nullities match q=" + std::to_string(q));
        }
    }

    { // 8. constructive admissibility
        Criterion c(8, "greedy search + restricted inversion; embedded DRQs inadmissible");
        for (int q : {2, 3, 4}) {
            const Geometry& g = geom(q);
            for (uint64_t seed = 0; seed <= 20; ++seed) {
                LineComplex L = search_admissible(g, seed);
                auto v = is_admissible(g, L);
                c.check(v.admissible, "search seed " + std::to_string(seed) +
                                          " q=" + std::to_string(q));
                Rng rng(800 + seed);
                for (int trial = 0; trial < 10; ++trial) {
                    PointFunction f = random_pf(g, rng);
                    if (invert_restricted(g, L, xray(g, f, L.lines)).values !=
                        f.values)
                        c.check(false, "restricted round-trip q=" +
                                           std::to_string(q));
                }
            }
        }
        for (size_t i = 0; i < drqs2.size(); ++i) {
            LineComplex L = embed_drq_complex(g2, drqs2[i], i);
            if (is_admissible(g2, L).admissible)
                c.check(false, "embedded DRQ admissible at q=2, index " +
                                   std::to_string(i));
        }
        Rng pick(42);
        for (int i = 0; i < 50; ++i) {
            const Drq& d = drqs3[pick.bounded(drqs3.size())];
            LineComplex L = embed_drq_complex(g3, d, (uint64_t)i);
            if (is_admissible(g3, L).admissible)
                c.check(false, "embedded DRQ admissible at q=3");
        }
    }

    { // 9. remark checks
        Criterion c(9, "DRQs per point (168 / 4212, 2*count = q^2 v); Gram spectrum");
        struct Row {
            int q;
            int64_t per_point;
        };
        for (auto [q, expected] : {Row{2, 168}, Row{3, 4212}}) {
            const Geometry& g = geom(q);
            auto pr = drqs_through_point(g, q == 2 ? drqs2 : drqs3);
            c.equal(expected, pr.per_point,
                    "DRQs per point q=" + std::to_string(q));
            c.check(mpz_class(2 * pr.per_point) == mpz_class(q) * q * pr.v,
                    "2*count = q^2*v at q=" + std::to_string(q));
        }
        for (int q : {2, 3}) {
            const Geometry& g = geom(q);
            auto sp = incidence_gram_spectrum(g); // asserts the constant eigenvector
            c.equal((int64_t)(q + 1) * (q * q + q + 1), sp.ev_constants.get_si(),
                    "constants eigenvalue q=" + std::to_string(q));
            c.check(sp.mult_projection > 0,
                    "eigenvalue (q+1)q present q=" + std::to_string(q));
            c.equal((int64_t)1, sp.mult_constants, "constants multiplicity");
            c.equal((int64_t)g.num_points() - 1, sp.mult_projection,
                    "projection multiplicity (P-1)");
            c.equal((int64_t)(g.num_lines() - g.num_points()), sp.mult_zero,
                    "zero multiplicity (L-P)");
            std::cout << "  note: q=" << q << " Gram multiplicities ("
                      << sp.mult_constants << ", " << sp.mult_projection << ", "
                      << sp.mult_zero
                      << "); the projection part has rank P-1, not L-1\n";
        }
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                                : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures == 0 ? 0 : 1;
}
