#ifndef PG3XRAY_CAVALIERI_HPP
#define PG3XRAY_CAVALIERI_HPP

#include <optional>

#include "pg3xray/drq.hpp"
#include "pg3xray/exact.hpp"
#include "pg3xray/pg3.hpp"

namespace pg3xray {

/// Closed-form entries of the Cavalieri matrix B = A A^t, by line relation,
/// plus the projection scale v.
struct CavalieriEntries {
    mpz_class b_equal; // q^4(q^2-1)
    mpz_class b_meet;  // -q^3(q-1)
    mpz_class b_skew;  // q(q^2-1)
    mpz_class v;       // q^2(q-1)(q+1)(q^2+q+1)

    static CavalieriEntries for_q(int64_t q);
};

/// B built directly from the entry table: symmetric, lines x lines.
IntMatrix cavalieri_from_formula(const Geometry& g);

/// B accumulated as A A^t over the streamed DRQ enumeration (one signed
/// rank-1 update per DRQ). Throws IncompleteEnumeration if the DRQ count
/// does not match the closed-form census.
IntMatrix cavalieri_from_drqs(const Geometry& g, int threads = 1,
                              int64_t* out_count = nullptr);

struct ProjectionReport {
    mpz_class v;
    mpz_class c_equal, c_meet, c_skew; // the three distinct entries of B^2
};

/// Checks B^2 = vB entrywise and returns v plus the distinct B^2 entries.
/// Throws NotIdempotent at the first violating entry.
ProjectionReport verify_scaled_projection(const Geometry& g, const IntMatrix& b);

struct RankReport {
    int64_t trace_rank;             // trace(B)/v
    std::optional<int64_t> elim_rank; // fraction-free elimination, optional
};

/// Rank of B via trace(B)/v and (unless skipped) exact elimination.
/// Asserts both routes agree and equal q^4+q^2.
RankReport cavalieri_rank(const Geometry& g, const IntMatrix& b,
                          bool run_elimination = true);

struct SpanKernelReport {
    int64_t span_dim;    // dim of the span of DRQ vectors
    int64_t kernel_dim;  // dim ker of the dual transform matrix
    int64_t annihilated; // DRQ vectors mapped to zero by the dual transform
    int64_t total_drqs;
};

/// The pivotal equality: span(DRQ vectors) = ker(dual transform), shown by
/// mutual containment (every DRQ vector annihilated) plus equal dimensions
/// q^4+q^2.
SpanKernelReport drq_span_equals_dual_kernel(const Geometry& g,
                                             const std::vector<Drq>& drqs);

/// A maximal linearly independent subset of the signed DRQ vectors
/// (a basis of the Cavalieri-condition space, dimension q^4+q^2).
std::vector<std::vector<int64_t>> drq_span_basis(const Geometry& g,
                                                 const std::vector<Drq>& drqs);

struct PointDrqReport {
    int64_t per_point; // DRQs through each point (uniform)
    mpz_class v;
    mpq_class ratio_to_v; // per_point / v
};

/// Counts DRQs through each point, asserts uniformity, and reports the
/// count together with its ratio to v (2 * count = q^2 * v holds).
PointDrqReport drqs_through_point(const Geometry& g,
                                  const std::vector<Drq>& drqs);

struct GramSpectrumReport {
    // Gram matrix of the point-line incidence: entries q+1, 1, 0 for
    // line relations =, x, ||.
    mpz_class ev_constants; // (q+1)(q^2+q+1), eigenvalue of the all-ones vector
    mpz_class ev_projection; // (q+1)q
    int64_t mult_constants, mult_projection, mult_zero;
};

/// Geometric multiplicities of the candidate eigenvalues of the
/// symmetrized incidence matrix; also verifies the constant vector is an
/// eigenvector with eigenvalue (q+1)(q^2+q+1).
GramSpectrumReport incidence_gram_spectrum(const Geometry& g);

/// The symmetrized incidence Gram matrix itself.
IntMatrix incidence_gram(const Geometry& g);

} // namespace pg3xray

#endif
