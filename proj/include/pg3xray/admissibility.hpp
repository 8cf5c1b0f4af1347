#ifndef PG3XRAY_ADMISSIBILITY_HPP
#define PG3XRAY_ADMISSIBILITY_HPP

#include <optional>

#include "pg3xray/cavalieri.hpp"
#include "pg3xray/transform.hpp"

namespace pg3xray {

/// A set of exactly as many lines as there are points, sorted by index.
struct LineComplex {
    std::vector<int> lines;
};

struct AdmissibilityVerdict {
    bool admissible;
    int64_t rank; // rank of the restricted transform matrix
    /// When inadmissible: a nonzero rational vector g on L (indexed like
    /// L) with sum_{l in L, l through x} g(l) = 0 for every point x.
    RatVector certificate;
};

/// Decides admissibility by the exact rank of the |L| x P transform
/// matrix; on failure the certificate is a transpose-kernel vector.
AdmissibilityVerdict is_admissible(const Geometry& g, const LineComplex& L);

struct SupportResult {
    /// A nonzero element of span(DRQ vectors) supported inside L, full
    /// length (one entry per line of the geometry); empty when the
    /// intersection is trivial.
    std::optional<RatVector> combination;
    int64_t nullity; // dim of span(DRQs) /\ {vectors supported in L}
};

/// Intersects the DRQ span with the coordinate subspace of vectors
/// vanishing outside L. basis comes from drq_span_basis().
SupportResult supports_drq_combination(
    const Geometry& g, const std::vector<std::vector<int64_t>>& basis,
    const LineComplex& L);

/// Solves the square rational system T_L f = rf exactly.
PointFunction invert_restricted(const Geometry& g, const LineComplex& L,
                                const LineFunction& rf);

/// Greedy matroid construction: scan lines in seed-shuffled order, keep a
/// line iff it grows the rank of the accumulated row set, stop at rank P.
LineComplex search_admissible(const Geometry& g, uint64_t seed);

/// Uniformly random P-subset of the lines.
LineComplex random_complex(const Geometry& g, uint64_t seed);

/// All 2(q+1) lines of a DRQ padded with seed-chosen other lines to size
/// P; inadmissible by construction.
LineComplex embed_drq_complex(const Geometry& g, const Drq& d, uint64_t seed);

} // namespace pg3xray

#endif
