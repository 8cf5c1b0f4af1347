#ifndef PG3XRAY_DRQ_HPP
#define PG3XRAY_DRQ_HPP

#include <array>
#include <functional>
#include <vector>

#include "pg3xray/pg3.hpp"

namespace pg3xray {

/// Three pairwise skew lines.
struct Triad {
    std::array<int, 3> lines;
};

/// A doubly ruled quadric as a signed pair of rulings. Each ruling is a
/// sorted list of q+1 line indices; every m-line meets every n-line, lines
/// within a ruling are pairwise skew, and both rulings cover the same
/// (q+1)^2 points. ruling_m is the ruling whose sorted index list is
/// lexicographically smaller.
struct Drq {
    std::vector<int> ruling_m;
    std::vector<int> ruling_n;

    friend bool operator==(const Drq&, const Drq&) = default;

    /// Sorted indices of the (q+1)^2 points covered by the quadric.
    std::vector<int> point_set(const Geometry& g) const;
};

/// Number of lines skew to both of two given skew lines: q(q+1)(q-1)^2.
int64_t count_triad_extensions(const Geometry& g, int l1, int l2);

/// The q+1 common transversals of a triad: for each point p of the first
/// line, the unique line through p meeting the other two.
std::vector<int> transversals(const Geometry& g, const Triad& t);

/// Unique extension of a triad to a DRQ: the transversal family is one
/// ruling, the transversals of any three of them the other.
Drq extend_triad(const Geometry& g, const Triad& t);

/// Streams every DRQ exactly once (canonical dedup; no DRQ set is
/// materialized). With threads > 1 the sink is called concurrently, with
/// a distinct thread_id per worker; the set of emitted DRQs is independent
/// of the thread count.
void enumerate_drqs(const Geometry& g,
                    const std::function<void(int thread_id, const Drq&)>& sink,
                    int threads = 1);

std::vector<Drq> enumerate_drqs(const Geometry& g, int threads = 1);

/// Closed-form DRQ count (q^2+1)(q^2+q+1)q^4(q-1)/2.
int64_t drq_count_formula(int64_t q);

/// Signed incidence vector of a DRQ: +1 on ruling_m, -1 on ruling_n.
std::vector<int64_t> drq_vector(const Drq& d, int total_lines);

/// Coefficients of a nonzero quadratic form vanishing exactly on the
/// DRQ's (q+1)^2 points. Monomial order:
/// x0^2, x0x1, x0x2, x0x3, x1^2, x1x2, x1x3, x2^2, x2x3, x3^2.
std::array<int, 10> quadric_fit(const Geometry& g, const Drq& d);

} // namespace pg3xray

#endif
