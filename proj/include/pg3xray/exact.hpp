#ifndef PG3XRAY_EXACT_HPP
#define PG3XRAY_EXACT_HPP

#include <gmpxx.h>

#include <vector>

#include "pg3xray/errors.hpp"

namespace pg3xray {

/// Dense matrix with arbitrary-precision integer entries.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<mpz_class> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

    mpz_class& at(int r, int c) { return a[(size_t)r * cols + c]; }
    const mpz_class& at(int r, int c) const { return a[(size_t)r * cols + c]; }

    static IntMatrix identity(int n);
    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    mpz_class trace() const;
};

using RatVector = std::vector<mpq_class>;
using RatMatrix = std::vector<RatVector>;

/// Rank over the rationals by fraction-free (Bareiss) elimination.
/// Pivots are chosen first-nonzero in column order; no magnitude heuristics.
int rank_exact(IntMatrix m);

/// Rank by ordinary rational Gaussian elimination. Independent route used
/// as an oracle against rank_exact; also the workhorse behind kernels.
int rank_rational(RatMatrix m);

/// Basis of the right null space of m over the rationals. Each returned
/// vector v satisfies m v = 0; the basis has cols - rank(m) elements.
std::vector<RatVector> kernel_basis(const IntMatrix& m);

/// Geometric multiplicity of lambda: cols - rank(m - lambda I).
int eigen_multiplicity(const IntMatrix& m, const mpz_class& lambda);

/// Reduce m to reduced row echelon form in place; returns (rank, pivot
/// columns in order). Pivots are restricted to the first pivot_limit
/// columns when nonnegative (for augmented systems).
std::pair<int, std::vector<int>> rref(RatMatrix& m, int pivot_limit = -1);

/// Solve the square full-rank system A x = rhs over the rationals.
/// Throws InconsistentData if A is singular.
RatVector solve_square(const IntMatrix& A, const RatVector& rhs);

/// Incremental row-space tracker: rows are inserted one at a time and
/// kept as a reduced echelon basis. Used for greedy rank selection.
class RowSpan {
public:
    explicit RowSpan(int width) : width_(width) {}

    /// True iff v was independent of the current span (rank grew).
    bool insert(RatVector v);
    /// Residual of v after reduction against the basis.
    RatVector reduce(RatVector v) const;
    bool contains(RatVector v) const;

    int rank() const { return (int)basis_.size(); }
    int width() const { return width_; }

private:
    int width_;
    std::vector<RatVector> basis_; // each with a leading 1 at pivot_[i]
    std::vector<int> pivot_;
};

} // namespace pg3xray

#endif
