#include "pg3xray/exact.hpp"

#include <algorithm>

namespace pg3xray {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols != o.rows) throw LengthMismatch("matrix product shape");
    IntMatrix r(rows, o.cols);
    mpz_class t;
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const mpz_class& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols; ++j) {
                t = aik * o.at(k, j);
                r.at(i, j) += t;
            }
        }
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows != o.rows || cols != o.cols)
        throw LengthMismatch("matrix difference shape");
    IntMatrix r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
    return r;
}

mpz_class IntMatrix::trace() const {
    if (rows != cols) throw NotSquare();
    mpz_class t = 0;
    for (int i = 0; i < rows; ++i) t += at(i, i);
    return t;
}

int rank_exact(IntMatrix m) {
    const int n = m.rows, c = m.cols;
    mpz_class prev = 1, t1, t2;
    int rank = 0;
    for (int col = 0; col < c && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = col; j < c; ++j) std::swap(m.at(piv, j), m.at(rank, j));

        const int pr = rank;
        for (int r = rank + 1; r < n; ++r) {
            // Bareiss step: exact division by the previous pivot.
            for (int j = col + 1; j < c; ++j) {
                t1 = m.at(r, j) * m.at(pr, col);
                t2 = m.at(r, col) * m.at(pr, j);
                t1 -= t2;
                mpz_divexact(m.at(r, j).get_mpz_t(), t1.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m.at(r, col) = 0;
        }
        prev = m.at(pr, col);
        ++rank;
    }
    return rank;
}

std::pair<int, std::vector<int>> rref(RatMatrix& m, int pivot_limit) {
    if (m.empty()) return {0, {}};
    const int n = (int)m.size(), c = (int)m[0].size();
    const int pivot_cols = pivot_limit < 0 ? c : pivot_limit;
    std::vector<int> pivots;
    int rank = 0;
    for (int col = 0; col < pivot_cols && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        mpq_class inv = 1 / m[rank][col];
        for (int j = col; j < c; ++j) m[rank][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            mpq_class f = m[r][col];
            for (int j = col; j < c; ++j) m[r][j] -= f * m[rank][j];
        }
        pivots.push_back(col);
        ++rank;
    }
    return {rank, pivots};
}

int rank_rational(RatMatrix m) { return rref(m).first; }

std::vector<RatVector> kernel_basis(const IntMatrix& m) {
    RatMatrix r(m.rows, RatVector(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[i][j] = m.at(i, j);
    auto [rank, pivots] = rref(r);

    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<RatVector> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(m.cols, 0);
        v[free] = 1;
        for (int i = 0; i < rank; ++i) v[pivots[i]] = -r[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

int eigen_multiplicity(const IntMatrix& m, const mpz_class& lambda) {
    if (m.rows != m.cols) throw NotSquare();
    IntMatrix shifted = m;
    for (int i = 0; i < m.rows; ++i) shifted.at(i, i) -= lambda;
    return m.cols - rank_exact(std::move(shifted));
}

RatVector solve_square(const IntMatrix& A, const RatVector& rhs) {
    if (A.rows != A.cols) throw NotSquare();
    if ((int)rhs.size() != A.rows) throw LengthMismatch("solve rhs length");
    const int n = A.rows;
    RatMatrix m(n, RatVector(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = A.at(i, j);
        m[i][n] = rhs[i];
    }
    auto [rank, pivots] = rref(m, n);
    if (rank != n) throw InconsistentData("singular system");
    RatVector x(n);
    for (int i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

bool RowSpan::insert(RatVector v) {
    v = reduce(std::move(v));
    int lead = -1;
    for (int j = 0; j < width_; ++j)
        if (v[j] != 0) {
            lead = j;
            break;
        }
    if (lead < 0) return false;
    mpq_class inv = 1 / v[lead];
    for (int j = lead; j < width_; ++j) v[j] *= inv;
    // keep existing basis reduced against the new row
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i][lead] == 0) continue;
        mpq_class f = basis_[i][lead];
        for (int j = lead; j < width_; ++j) basis_[i][j] -= f * v[j];
    }
    basis_.push_back(std::move(v));
    pivot_.push_back(lead);
    return true;
}

RatVector RowSpan::reduce(RatVector v) const {
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (v[pivot_[i]] == 0) continue;
        mpq_class f = v[pivot_[i]];
        for (int j = pivot_[i]; j < width_; ++j) v[j] -= f * basis_[i][j];
    }
    return v;
}

bool RowSpan::contains(RatVector v) const {
    v = reduce(std::move(v));
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace pg3xray
