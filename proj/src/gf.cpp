#include "pg3xray/gf.hpp"

#include <algorithm>
#include <cstdint>

namespace pg3xray {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (int64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Polynomials over GF(p) as coefficient vectors, low degree first,
// trailing zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    // m monic
    trim(a);
    while (a.size() >= m.size()) {
        int lead = a.back();
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            int& c = a[shift + i];
            c = ((c - lead * m[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

// Trial division by every monic polynomial of degree 1..deg(m)/2.
bool is_irreducible(const Poly& m, int p) {
    int k = (int)m.size() - 1;
    for (int d = 1; 2 * d <= k; ++d) {
        int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int64_t code = 0; code < count; ++code) {
            Poly div(d + 1, 0);
            div[d] = 1;
            int64_t c = code;
            for (int i = 0; i < d; ++i) {
                div[i] = (int)(c % p);
                c /= p;
            }
            if (poly_mod(m, div, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

Field Field::make(int p, int k) {
    if (!is_prime(p)) throw NotPrime();
    if (k < 1) throw DegreeZero();

    Field f;
    f.p_ = p;
    f.k_ = k;
    int64_t q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (q > 4096) throw BudgetExceeded("field order exceeds table budget");
    f.q_ = (int)q;

    if (k == 1) {
        f.modulus_ = {0, 1};
    } else {
        // Smallest monic irreducible in lex order of the low-to-high
        // coefficient tuple (c0, c1, ..., c_{k-1}).
        bool found = false;
        std::vector<int> low(k, 0);
        while (!found) {
            Poly m(low);
            m.push_back(1);
            if (is_irreducible(m, p)) {
                f.modulus_ = m;
                found = true;
                break;
            }
            // next tuple in lex order: increment from the last position
            int i = k - 1;
            while (i >= 0 && low[i] == p - 1) low[i--] = 0;
            if (i < 0) break;
            ++low[i];
        }
        if (!found) throw Error("no irreducible modulus found");
    }

    f.build_tables();
    return f;
}

std::vector<int> Field::coeffs(int code) const {
    std::vector<int> c(k_);
    for (int i = 0; i < k_; ++i) {
        c[i] = code % p_;
        code /= p_;
    }
    return c;
}

int Field::code(const std::vector<int>& coeffs) const {
    int c = 0;
    for (int i = (int)coeffs.size() - 1; i >= 0; --i)
        c = c * p_ + (((coeffs[i] % p_) + p_) % p_);
    return c;
}

void Field::build_tables() {
    add_.assign((size_t)q_ * q_, 0);
    mul_.assign((size_t)q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    for (int a = 0; a < q_; ++a) {
        auto ca = coeffs(a);
        std::vector<int> nc(k_);
        for (int i = 0; i < k_; ++i) nc[i] = (p_ - ca[i]) % p_;
        neg_[a] = code(nc);
        for (int b = 0; b < q_; ++b) {
            auto cb = coeffs(b);
            std::vector<int> s(k_);
            for (int i = 0; i < k_; ++i) s[i] = (ca[i] + cb[i]) % p_;
            add_[(size_t)a * q_ + b] = code(s);

            Poly prod = poly_mul(ca, cb, p_);
            Poly red = poly_mod(std::move(prod), modulus_, p_);
            red.resize(k_, 0);
            mul_[(size_t)a * q_ + b] = code(red);
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[(size_t)a * q_ + b] == 1) {
                inv_[a] = b;
                break;
            }
}

} // namespace pg3xray
