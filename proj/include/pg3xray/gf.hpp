#ifndef PG3XRAY_GF_HPP
#define PG3XRAY_GF_HPP

#include <memory>
#include <vector>

#include "pg3xray/errors.hpp"

namespace pg3xray {

/// Arithmetic in GF(p^k). Elements are integer codes in [0, q): the code of
/// an element with polynomial coefficients (c0, c1, ..., c_{k-1}) over GF(p)
/// is sum c_i p^i. Arithmetic is table-driven; the tables are built once at
/// construction from the canonical modulus (the lexicographically smallest
/// monic irreducible of degree k, coefficients compared low degree first).
class Field {
public:
    static Field make(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }

    /// Modulus coefficients, low degree first, length k+1, leading entry 1.
    /// For k = 1 this is {0, 1}, i.e. the placeholder x.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const {
        if (a == 0) throw DivisionByZero();
        return inv_[a];
    }
    int div(int a, int b) const { return mul(a, inv(b)); }

    std::vector<int> coeffs(int code) const;
    int code(const std::vector<int>& coeffs) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }

private:
    Field() = default;
    void build_tables();

    int p_ = 0, k_ = 0, q_ = 0;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, inv_;
};

/// Checked element wrapper; the table-driven code interface above is the
/// fast path used by geometry construction.
struct FieldElement {
    const Field* field = nullptr;
    int code = 0;

    FieldElement() = default;
    FieldElement(const Field& f, int c) : field(&f), code(c) {}

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        check(a, b);
        return {*a.field, a.field->add(a.code, b.code)};
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        check(a, b);
        return {*a.field, a.field->sub(a.code, b.code)};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        check(a, b);
        return {*a.field, a.field->mul(a.code, b.code)};
    }
    friend FieldElement operator/(FieldElement a, FieldElement b) {
        check(a, b);
        return {*a.field, a.field->div(a.code, b.code)};
    }
    FieldElement inverse() const { return {*field, field->inv(code)}; }
    friend bool operator==(FieldElement a, FieldElement b) {
        check(a, b);
        return a.code == b.code;
    }

private:
    static void check(const FieldElement& a, const FieldElement& b) {
        if (!a.field || !b.field || !(*a.field == *b.field))
            throw FieldMismatch();
    }
};

bool is_prime(int n);

} // namespace pg3xray

#endif
