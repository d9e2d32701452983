#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dsc {

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

// GF(p^m) in log form. An element is an exponent e in [0, q-2] meaning t^e,
// or ZERO. t is the residue class of x modulo the defining polynomial and is
// checked to be primitive when the field is built.
class GaloisField {
public:
    static constexpr int ZERO = -1;

    // modulus: ascending coefficients of a monic degree-m polynomial over GF(p).
    static FieldPtr make(int p, int m, std::vector<int> modulus);
    // Uses the Conway polynomial for (p, m); throws when none is shipped.
    static FieldPtr make_default(int p, int m);
    static FieldPtr from_order(int q);
    static std::optional<std::vector<int>> conway_modulus(int p, int m);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    int order() const { return q_ - 1; }  // multiplicative group order
    bool even() const { return p_ == 2; }
    const std::vector<int>& modulus() const { return modulus_; }
    std::string label() const;
    std::string modulus_string() const;
    bool same_as(const GaloisField& o) const {
        return this == &o || (p_ == o.p_ && modulus_ == o.modulus_);
    }

    int add(int a, int b) const {
        if (a < 0) return b;
        if (b < 0) return a;
        int d = b - a;
        if (d < 0) d += ord_;
        int z = zech_[d];
        if (z < 0) return ZERO;
        int r = a + z;
        return r >= ord_ ? r - ord_ : r;
    }
    int neg(int a) const {
        if (a < 0 || p_ == 2) return a;
        int r = a + ord_ / 2;
        return r >= ord_ ? r - ord_ : r;
    }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const {
        if (a < 0 || b < 0) return ZERO;
        int r = a + b;
        return r >= ord_ ? r - ord_ : r;
    }
    int inv(int a) const;
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, long long e) const;
    // a^(p^k); k is reduced mod m and may be negative.
    int frob(int a, long long k) const {
        if (a <= 0) return a;
        long long kk = ((k % m_) + m_) % m_;
        return static_cast<int>(static_cast<long long>(a) * ppow_[kk] % ord_);
    }

    // Image of the integer c (c mod p) in the prime subfield.
    int from_int(long long c) const;
    std::vector<int> to_vector(int a) const;
    int from_vector(const std::vector<int>& v) const;
    // Base-p integer encoding of the coefficient vector, in [0, q).
    int to_symbol(int a) const { return a < 0 ? 0 : exp_sym_[a]; }
    int from_symbol(int s) const { return log_sym_[s]; }

    int parse(std::string_view token) const;
    std::string format(int a) const;

private:
    GaloisField() = default;

    int p_ = 0, m_ = 0, q_ = 0, ord_ = 0;
    std::vector<int> modulus_;
    std::vector<int> zech_;
    std::vector<int> exp_sym_;
    std::vector<int> log_sym_;
    std::vector<long long> ppow_;  // p^k mod (q-1)
};

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const GaloisField* f, int log) : f_(f), log_(log) {}

    static FieldElement zero(const FieldPtr& f) { return {f.get(), GaloisField::ZERO}; }
    static FieldElement one(const FieldPtr& f) { return {f.get(), 0}; }
    static FieldElement t_pow(const FieldPtr& f, long long e);

    const GaloisField& field() const { return *f_; }
    const GaloisField* field_ptr() const { return f_; }
    int log() const { return log_; }
    bool is_zero() const { return log_ < 0; }
    bool is_one() const { return log_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const { return {f_, f_->neg(log_)}; }
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement inv() const { return {f_, f_->inv(log_)}; }
    FieldElement frobenius(long long i) const { return {f_, f_->frob(log_, i)}; }
    std::vector<int> to_vector() const { return f_->to_vector(log_); }
    std::string str() const { return f_->format(log_); }

private:
    void check_same(const FieldElement& o) const;

    const GaloisField* f_ = nullptr;
    int log_ = GaloisField::ZERO;
};

FieldElement ff_mul(const FieldElement& a, const FieldElement& b);
FieldElement ff_inv(const FieldElement& a);
FieldElement frobenius(const FieldElement& a, long long i);
FieldElement parse_element(const FieldPtr& f, std::string_view token);

}  // namespace dsc
