#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsc/field.hpp"
#include "dsc/ring.hpp"

namespace dsc {

// Polynomial in F_q[x; theta_i], multiplication (a x^m)(b x^n) = a theta_i^m(b) x^(m+n).
// Coefficients are stored as field logs, ascending in degree, with no
// trailing zeros. The zero polynomial has degree -1.
class SkewPoly {
public:
    SkewPoly() = default;
    SkewPoly(FieldPtr f, int i, std::vector<int> logs);

    static SkewPoly zero(const FieldPtr& f, int i) { return SkewPoly(f, i, {}); }
    static SkewPoly one(const FieldPtr& f, int i) { return SkewPoly(f, i, {0}); }
    static SkewPoly monomial(const FieldPtr& f, int i, int coeff_log, int degree);
    // x^n - 1
    static SkewPoly xn_minus_one(const FieldPtr& f, int i, int n);
    static SkewPoly from_elements(const FieldPtr& f, int i, const std::vector<FieldElement>& c);

    const FieldPtr& field() const { return f_; }
    int auto_index() const { return i_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    int coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : GaloisField::ZERO;
    }
    FieldElement coefficient(int k) const { return {f_.get(), coeff(k)}; }
    const std::vector<int>& logs() const { return c_; }
    int lead() const { return c_.empty() ? GaloisField::ZERO : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 0; }
    // theta_i^k applied to a single coefficient log
    int twist(int c, long long k) const { return f_->frob(c, static_cast<long long>(i_) * k); }

    SkewPoly operator+(const SkewPoly& o) const;
    SkewPoly operator-(const SkewPoly& o) const;
    SkewPoly operator-() const;
    SkewPoly operator*(const SkewPoly& o) const;
    bool operator==(const SkewPoly& o) const { return c_ == o.c_ && i_ == o.i_; }
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }
    // c * f for a constant c (given as a log)
    SkewPoly scale_left(int c) const;

    std::string str() const;

private:
    void check_compatible(const SkewPoly& o) const;
    void trim();

    FieldPtr f_;
    int i_ = 0;
    std::vector<int> c_;
};

SkewPoly s_mul(const SkewPoly& f, const SkewPoly& g);
// g = quot * f + rem with deg rem < deg f
std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& g, const SkewPoly& f);
bool is_right_divisor(const SkewPoly& f, const SkewPoly& g);
// Left-divides by a scalar so the leading coefficient is 1.
SkewPoly monic(const SkewPoly& f);
SkewPoly right_gcd(const SkewPoly& f, const SkewPoly& g);
SkewPoly right_lcm(const SkewPoly& f, const SkewPoly& g);
// sum_j theta^j(a_{d-j}) x^j
SkewPoly reciprocal_star(const SkewPoly& f);
// theta_i applied k times to every coefficient; k may be negative.
SkewPoly theta_map(const SkewPoly& f, long long k);
// Image in the left module F_q[x;theta]/F_q[x;theta](x^n - 1): exponents wrap mod n.
SkewPoly reduce_mod_xn(const SkewPoly& f, int n);
// x^k * f reduced mod x^n - 1
SkewPoly shift_mod_xn(const SkewPoly& f, int k, int n);

// Grammar: terms joined by + or -, each term [coef][*]x[^k] or coef, with
// coef in the field token grammar. Whitespace is ignored.
SkewPoly parse_poly(const FieldPtr& f, int i, std::string_view text);

struct DivisorSearchOptions {
    double budget = 1e8;    // maximum number of candidate trials
    unsigned workers = 0;   // 0 = hardware concurrency
};

// Every monic degree-d f with f |_r x^n - 1, in increasing candidate order.
std::vector<SkewPoly> right_divisors_search(int n, int d, const FieldPtr& f, int i,
                                            const DivisorSearchOptions& opt = {});

// Skew polynomial over R stored by its CRT components: f = f_v v + f_v' v'.
struct RingSkewPoly {
    SkewPoly v;
    SkewPoly vp;

    static RingSkewPoly zero(const FieldPtr& f, int i) {
        return {SkewPoly::zero(f, i), SkewPoly::zero(f, i)};
    }
    static RingSkewPoly one(const FieldPtr& f, int i) {
        return {SkewPoly::one(f, i), SkewPoly::one(f, i)};
    }
    const FieldPtr& field() const { return v.field(); }
    int degree() const { return std::max(v.degree(), vp.degree()); }
    bool is_zero() const { return v.is_zero() && vp.is_zero(); }
    RingElement coefficient(int k) const;
    bool lead_is_unit() const { return !is_zero() && v.degree() == vp.degree(); }
    bool is_monic() const { return v.is_monic() && vp.is_monic() && v.degree() == vp.degree(); }
    bool operator==(const RingSkewPoly& o) const { return v == o.v && vp == o.vp; }
    bool operator!=(const RingSkewPoly& o) const { return !(*this == o); }
    RingSkewPoly operator+(const RingSkewPoly& o) const { return {v + o.v, vp + o.vp}; }
    RingSkewPoly operator-(const RingSkewPoly& o) const { return {v - o.v, vp - o.vp}; }
    RingSkewPoly operator*(const RingSkewPoly& o) const { return {v * o.v, vp * o.vp}; }
    std::string str() const;
};

RingSkewPoly ring_poly_from_coeffs(const FieldPtr& f, int i, const std::vector<RingElement>& c);
std::pair<SkewPoly, SkewPoly> decompose(const RingSkewPoly& f);
RingSkewPoly compose(const SkewPoly& fv, const SkewPoly& fvp);

RingSkewPoly s_mul(const RingSkewPoly& f, const RingSkewPoly& g);
// Requires a unit leading coefficient on f.
std::pair<RingSkewPoly, RingSkewPoly> right_divmod(const RingSkewPoly& g, const RingSkewPoly& f);
// Checked per CRT component; each component of f must be nonzero.
bool is_right_divisor(const RingSkewPoly& f, const RingSkewPoly& g);
// v * gcd(f_v, g_v) + v' * gcd(f_v', g_v'); a component where both inputs vanish stays zero.
RingSkewPoly right_gcd(const RingSkewPoly& f, const RingSkewPoly& g);
RingSkewPoly right_lcm(const RingSkewPoly& f, const RingSkewPoly& g);
// Componentwise reciprocal, each component reversed about its own degree.
RingSkewPoly reciprocal_star(const RingSkewPoly& f);
RingSkewPoly theta_map(const RingSkewPoly& f, long long k);

}  // namespace dsc
