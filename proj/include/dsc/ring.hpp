#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "dsc/field.hpp"

namespace dsc {

// a + v*b in R = F_q + vF_q with v^2 = v.
struct RingElement {
    FieldElement a;
    FieldElement b;

    static RingElement zero(const FieldPtr& f);
    static RingElement one(const FieldPtr& f);
    static RingElement v(const FieldPtr& f);
    static RingElement vprime(const FieldPtr& f);  // 1 - v

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    RingElement operator+(const RingElement& o) const { return {a + o.a, b + o.b}; }
    RingElement operator-(const RingElement& o) const { return {a - o.a, b - o.b}; }
    RingElement operator-() const { return {-a, -b}; }
    RingElement operator*(const RingElement& o) const;
    bool operator==(const RingElement& o) const { return a == o.a && b == o.b; }
    bool operator!=(const RingElement& o) const { return !(*this == o); }
    std::string str() const;
};

// (a0', a1') = (a + b, a)
std::pair<FieldElement, FieldElement> crt_split(const RingElement& x);
RingElement crt_join(const FieldElement& c0, const FieldElement& c1);
RingElement r_mul(const RingElement& x, const RingElement& y);
RingElement r_theta(const RingElement& x, long long i);
bool r_is_unit(const RingElement& x);
RingElement r_inv(const RingElement& x);
// Accepts "a + v*b", "a", "v*b", "v".
RingElement parse_ring_element(const FieldPtr& f, std::string_view text);

}  // namespace dsc
