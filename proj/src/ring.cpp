#include "dsc/ring.hpp"

#include <algorithm>
#include <cctype>

#include "dsc/error.hpp"

namespace dsc {

RingElement RingElement::zero(const FieldPtr& f) {
    return {FieldElement::zero(f), FieldElement::zero(f)};
}
RingElement RingElement::one(const FieldPtr& f) {
    return {FieldElement::one(f), FieldElement::zero(f)};
}
RingElement RingElement::v(const FieldPtr& f) {
    return {FieldElement::zero(f), FieldElement::one(f)};
}
RingElement RingElement::vprime(const FieldPtr& f) {
    return {FieldElement::one(f), -FieldElement::one(f)};
}

RingElement RingElement::operator*(const RingElement& o) const {
    auto [x0, x1] = crt_split(*this);
    auto [y0, y1] = crt_split(o);
    return crt_join(x0 * y0, x1 * y1);
}

std::string RingElement::str() const {
    if (b.is_zero()) return a.str();
    std::string vb = b.is_one() ? "v" : "v*" + b.str();
    if (a.is_zero()) return vb;
    return a.str() + " + " + vb;
}

std::pair<FieldElement, FieldElement> crt_split(const RingElement& x) {
    return {x.a + x.b, x.a};
}

RingElement crt_join(const FieldElement& c0, const FieldElement& c1) {
    return {c1, c0 - c1};
}

RingElement r_mul(const RingElement& x, const RingElement& y) { return x * y; }

RingElement r_theta(const RingElement& x, long long i) {
    return {x.a.frobenius(i), x.b.frobenius(i)};
}

bool r_is_unit(const RingElement& x) {
    auto [c0, c1] = crt_split(x);
    return !c0.is_zero() && !c1.is_zero();
}

RingElement r_inv(const RingElement& x) {
    auto [c0, c1] = crt_split(x);
    if (c0.is_zero() || c1.is_zero()) throw DivisionByZero("ring element " + x.str() + " is not a unit");
    return crt_join(c0.inv(), c1.inv());
}

RingElement parse_ring_element(const FieldPtr& f, std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty ring element");
    if (s.back() == '+') throw ParseError("bad ring element '" + std::string(text) + "'");
    RingElement out = RingElement::zero(f);
    std::size_t pos = 0;
    bool seen_a = false, seen_b = false;
    while (pos < s.size()) {
        std::size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        if (term.empty()) throw ParseError("bad ring element '" + std::string(text) + "'");
        if (term[0] == 'v') {
            if (seen_b) throw ParseError("repeated v term in '" + std::string(text) + "'");
            seen_b = true;
            if (term == "v") {
                out.b = FieldElement::one(f);
            } else if (term.size() > 2 && term[1] == '*') {
                out.b = parse_element(f, term.substr(2));
            } else {
                throw ParseError("bad v term '" + term + "'");
            }
        } else {
            if (seen_a) throw ParseError("repeated constant term in '" + std::string(text) + "'");
            seen_a = true;
            out.a = parse_element(f, term);
        }
    }
    return out;
}

}  // namespace dsc
