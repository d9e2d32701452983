#include <doctest.h>

#include "dsc/error.hpp"
#include "dsc/ring.hpp"

using namespace dsc;

namespace {

std::vector<RingElement> all_elements(const FieldPtr& f) {
    std::vector<RingElement> out;
    for (int a = -1; a < f->q() - 1; ++a)
        for (int b = -1; b < f->q() - 1; ++b) out.push_back({{f.get(), a}, {f.get(), b}});
    return out;
}

}  // namespace

TEST_CASE("v is idempotent and v v' = 0") {
    FieldPtr f = GaloisField::from_order(9);
    RingElement v = RingElement::v(f), vp = RingElement::vprime(f);
    CHECK(v * v == v);
    CHECK(vp * vp == vp);
    CHECK((v * vp).is_zero());
    CHECK(v + vp == RingElement::one(f));
}

TEST_CASE("multiplication: (a + vb)(c + vd) = ac + v(ad + bc + bd)") {
    for (int q : {4, 9}) {
        FieldPtr f = GaloisField::from_order(q);
        auto all = all_elements(f);
        for (const auto& x : all)
            for (const auto& y : all) {
                RingElement want{x.a * y.a, x.a * y.b + x.b * y.a + x.b * y.b};
                REQUIRE(r_mul(x, y) == want);
            }
    }
}

TEST_CASE("CRT split and join") {
    FieldPtr f = GaloisField::from_order(27);
    for (const auto& x : all_elements(f)) {
        auto [c0, c1] = crt_split(x);
        CHECK(c0 == x.a + x.b);
        CHECK(c1 == x.a);
        CHECK(crt_join(c0, c1) == x);
    }
    auto [v0, v1] = crt_split(RingElement::v(f));
    CHECK(v0.is_one());
    CHECK(v1.is_zero());
}

TEST_CASE("units are the elements with both components nonzero") {
    FieldPtr f = GaloisField::from_order(4);
    int units = 0;
    for (const auto& x : all_elements(f)) {
        auto [c0, c1] = crt_split(x);
        bool u = !c0.is_zero() && !c1.is_zero();
        CHECK(r_is_unit(x) == u);
        if (u) {
            ++units;
            CHECK(r_mul(x, r_inv(x)) == RingElement::one(f));
        } else {
            CHECK_THROWS_AS(r_inv(x), DivisionByZero);
        }
    }
    CHECK(units == 9);
}

TEST_CASE("theta acts on both parts and is a ring automorphism") {
    FieldPtr f = GaloisField::from_order(9);
    auto all = all_elements(f);
    for (const auto& x : all) {
        CHECK(r_theta(x, 1) == RingElement{x.a.frobenius(1), x.b.frobenius(1)});
        CHECK(r_theta(x, 2) == x);
        for (std::size_t k = 0; k < all.size(); k += 7) {
            const auto& y = all[k];
            CHECK(r_theta(x * y, 1) == r_theta(x, 1) * r_theta(y, 1));
            CHECK(r_theta(x + y, 1) == r_theta(x, 1) + r_theta(y, 1));
        }
    }
}

TEST_CASE("ring element text") {
    FieldPtr f = GaloisField::from_order(27);
    RingElement x = parse_ring_element(f, "t^3 + v*t^5");
    CHECK(x.a == FieldElement::t_pow(f, 3));
    CHECK(x.b == FieldElement::t_pow(f, 5));
    CHECK(parse_ring_element(f, "v") == RingElement::v(f));
    CHECK(parse_ring_element(f, "2") == RingElement{parse_element(f, "2"), FieldElement::zero(f)});
    CHECK(parse_ring_element(f, x.str()) == x);
    CHECK_THROWS_AS(parse_ring_element(f, "t^3 +"), ParseError);
}
