// Small worked values, one or two per operation.

#include <doctest.h>

#include "dsc/distance.hpp"
#include "dsc/double_code.hpp"
#include "dsc/dual.hpp"
#include "dsc/linear_code.hpp"
#include "support.hpp"

using namespace dsc;

namespace {

SkewPoly P(const FieldPtr& f, const char* s, int i = 1) { return parse_poly(f, i, s); }
FieldElement T(const FieldPtr& f, int e) { return FieldElement::t_pow(f, e); }

}  // namespace

TEST_CASE("field values") {
    FieldPtr f4 = GaloisField::from_order(4), f16 = GaloisField::from_order(16), f27 = GaloisField::from_order(27);
    CHECK((T(f4, 1) * T(f4, 2)).is_one());
    CHECK((T(f16, 5) * FieldElement::zero(f16)).is_zero());
    CHECK((T(f27, 13) * T(f27, 13)).is_one());
    CHECK(T(f16, 5).inv() == T(f16, 10));
    CHECK(T(f27, 7).inv() == T(f27, 19));
    CHECK(FieldElement::one(f4).inv().is_one());
    CHECK(T(f27, 1).frobenius(1) == T(f27, 3));
    CHECK(FieldElement::one(f16).frobenius(1).is_one());
    CHECK(T(f16, 1).frobenius(4) == T(f16, 1));
    CHECK(parse_element(f27, "t^25") == T(f27, 25));
    CHECK(parse_element(f27, "2") == T(f27, 13));
    CHECK(parse_element(f27, "0").is_zero());
}

TEST_CASE("ring values") {
    FieldPtr f3 = GaloisField::from_order(3), f27 = GaloisField::from_order(27);
    RingElement one_v = parse_ring_element(f3, "1 + v");
    CHECK(one_v * one_v == RingElement::one(f3));
    auto [c0, c1] = crt_split(one_v);
    CHECK(c0 == parse_element(f3, "2"));
    CHECK(c1.is_one());
    CHECK(r_is_unit(one_v));
    CHECK_FALSE(r_is_unit(RingElement::v(f3)));
    CHECK(r_is_unit(RingElement::one(f3)));
    CHECK(r_theta(RingElement::v(f27), 1) == RingElement::v(f27));
    CHECK(r_theta(parse_ring_element(f27, "t + v*t^2"), 1) == parse_ring_element(f27, "t^3 + v*t^6"));
    FieldPtr f9 = GaloisField::from_order(9);
    for (int a = -1; a < 8; ++a)
        for (int b = -1; b < 8; ++b) {
            FieldElement x{f9.get(), a}, y{f9.get(), b};
            CHECK(r_theta(crt_join(x, y), 1) == crt_join(x.frobenius(1), y.frobenius(1)));
        }
}

TEST_CASE("skew polynomial values") {
    FieldPtr f4 = GaloisField::from_order(4), f16 = GaloisField::from_order(16), f27 = GaloisField::from_order(27);
    CHECK(P(f4, "x") * P(f4, "t") == P(f4, "t^2x"));
    CHECK(P(f4, "x + t^2") * P(f4, "x + t") == P(f4, "x^2 + 1"));
    auto [q, r] = right_divmod(P(f4, "x^2 + 1"), P(f4, "x + t"));
    CHECK(q == P(f4, "x + t^2"));
    CHECK(r.is_zero());
    auto [q2, r2] = right_divmod(P(f4, "x + 1"), P(f4, "x^2 + t"));
    CHECK(q2.is_zero());
    CHECK(r2 == P(f4, "x + 1"));

    SkewPoly g = P(f27, "x^3 + t^17x^2 + t^22x + t^25");
    auto [q3, r3] = right_divmod(SkewPoly::xn_minus_one(f27, 1, 6), g);
    CHECK(r3.is_zero());
    CHECK(q3 == P(f27, "x^3 + t^4x^2 + x + t^14"));
    CHECK(is_right_divisor(SkewPoly::one(f27, 1), g));
    CHECK(is_right_divisor(P(f16, "x^2 + t^6x + t^10"), SkewPoly::xn_minus_one(f16, 1, 8)));

    CHECK(right_gcd(P(f27, "t^5x + t"), SkewPoly::zero(f27, 1)) == P(f27, "x + t^22"));
    CHECK(right_gcd(g, g) == g);
    CHECK(right_lcm(P(f27, "t x + 1"), SkewPoly::one(f27, 1)) == monic(P(f27, "t x + 1")));
    CHECK(right_lcm(P(f27, "x + 1"), P(f27, "x^2 + t")).degree() == 3);

    CHECK(reciprocal_star(P(f27, "t^4")) == P(f27, "t^4"));
    CHECK(reciprocal_star(P(f27, "x + t^25")) == P(f27, "t^23x + 1"));
    CHECK(theta_map(P(f27, "x + t"), 3) == P(f27, "x + t"));
    CHECK(theta_map(P(f16, "x + t"), 1) == P(f16, "x + t^2"));
}

TEST_CASE("gcd with a skew cubic is the greatest common right divisor") {
    FieldPtr f = GaloisField::from_order(27);
    SkewPoly a = P(f, "x^3 + t^17x^2 + t^22x + t^25"), b = P(f, "x^2 + t^2x + t");
    SkewPoly g = right_gcd(a, b);
    CHECK(is_right_divisor(g, a));
    CHECK(is_right_divisor(g, b));
    // every monic common right divisor of degree <= deg g divides g
    for (int d = 0; d <= g.degree(); ++d) {
        std::vector<int> c(d + 1, 0);
        long long total = 1;
        for (int k = 0; k < d; ++k) total *= 27;
        for (long long code = 0; code < total; ++code) {
            long long x = code;
            for (int k = 0; k < d; ++k, x /= 27) c[k] = static_cast<int>(x % 27) - 1;
            SkewPoly cand(f, 1, c);
            if (is_right_divisor(cand, a) && is_right_divisor(cand, b)) CHECK(is_right_divisor(cand, g));
        }
    }
}

TEST_CASE("divisor search values") {
    FieldPtr f27 = GaloisField::from_order(27), f16 = GaloisField::from_order(16);
    auto has = [](const std::vector<SkewPoly>& v, const SkewPoly& p) {
        return std::find(v.begin(), v.end(), p) != v.end();
    };
    CHECK(right_divisors_search(3, 0, f27, 1) == std::vector<SkewPoly>{SkewPoly::one(f27, 1)});
    auto d1 = right_divisors_search(3, 1, f27, 1);
    CHECK(has(d1, P(f27, "x + t^25")));
    CHECK(has(d1, P(f27, "x + t^19")));
    auto d2 = right_divisors_search(8, 2, f16, 1);
    CHECK(has(d2, P(f16, "x^2 + t^6x + t^10")));
    CHECK(has(d2, P(f16, "x^2 + t^2x + t^9")));
    DivisorSearchOptions one;
    one.workers = 1;
    CHECK(right_divisors_search(8, 2, f16, 1, one) == d2);
}

TEST_CASE("double shift values") {
    FieldPtr f = GaloisField::from_order(4);
    auto E = [&](const char* s) { return parse_ring_element(f, s); };
    DoubleWord w{{E("t"), E("0")}, {E("1"), E("t^2")}};
    DoubleWord s = t_shift(w, 1);
    CHECK(s == DoubleWord{{E("0"), E("t^2")}, {E("t"), E("1")}});
    DoubleWord z{{E("0"), E("0")}, {E("0")}};
    CHECK(t_shift(z, 1) == z);

    std::mt19937_64 rng(61);
    FieldPtr f27 = GaloisField::from_order(27);
    for (int n = 0; n < 10; ++n) {
        DoubleWord x;
        for (int k = 0; k < 4; ++k)
            x.left.push_back({{f27.get(), oracle::random_log(*f27, rng)}, {f27.get(), oracle::random_log(*f27, rng)}});
        for (int k = 0; k < 6; ++k)
            x.right.push_back({{f27.get(), oracle::random_log(*f27, rng)}, {f27.get(), oracle::random_log(*f27, rng)}});
        DoubleWord y = x;
        for (int k = 0; k < 12 * 3; ++k) y = t_shift(y, 1);
        CHECK(y == x);
    }
}

TEST_CASE("normalising l keeps the generated code") {
    std::mt19937_64 rng(62);
    FieldPtr f = GaloisField::from_order(9);
    GrayMatrix n = default_n(f);
    auto g = right_divisors_search(3, 1, f, 1);
    REQUIRE(!g.empty());
    for (int t = 0; t < 10; ++t) {
        DoubleCodeSpec c = DoubleCodeSpec::zero_code(f, 1, 3, 3);
        c.g_v = g[rng() % g.size()];
        c.g_vp = g[rng() % g.size()];
        c.h_v = c.g_v;
        c.h_vp = c.g_vp;
        c.l_v = oracle::random_poly(f, 1, 3, rng);
        c.l_vp = oracle::random_poly(f, 1, 3, rng);
        DoubleCodeSpec m = normalize_l(c);
        LinearCodeMatrix a = gray_generator(c, n), b = gray_generator(m, n);
        CHECK(a.rank() == b.rank());
        CHECK(a.vconcat(b).rank() == a.rank());
    }
    DoubleCodeSpec c = DoubleCodeSpec::zero_code(f, 1, 3, 3);
    c.g_v = g[0];
    c.l_v = g[0];
    CHECK(normalize_l(c).l_v.is_zero());
}

TEST_CASE("code sizes") {
    FieldPtr f16 = GaloisField::from_order(16);
    auto P16 = [&](const char* s) { return P(f16, s); };
    DoubleCodeSpec e2{f16, 1, 8, 8, P16("x^4 + t^3x^3 + t^2x^2 + t^4x + 1"), P16("x^4 + t^3x^3 + t^2x^2 + t^4x + 1"),
                      P16("x^3 + t^7x^2 + t^3x + t"), P16("x^3 + t^7x^2 + t^3x + t"), P16("x^2 + t^6x + t^10"),
                      P16("x^2 + t^2x + t^9")};
    CHECK(spanning_count(e2) == 20);
    RMatrix m = generator_matrix_R(e2);
    CHECK(m.size() == 20);
    CHECK(m[0].size() == 16);
    CHECK(cardinality(e2).code == 20);
    Cardinality z = cardinality(DoubleCodeSpec::zero_code(f16, 1, 8, 8));
    CHECK(z.code == 0);
    CHECK(z.left == 0);
    CHECK(z.right == 0);
    auto [cr, cs] = punctured_generators(DoubleCodeSpec::full_code(f16, 1, 8, 8));
    CHECK(cr == RingSkewPoly::one(f16, 1));
    CHECK(cs == RingSkewPoly::one(f16, 1));
}

TEST_CASE("dual values") {
    FieldPtr f = GaloisField::from_order(27);
    CHECK(xi(f, 1, 1) == SkewPoly::one(f, 1));
    CHECK(xi(f, 1, 2, 3) == P(f, "x^3 + 1"));
    RingSkewPoly zero = RingSkewPoly::zero(f, 1), a = compose(P(f, "x + t"), P(f, "t^2"));
    CHECK(circle(zero, zero, a, a, 2, 2).is_zero());
    DualData z = compute_dual(DoubleCodeSpec::zero_code(f, 1, 6, 3), default_n(f));
    CHECK(z.l_bar.is_zero());
    CHECK(nullspace_dual(DoubleCodeSpec::full_code(f, 1, 6, 3), default_n(f)).rows() == 0);
}

TEST_CASE("distance values") {
    FieldPtr f = GaloisField::from_order(9);
    LinearCodeMatrix id(f, 5, 5);
    for (int k = 0; k < 5; ++k) id.set(k, k, 0);
    CHECK(min_distance_bz(id).upper == 1);
    LinearCodeMatrix rep(f, 1, 7, std::vector<int>(7, 0));
    CHECK(min_distance_bz(rep).upper == 7);
    std::mt19937_64 rng(63);
    LinearCodeMatrix m(f, 4, 9);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 9; ++c) m.set(r, c, oracle::random_log(*f, rng));
    CHECK(distance_upper_bound(m, 4).value() == min_distance_exhaustive(m).upper);
    Fixture e2 = read_fixture(std::string(DSC_DATA_DIR) + "/fixtures/example2_Gprime.txt");
    CHECK(distance_upper_bound(e2.matrix, 4).value() <= 8);
}
