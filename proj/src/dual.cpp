#include "dsc/dual.hpp"

#include <numeric>

#include "dsc/error.hpp"

namespace dsc {

namespace {

const SkewPoly& pick(const SkewPoly& a, const SkewPoly& b, int c) { return c == 0 ? a : b; }
const char* suffix(int c) { return c == 0 ? "_v" : "_v'"; }

SkewPoly circle_term(const SkewPoly& a, const SkewPoly& b, int n, int gamma) {
    if (a.is_zero() || b.is_zero()) return SkewPoly::zero(a.field(), a.auto_index());
    const FieldPtr& f = a.field();
    int i = a.auto_index();
    int db = b.degree();
    SkewPoly bb = theta_map(reciprocal_star(b), gamma - db);
    SkewPoly xpow = SkewPoly::monomial(f, i, 0, gamma - 1 - db);
    return a * bb * xpow * xi(f, i, gamma / n, n);
}

SkewPoly poly_from_column_slice(const FieldPtr& f, int i, const std::vector<int>& row, int first, int len) {
    // columns first..first+len-1 hold degrees len-1 down to 0
    std::vector<int> c(len);
    for (int j = 0; j < len; ++j) c[len - 1 - j] = row[first + j];
    return SkewPoly(f, i, std::move(c));
}

struct ComponentDual {
    SkewPoly g_bar, l_bar, h_bar;
};

ComponentDual component_dual(const DoubleCodeSpec& code, int comp) {
    const FieldPtr& f = code.field;
    int i = code.g_v.auto_index();
    int r = code.r, s = code.s;
    const SkewPoly& g = pick(code.g_v, code.g_vp, comp);
    const SkewPoly& l = pick(code.l_v, code.l_vp, comp);
    const SkewPoly& h = pick(code.h_v, code.h_vp, comp);

    // Component code in F_q^{r+s}, coefficient order: left degrees 0..r-1, right 0..s-1.
    LinearCodeMatrix m(f, 0, r + s);
    auto add_row = [&](const SkewPoly& a, const SkewPoly& b) {
        std::vector<int> row(r + s, GaloisField::ZERO);
        for (int k = 0; k <= a.degree(); ++k) row[k] = a.coeff(k);
        for (int k = 0; k <= b.degree(); ++k) row[r + k] = b.coeff(k);
        m.append_row(row);
    };
    SkewPoly z = SkewPoly::zero(f, i);
    for (int k = 0; k < r - g.degree(); ++k) add_row(shift_mod_xn(g, k, r), z);
    for (int k = 0; k < s - h.degree(); ++k) add_row(shift_mod_xn(l, k, r), shift_mod_xn(h, k, s));

    LinearCodeMatrix d;
    if (m.rows() == 0) {
        d = LinearCodeMatrix(f, r + s, r + s);
        for (int k = 0; k < r + s; ++k) d.set(k, k, 0);
    } else {
        d = m.nullspace();
    }

    // Reorder columns as right block descending then left block descending so that the
    // last pivot row of each block is the monic element of least degree.
    std::vector<int> order;
    for (int k = s - 1; k >= 0; --k) order.push_back(r + k);
    for (int k = r - 1; k >= 0; --k) order.push_back(k);
    std::vector<int> piv;
    LinearCodeMatrix red = d.select_columns(order).rref(&piv);

    ComponentDual out{SkewPoly::xn_minus_one(f, i, r), z, SkewPoly::xn_minus_one(f, i, s)};
    int last_right = -1, last_left = -1;
    for (int k = 0; k < static_cast<int>(piv.size()); ++k) (piv[k] < s ? last_right : last_left) = k;
    if (last_left >= 0) out.g_bar = poly_from_column_slice(f, i, red.row(last_left), s, r);
    if (last_right >= 0) {
        auto row = red.row(last_right);
        out.h_bar = poly_from_column_slice(f, i, row, 0, s);
        SkewPoly a = poly_from_column_slice(f, i, row, s, r);
        out.l_bar = right_divmod(a, out.g_bar).second;
    }
    return out;
}

std::string poly_pair(const SkewPoly& a, const SkewPoly& b) { return "computed " + a.str() + ", formula " + b.str(); }

}  // namespace

SkewPoly xi(const FieldPtr& f, int i, int k, int step) {
    if (k < 1 || step < 1) throw Error("xi needs positive arguments");
    std::vector<int> c(static_cast<std::size_t>((k - 1) * step + 1), GaloisField::ZERO);
    for (int j = 0; j < k; ++j) c[static_cast<std::size_t>(j * step)] = 0;
    return SkewPoly(f, i, std::move(c));
}

SkewPoly circle_component(const SkewPoly& a1, const SkewPoly& a2, const SkewPoly& b1, const SkewPoly& b2, int r,
                          int s) {
    if (a1.degree() >= r || b1.degree() >= r || a2.degree() >= s || b2.degree() >= s)
        throw StructuralError("circle arguments exceed block lengths");
    int gamma = std::lcm(r, s);
    return reduce_mod_xn(circle_term(a1, b1, r, gamma) + circle_term(a2, b2, s, gamma), gamma);
}

RingSkewPoly circle(const RingSkewPoly& a1, const RingSkewPoly& a2, const RingSkewPoly& b1,
                    const RingSkewPoly& b2, int r, int s) {
    return {circle_component(a1.v, a2.v, b1.v, b2.v, r, s), circle_component(a1.vp, a2.vp, b1.vp, b2.vp, r, s)};
}

DoubleWord word_from_polys(const RingSkewPoly& left, const RingSkewPoly& right, int r, int s) {
    if (left.degree() >= r || right.degree() >= s) throw StructuralError("polynomial longer than its block");
    DoubleWord w;
    for (int k = 0; k < r; ++k) w.left.push_back(left.coefficient(k));
    for (int k = 0; k < s; ++k) w.right.push_back(right.coefficient(k));
    return w;
}

bool orthogonal_to_shifts(const DoubleWord& alpha, const DoubleWord& beta, int i) {
    int r = static_cast<int>(alpha.left.size());
    int s = static_cast<int>(alpha.right.size());
    if (r == 0 && s == 0) return true;
    const GaloisField& f = (r ? alpha.left[0] : alpha.right[0]).a.field();
    int ord = f.m() / std::gcd(((i % f.m()) + f.m()) % f.m(), f.m());
    int period = std::lcm(std::lcm(std::max(r, 1), std::max(s, 1)), ord);
    DoubleWord cur = alpha;
    auto b = beta.concat();
    for (int k = 0; k < period; ++k) {
        auto a = cur.concat();
        RingElement acc = a[0] * b[0];
        for (std::size_t j = 1; j < a.size(); ++j) acc = acc + a[j] * b[j];
        if (!acc.is_zero()) return false;
        cur = t_shift(cur, i);
    }
    return true;
}

DualData compute_dual(const DoubleCodeSpec& code, const GrayMatrix& n) {
    if (!validate(code).valid()) throw StructuralError("dual requires generators dividing x^n - 1");
    ComponentDual cv = component_dual(code, 0);
    ComponentDual cvp = component_dual(code, 1);
    DualData out;
    out.g_bar = {cv.g_bar, cvp.g_bar};
    out.l_bar = {cv.l_bar, cvp.l_bar};
    out.h_bar = {cv.h_bar, cvp.h_bar};
    out.gamma = std::lcm(code.r, code.s);
    out.code = code;
    out.code.g_v = cv.g_bar;
    out.code.g_vp = cvp.g_bar;
    out.code.l_v = cv.l_bar;
    out.code.l_vp = cvp.l_bar;
    out.code.h_v = cv.h_bar;
    out.code.h_vp = cvp.h_bar;
    out.parity = nullspace_dual(code, n);
    return out;
}

LinearCodeMatrix nullspace_dual(const DoubleCodeSpec& code, const GrayMatrix& n) {
    LinearCodeMatrix g = gray_generator(code, n);
    if (g.rows() == 0) {
        LinearCodeMatrix id(code.field, g.cols(), g.cols());
        for (int k = 0; k < g.cols(); ++k) id.set(k, k, 0);
        return id;
    }
    return g.nullspace();
}

std::vector<Check> degree_checks(const DoubleCodeSpec& code, const DualData& dual) {
    std::vector<Check> out;
    for (int c = 0; c < 2; ++c) {
        const SkewPoly& g = pick(code.g_v, code.g_vp, c);
        const SkewPoly& l = pick(code.l_v, code.l_vp, c);
        const SkewPoly& h = pick(code.h_v, code.h_vp, c);
        int dgcd = (l.is_zero() ? g : right_gcd(g, l)).degree();
        int gb = pick(dual.g_bar.v, dual.g_bar.vp, c).degree();
        int hb = pick(dual.h_bar.v, dual.h_bar.vp, c).degree();
        int want_g = code.r - dgcd;
        int want_h = code.s - h.degree() - g.degree() + dgcd;
        std::string sx = suffix(c);
        out.push_back({"deg g_bar" + sx + " = r - deg gcd(g" + sx + ", l" + sx + ")", gb == want_g,
                       std::to_string(gb) + " vs " + std::to_string(want_g)});
        out.push_back({"deg h_bar" + sx + " = s - deg h" + sx + " - deg g" + sx + " + deg gcd(g" + sx + ", l" + sx + ")",
                       hb == want_h, std::to_string(hb) + " vs " + std::to_string(want_h)});
    }
    return out;
}

CardinalityExponents cardinality_formulas(const DoubleCodeSpec& code) {
    int sum_g = code.g_v.degree() + code.g_vp.degree();
    int sum_h = code.h_v.degree() + code.h_vp.degree();
    int sum_k = 0;
    for (int c = 0; c < 2; ++c) {
        const SkewPoly& g = pick(code.g_v, code.g_vp, c);
        const SkewPoly& l = pick(code.l_v, code.l_vp, c);
        sum_k += g.degree() - (l.is_zero() ? g : right_gcd(g, l)).degree();
    }
    CardinalityExponents e;
    e.c_r = 2 * code.r - sum_g + sum_k;
    e.c_s = 2 * code.s - sum_h;
    e.dual_r = sum_g;
    e.dual_s = sum_h + sum_k;
    e.c_r_perp = sum_g - sum_k;
    e.c_s_perp = sum_h;
    return e;
}

CardinalityExponents cardinality_ranks(const DoubleCodeSpec& code, const GrayMatrix& n) {
    LinearCodeMatrix g = gray_generator(code, n);
    LinearCodeMatrix p = nullspace_dual(code, n);
    int wr = 2 * code.r, ws = 2 * code.s;
    CardinalityExponents e;
    e.c_r = g.column_range(0, wr).rank();
    e.c_s = g.column_range(wr, ws).rank();
    e.dual_r = p.column_range(0, wr).rank();
    e.dual_s = p.column_range(wr, ws).rank();
    e.c_r_perp = wr - e.c_r;
    e.c_s_perp = ws - e.c_s;
    return e;
}

std::vector<Check> formula_checks(const DoubleCodeSpec& code, const DualData& dual) {
    std::vector<Check> out;
    const FieldPtr& f = code.field;
    int i = code.g_v.auto_index();
    int r = code.r, s = code.s, gamma = dual.gamma;
    SkewPoly xr = SkewPoly::xn_minus_one(f, i, r);
    SkewPoly xs = SkewPoly::xn_minus_one(f, i, s);
    auto twisted_star = [gamma](const SkewPoly& p) { return theta_map(reciprocal_star(p), gamma - p.degree()); };

    for (int c = 0; c < 2; ++c) {
        const SkewPoly& g = pick(code.g_v, code.g_vp, c);
        const SkewPoly& l = pick(code.l_v, code.l_vp, c);
        const SkewPoly& h = pick(code.h_v, code.h_vp, c);
        const SkewPoly& gb = pick(dual.g_bar.v, dual.g_bar.vp, c);
        const SkewPoly& lb = pick(dual.l_bar.v, dual.l_bar.vp, c);
        const SkewPoly& hb = pick(dual.h_bar.v, dual.h_bar.vp, c);
        std::string sx = suffix(c);

        // Kernel generators of C on each block.
        SkewPoly d = l.is_zero() ? g : right_gcd(g, l);
        SkewPoly j = h;
        if (!l.is_zero()) {
            SkewPoly k = right_divmod(right_lcm(g, l), l).first;
            j = right_gcd(k * h, xs);
        }
        SkewPoly g_rec = monic(reciprocal_star(cofactor(d, r)));
        out.push_back({"g_bar" + sx + " = reciprocal of (x^r - 1)/gcd(g" + sx + ", l" + sx + ")", g_rec == gb,
                       poly_pair(gb, g_rec)});
        SkewPoly h_rec = monic(reciprocal_star(cofactor(j, s)));
        out.push_back({"h_bar" + sx + " = reciprocal of (x^s - 1)/j" + sx, h_rec == hb, poly_pair(hb, h_rec)});

        // Printed closed forms.
        {
            SkewPoly den = twisted_star(g);
            if (!l.is_zero()) den = right_gcd(den, twisted_star(l));
            auto [q, rem] = right_divmod(xr, den);
            bool ok = rem.is_zero() && monic(q) == gb;
            out.push_back({"g_bar" + sx + " printed quotient", ok,
                           rem.is_zero() ? poly_pair(gb, monic(q)) : "inexact division, remainder " + rem.str()});
        }
        {
            SkewPoly jp = h;
            std::string note;
            bool exact = true;
            if (!l.is_zero()) {
                auto [q, rem] = right_divmod(right_lcm(g, l) * h, l);
                jp = q;
                exact = rem.is_zero();
                if (!exact) note = "lcm*h not right-divisible by l, remainder " + rem.str();
            }
            bool ok = false;
            if (exact) {
                auto [q, rem] = right_divmod(xs, twisted_star(jp));
                ok = rem.is_zero() && monic(q) == hb;
                note = rem.is_zero() ? poly_pair(hb, monic(q)) : "inexact division, remainder " + rem.str();
            }
            out.push_back({"h_bar" + sx + " printed quotient", ok, note});
        }
        {
            auto [u, rem] = right_divmod(xr, twisted_star(g));
            bool ok = rem.is_zero() && (lb.is_zero() || is_right_divisor(u, lb));
            out.push_back({"l_bar" + sx + " right multiple of (x^r - 1)/twisted g" + sx + "*", ok,
                           rem.is_zero() ? "quotient " + u.str() + ", l_bar " + lb.str()
                                         : "inexact division, remainder " + rem.str()});
        }
    }
    return out;
}

bool dual_orthogonal_to_shifts(const DoubleCodeSpec& code, const DualData& dual) {
    auto primal = spanning_set(code);
    auto dwords = spanning_set(dual.code);
    int i = code.g_v.auto_index();
    for (const auto& a : primal)
        for (const auto& b : dwords)
            if (!orthogonal_to_shifts(a, b, i)) return false;
    return true;
}

}  // namespace dsc
