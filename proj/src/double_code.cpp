#include "dsc/double_code.hpp"

#include <sstream>

#include "dsc/error.hpp"

namespace dsc {

namespace {

const char* suffix(int c) { return c == 0 ? "_v" : "_v'"; }

const SkewPoly& pick(const SkewPoly& a, const SkewPoly& b, int c) { return c == 0 ? a : b; }

void check_spec(const DoubleCodeSpec& code) {
    if (!code.field) throw SpecMismatch("double code has no field");
    if (code.r < 1 || code.s < 1) throw SpecMismatch("block lengths must be positive");
    for (const SkewPoly* p : {&code.g_v, &code.g_vp, &code.l_v, &code.l_vp, &code.h_v, &code.h_vp}) {
        if (!p->field() || !p->field()->same_as(*code.field))
            throw SpecMismatch("generator over a different field");
        if (p->auto_index() != ((code.i % code.field->m()) + code.field->m()) % code.field->m())
            throw SpecMismatch("generator uses a different automorphism");
    }
}

std::string remainder_text(const SkewPoly& rem) { return rem.is_zero() ? "" : "remainder " + rem.str(); }

// Word with a single CRT component occupied: component c holds a on the left, b on the right.
DoubleWord component_word(const FieldPtr& f, int i, int c, const SkewPoly& a, const SkewPoly& b, int r,
                          int s) {
    SkewPoly z = SkewPoly::zero(f, i);
    RingSkewPoly L = c == 0 ? compose(a, z) : compose(z, a);
    RingSkewPoly R = c == 0 ? compose(b, z) : compose(z, b);
    DoubleWord w;
    w.left.reserve(r);
    w.right.reserve(s);
    for (int k = 0; k < r; ++k) w.left.push_back(L.coefficient(k));
    for (int k = 0; k < s; ++k) w.right.push_back(R.coefficient(k));
    return w;
}

// Kernel of an F_p-matrix given as rows of length ncols, returned as basis vectors.
std::vector<std::vector<int>> kernel_mod_p(std::vector<std::vector<int>> rows, int ncols, int p) {
    // Solve A x = 0 where rows are the columns' images: rows[j] = image of basis vector j.
    int nvars = static_cast<int>(rows.size());
    // Build A with ncols equations and nvars unknowns.
    std::vector<std::vector<int>> a(ncols, std::vector<int>(nvars, 0));
    for (int j = 0; j < nvars; ++j)
        for (int e = 0; e < ncols; ++e) a[e][j] = rows[j][e];
    auto inv = [p](int x) {
        for (int y = 1; y < p; ++y)
            if (x * y % p == 1) return y;
        return 0;
    };
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < nvars && rank < ncols; ++col) {
        int sel = -1;
        for (int r = rank; r < ncols; ++r)
            if (a[r][col] % p) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[sel], a[rank]);
        int iv = inv(a[rank][col]);
        for (int& x : a[rank]) x = x * iv % p;
        for (int r = 0; r < ncols; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            int fct = a[r][col];
            for (int c = 0; c < nvars; ++c) a[r][c] = ((a[r][c] - fct * a[rank][c]) % p + p) % p;
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(nvars, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<int>> basis;
    for (int free = 0; free < nvars; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int> x(nvars, 0);
        x[free] = 1;
        for (int r = 0; r < rank; ++r) x[pivot_col[r]] = (p - a[r][free]) % p;
        basis.push_back(std::move(x));
    }
    return basis;
}

SkewPoly random_divisor(const FieldPtr& f, int i, int n, std::mt19937_64& rng) {
    for (;;) {
        int d = std::uniform_int_distribution<int>(0, n)(rng);
        if (d == 0) return SkewPoly::one(f, i);
        if (d == n) return SkewPoly::xn_minus_one(f, i, n);
        auto divs = right_divisors_search(n, d, f, i);
        if (divs.empty()) continue;
        return divs[std::uniform_int_distribution<std::size_t>(0, divs.size() - 1)(rng)];
    }
}

}  // namespace

SkewPoly random_closed_l(const SkewPoly& g, const SkewPoly& q, int r, std::mt19937_64& rng) {
    const FieldPtr& f = g.field();
    int i = g.auto_index();
    int dg = g.degree();
    if (dg <= 0) return SkewPoly::zero(f, i);
    int m = f->m();
    int p = f->p();
    std::vector<SkewPoly> basis;
    std::vector<std::vector<int>> images;
    for (int j = 0; j < dg; ++j) {
        for (int e = 0; e < m; ++e) {
            SkewPoly b = SkewPoly::monomial(f, i, e, j);
            SkewPoly img = right_divmod(reduce_mod_xn(q * b, r), g).second;
            std::vector<int> vec;
            for (int k = 0; k < dg; ++k) {
                auto comp = f->to_vector(img.coeff(k));
                vec.insert(vec.end(), comp.begin(), comp.end());
            }
            basis.push_back(b);
            images.push_back(std::move(vec));
        }
    }
    auto ker = kernel_mod_p(images, dg * m, p);
    SkewPoly l = SkewPoly::zero(f, i);
    std::uniform_int_distribution<int> coef(0, p - 1);
    for (const auto& kv : ker) {
        int c = coef(rng);
        if (c == 0) continue;
        for (std::size_t j = 0; j < kv.size(); ++j)
            if (kv[j]) l = l + basis[j].scale_left(f->from_int(static_cast<long long>(c) * kv[j]));
    }
    return l;
}

DoubleCodeSpec DoubleCodeSpec::zero_code(const FieldPtr& f, int i, int r, int s) {
    SkewPoly gr = SkewPoly::xn_minus_one(f, i, r);
    SkewPoly hs = SkewPoly::xn_minus_one(f, i, s);
    SkewPoly z = SkewPoly::zero(f, i);
    return {f, i, r, s, gr, gr, z, z, hs, hs};
}

DoubleCodeSpec DoubleCodeSpec::full_code(const FieldPtr& f, int i, int r, int s) {
    SkewPoly one = SkewPoly::one(f, i);
    SkewPoly z = SkewPoly::zero(f, i);
    return {f, i, r, s, one, one, z, z, one, one};
}

SkewPoly cofactor(const SkewPoly& f, int n) {
    auto [quot, rem] = right_divmod(SkewPoly::xn_minus_one(f.field(), f.auto_index(), n), f);
    if (!rem.is_zero()) throw StructuralError(f.str() + " does not right-divide x^" + std::to_string(n) + " - 1");
    return quot;
}

bool ValidationReport::valid() const {
    for (const auto& c : conditions)
        if (c.kind == ConditionKind::Generator && !c.ok) return false;
    return true;
}

bool ValidationReport::shift_closed() const {
    for (const auto& c : conditions)
        if (c.kind == ConditionKind::Closure && !c.ok) return false;
    return true;
}

const Condition* ValidationReport::find(const std::string& name) const {
    for (const auto& c : conditions)
        if (c.name == name) return &c;
    return nullptr;
}

std::string ValidationReport::str() const {
    std::ostringstream os;
    for (const auto& c : conditions) {
        os << (c.ok ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << '\n';
    }
    return os.str();
}

ValidationReport validate(const DoubleCodeSpec& code) {
    check_spec(code);
    ValidationReport rep;
    const FieldPtr& f = code.field;
    int i = code.g_v.auto_index();
    SkewPoly xr = SkewPoly::xn_minus_one(f, i, code.r);
    SkewPoly xs = SkewPoly::xn_minus_one(f, i, code.s);
    auto add = [&](std::string name, ConditionKind k, bool ok, std::string detail = {}) {
        rep.conditions.push_back({std::move(name), k, ok, ok ? std::string() : std::move(detail)});
    };

    for (int c = 0; c < 2; ++c) {
        const SkewPoly& g = pick(code.g_v, code.g_vp, c);
        const SkewPoly& h = pick(code.h_v, code.h_vp, c);
        std::string sx = suffix(c);
        add("g" + sx + " monic", ConditionKind::Generator, g.is_monic(), g.str());
        add("h" + sx + " monic", ConditionKind::Generator, h.is_monic(), h.str());
    }
    for (int c = 0; c < 2; ++c) {
        const SkewPoly& g = pick(code.g_v, code.g_vp, c);
        const SkewPoly& h = pick(code.h_v, code.h_vp, c);
        std::string sx = suffix(c);
        if (g.is_zero()) {
            add("g" + sx + " divides x^r - 1", ConditionKind::Generator, false, "zero generator");
        } else {
            SkewPoly rem = right_divmod(xr, g).second;
            add("g" + sx + " divides x^r - 1", ConditionKind::Generator, rem.is_zero(), remainder_text(rem));
        }
        if (h.is_zero())
            add("h" + sx + " divides x^s - 1", ConditionKind::Generator, false, "zero generator");
        else {
            SkewPoly rem = right_divmod(xs, h).second;
            add("h" + sx + " divides x^s - 1", ConditionKind::Generator, rem.is_zero(), remainder_text(rem));
        }
    }
    bool hard_ok = true;
    for (const auto& c : rep.conditions) hard_ok = hard_ok && c.ok;

    for (int c = 0; c < 2; ++c) {
        const SkewPoly& g = pick(code.g_v, code.g_vp, c);
        const SkewPoly& l = pick(code.l_v, code.l_vp, c);
        std::string sx = suffix(c);
        add("deg l" + sx + " < deg g" + sx, ConditionKind::NormalForm, l.degree() < g.degree(),
            "deg l = " + std::to_string(l.degree()) + ", deg g = " + std::to_string(g.degree()));
    }
    if (!hard_ok) return rep;

    for (int c = 0; c < 2; ++c) {
        const SkewPoly& g = pick(code.g_v, code.g_vp, c);
        const SkewPoly& l = pick(code.l_v, code.l_vp, c);
        const SkewPoly& h = pick(code.h_v, code.h_vp, c);
        std::string sx = suffix(c);
        SkewPoly q = cofactor(h, code.s);
        SkewPoly ql = q * l;
        SkewPoly rem = right_divmod(reduce_mod_xn(ql, code.r), g).second;
        add("g" + sx + " divides ((x^s - 1)/h" + sx + ") l" + sx, ConditionKind::Closure, rem.is_zero(),
            remainder_text(rem));

        SkewPoly d = l.is_zero() ? g : right_gcd(g, l);
        SkewPoly rem_gcd = right_divmod(q * d, g).second;
        add("g" + sx + " divides ((x^s - 1)/h" + sx + ") gcd(g" + sx + ", l" + sx + ")", ConditionKind::Derived,
            rem_gcd.is_zero(), remainder_text(rem_gcd));
        if (!l.is_zero()) {
            SkewPoly rem_lcm = right_divmod(ql, right_lcm(g, l)).second;
            add("lcm(g" + sx + ", l" + sx + ") divides ((x^s - 1)/h" + sx + ") l" + sx, ConditionKind::Derived,
                rem_lcm.is_zero(), remainder_text(rem_lcm));
        }
    }
    return rep;
}

DoubleCodeSpec normalize_l(const DoubleCodeSpec& code) {
    check_spec(code);
    DoubleCodeSpec out = code;
    out.l_v = right_divmod(code.l_v, code.g_v).second;
    out.l_vp = right_divmod(code.l_vp, code.g_vp).second;
    return out;
}

std::vector<RingElement> DoubleWord::concat() const {
    std::vector<RingElement> out = left;
    out.insert(out.end(), right.begin(), right.end());
    return out;
}

DoubleWord t_shift(const DoubleWord& w, int i) {
    auto rot = [i](const std::vector<RingElement>& x) {
        std::vector<RingElement> out;
        out.reserve(x.size());
        if (x.empty()) return out;
        out.push_back(r_theta(x.back(), i));
        for (std::size_t k = 0; k + 1 < x.size(); ++k) out.push_back(r_theta(x[k], i));
        return out;
    };
    return {rot(w.left), rot(w.right)};
}

int spanning_count(const DoubleCodeSpec& code) {
    return (code.r - code.g_v.degree()) + (code.r - code.g_vp.degree()) + (code.s - code.h_v.degree()) +
           (code.s - code.h_vp.degree());
}

std::vector<DoubleWord> spanning_set(const DoubleCodeSpec& code) {
    check_spec(code);
    const FieldPtr& f = code.field;
    int i = code.g_v.auto_index();
    SkewPoly z = SkewPoly::zero(f, i);
    std::vector<DoubleWord> out;
    for (int c = 0; c < 2; ++c) {
        const SkewPoly& g = pick(code.g_v, code.g_vp, c);
        if (g.is_zero()) throw StructuralError("zero generator g");
        for (int k = 0; k < code.r - g.degree(); ++k)
            out.push_back(component_word(f, i, c, shift_mod_xn(g, k, code.r), z, code.r, code.s));
    }
    for (int c = 0; c < 2; ++c) {
        const SkewPoly& l = pick(code.l_v, code.l_vp, c);
        const SkewPoly& h = pick(code.h_v, code.h_vp, c);
        if (h.is_zero()) throw StructuralError("zero generator h");
        for (int k = 0; k < code.s - h.degree(); ++k)
            out.push_back(component_word(f, i, c, shift_mod_xn(l, k, code.r), shift_mod_xn(h, k, code.s), code.r,
                                         code.s));
    }
    return out;
}

RMatrix generator_matrix_R(const DoubleCodeSpec& code) {
    RMatrix m;
    for (const auto& w : spanning_set(code)) m.push_back(w.concat());
    return m;
}

LinearCodeMatrix gray_generator(const DoubleCodeSpec& code, const GrayMatrix& n) {
    return phi_matrix(generator_matrix_R(code), code.n(), code.field, n);
}

Cardinality cardinality(const DoubleCodeSpec& code) {
    check_spec(code);
    Cardinality c;
    c.q = code.field->q();
    c.code = spanning_count(code);
    auto [gr, hs] = punctured_generators(code);
    c.left = 2 * code.r - gr.v.degree() - gr.vp.degree();
    c.right = 2 * code.s - hs.v.degree() - hs.vp.degree();
    return c;
}

std::pair<RingSkewPoly, RingSkewPoly> punctured_generators(const DoubleCodeSpec& code) {
    auto gcd_or_g = [](const SkewPoly& g, const SkewPoly& l) { return l.is_zero() ? g : right_gcd(g, l); };
    RingSkewPoly left{gcd_or_g(code.g_v, code.l_v), gcd_or_g(code.g_vp, code.l_vp)};
    return {left, code.h()};
}

bool contains(const DoubleCodeSpec& code, const DoubleWord& w, const GrayMatrix& n) {
    if (static_cast<int>(w.left.size()) != code.r || static_cast<int>(w.right.size()) != code.s)
        throw StructuralError("word length does not match the code");
    return gray_generator(code, n).in_row_space(phi_word(w.concat(), n));
}

bool is_shift_closed(const DoubleCodeSpec& code, const GrayMatrix& n) {
    auto words = spanning_set(code);
    LinearCodeMatrix g(code.field, 0, 2 * code.n());
    for (const auto& w : words) g.append_row(phi_word(w.concat(), n));
    int base = g.rank();
    LinearCodeMatrix ext = g;
    int i = code.g_v.auto_index();
    for (const auto& w : words) ext.append_row(phi_word(t_shift(w, i).concat(), n));
    return ext.rank() == base;
}

DoubleCodeSpec random_closed_code(const FieldPtr& f, int i, int r, int s, std::mt19937_64& rng) {
    int ii = ((i % f->m()) + f->m()) % f->m();
    DoubleCodeSpec code;
    code.field = f;
    code.i = ii;
    code.r = r;
    code.s = s;
    code.g_v = random_divisor(f, ii, r, rng);
    code.g_vp = random_divisor(f, ii, r, rng);
    code.h_v = random_divisor(f, ii, s, rng);
    code.h_vp = random_divisor(f, ii, s, rng);
    code.l_v = random_closed_l(code.g_v, cofactor(code.h_v, s), r, rng);
    code.l_vp = random_closed_l(code.g_vp, cofactor(code.h_vp, s), r, rng);
    return code;
}

}  // namespace dsc
