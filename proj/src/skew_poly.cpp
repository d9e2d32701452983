#include "dsc/skew_poly.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <thread>

#include "dsc/error.hpp"

namespace dsc {

SkewPoly::SkewPoly(FieldPtr f, int i, std::vector<int> logs)
    : f_(std::move(f)), i_(i), c_(std::move(logs)) {
    if (!f_) throw StructuralError("skew polynomial without a field");
    if (f_->m() > 0) i_ = ((i_ % f_->m()) + f_->m()) % f_->m();
    trim();
}

void SkewPoly::trim() {
    while (!c_.empty() && c_.back() < 0) c_.pop_back();
}

SkewPoly SkewPoly::monomial(const FieldPtr& f, int i, int coeff_log, int degree) {
    std::vector<int> c(degree + 1, GaloisField::ZERO);
    c[degree] = coeff_log;
    return SkewPoly(f, i, std::move(c));
}

SkewPoly SkewPoly::xn_minus_one(const FieldPtr& f, int i, int n) {
    std::vector<int> c(n + 1, GaloisField::ZERO);
    c[n] = 0;
    c[0] = f->add(c[0], f->neg(0));
    return SkewPoly(f, i, std::move(c));
}

SkewPoly SkewPoly::from_elements(const FieldPtr& f, int i, const std::vector<FieldElement>& c) {
    std::vector<int> logs;
    logs.reserve(c.size());
    for (const auto& e : c) {
        if (e.field_ptr() && !e.field().same_as(*f)) throw SpecMismatch("coefficient from another field");
        logs.push_back(e.log());
    }
    return SkewPoly(f, i, std::move(logs));
}

void SkewPoly::check_compatible(const SkewPoly& o) const {
    if (!f_ || !o.f_ || !f_->same_as(*o.f_)) throw SpecMismatch("skew polynomials over different fields");
    if (i_ != o.i_) throw SpecMismatch("skew polynomials with different automorphisms");
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
    check_compatible(o);
    std::vector<int> r(std::max(c_.size(), o.c_.size()), GaloisField::ZERO);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = f_->add(coeff(static_cast<int>(k)), o.coeff(static_cast<int>(k)));
    return SkewPoly(f_, i_, std::move(r));
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const { return *this + (-o); }

SkewPoly SkewPoly::operator-() const {
    std::vector<int> r(c_);
    for (int& c : r) c = f_->neg(c);
    return SkewPoly(f_, i_, std::move(r));
}

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
    check_compatible(o);
    if (c_.empty() || o.c_.empty()) return zero(f_, i_);
    std::vector<int> r(c_.size() + o.c_.size() - 1, GaloisField::ZERO);
    for (std::size_t a = 0; a < c_.size(); ++a) {
        if (c_[a] < 0) continue;
        for (std::size_t b = 0; b < o.c_.size(); ++b) {
            if (o.c_[b] < 0) continue;
            r[a + b] = f_->add(r[a + b], f_->mul(c_[a], twist(o.c_[b], static_cast<long long>(a))));
        }
    }
    return SkewPoly(f_, i_, std::move(r));
}

SkewPoly SkewPoly::scale_left(int c) const {
    std::vector<int> r(c_);
    for (int& x : r) x = f_->mul(c, x);
    return SkewPoly(f_, i_, std::move(r));
}

std::string SkewPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        int c = c_[k];
        if (c < 0) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += f_->format(c);
            continue;
        }
        if (c != 0) out += f_->format(c) + "*";
        out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    return out;
}

SkewPoly s_mul(const SkewPoly& f, const SkewPoly& g) { return f * g; }

std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& g, const SkewPoly& f) {
    if (f.is_zero()) throw DivisionByZero("right division by the zero polynomial");
    const auto& F = *f.field();
    if (!g.field() || !F.same_as(*g.field()) || g.auto_index() != f.auto_index())
        throw SpecMismatch("right_divmod operands differ in field or automorphism");
    int df = f.degree();
    std::vector<int> r = g.logs();
    std::vector<int> q(std::max(0, g.degree() - df + 1), GaloisField::ZERO);
    const auto& fc = f.logs();
    for (int k = g.degree() - df; k >= 0; --k) {
        int lead = r[k + df];
        if (lead < 0) continue;
        int c = F.div(lead, f.twist(fc[df], k));
        q[k] = c;
        for (int j = 0; j <= df; ++j) {
            if (fc[j] < 0) continue;
            r[k + j] = F.sub(r[k + j], F.mul(c, f.twist(fc[j], k)));
        }
    }
    if (static_cast<int>(r.size()) > df) r.resize(std::max(0, df));
    return {SkewPoly(f.field(), f.auto_index(), std::move(q)),
            SkewPoly(f.field(), f.auto_index(), std::move(r))};
}

bool is_right_divisor(const SkewPoly& f, const SkewPoly& g) {
    return right_divmod(g, f).second.is_zero();
}

SkewPoly monic(const SkewPoly& f) {
    if (f.is_zero()) return f;
    return f.scale_left(f.field()->inv(f.lead()));
}

SkewPoly right_gcd(const SkewPoly& f, const SkewPoly& g) {
    if (f.is_zero() && g.is_zero()) throw DivisionByZero("right_gcd of two zero polynomials");
    SkewPoly a = f, b = g;
    while (!b.is_zero()) {
        SkewPoly r = right_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

SkewPoly right_lcm(const SkewPoly& f, const SkewPoly& g) {
    if (f.is_zero() || g.is_zero()) throw DivisionByZero("right_lcm with a zero polynomial");
    // r_j = s_j f + t_j g along the Euclidean cascade; at termination s_j f = -t_j g.
    SkewPoly r0 = f, r1 = g;
    SkewPoly s0 = SkewPoly::one(f.field(), f.auto_index());
    SkewPoly s1 = SkewPoly::zero(f.field(), f.auto_index());
    while (!r1.is_zero()) {
        auto [q, rem] = right_divmod(r0, r1);
        SkewPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    return monic(s1 * f);
}

SkewPoly reciprocal_star(const SkewPoly& f) {
    if (f.is_zero()) return f;
    int d = f.degree();
    std::vector<int> r(d + 1);
    for (int j = 0; j <= d; ++j) r[j] = f.twist(f.coeff(d - j), j);
    return SkewPoly(f.field(), f.auto_index(), std::move(r));
}

SkewPoly theta_map(const SkewPoly& f, long long k) {
    std::vector<int> r(f.logs());
    for (int& c : r) c = f.twist(c, k);
    return SkewPoly(f.field(), f.auto_index(), std::move(r));
}

SkewPoly reduce_mod_xn(const SkewPoly& f, int n) {
    if (n <= 0) throw StructuralError("reduction modulo x^n - 1 needs n >= 1");
    if (f.degree() < n) return f;
    const auto& F = *f.field();
    std::vector<int> r(n, GaloisField::ZERO);
    for (int k = 0; k <= f.degree(); ++k) r[k % n] = F.add(r[k % n], f.coeff(k));
    return SkewPoly(f.field(), f.auto_index(), std::move(r));
}

SkewPoly shift_mod_xn(const SkewPoly& f, int k, int n) {
    const auto& F = *f.field();
    std::vector<int> r(n, GaloisField::ZERO);
    for (int j = 0; j <= f.degree(); ++j) {
        int c = f.coeff(j);
        if (c < 0) continue;
        int pos = (j + k) % n;
        r[pos] = F.add(r[pos], f.twist(c, k));
    }
    return SkewPoly(f.field(), f.auto_index(), std::move(r));
}

namespace {

struct PolyParser {
    const FieldPtr& f;
    std::string s;
    std::size_t pos = 0;
    std::string_view orig;

    ParseError error(const std::string& why) const {
        return ParseError("bad polynomial '" + std::string(orig) + "': " + why);
    }
    bool at(char c) const { return pos < s.size() && s[pos] == c; }
    long long number() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw error("expected a number");
        long long v = 0;
        auto res = std::from_chars(s.data() + start, s.data() + pos, v);
        if (res.ec != std::errc()) throw error("number out of range");
        return v;
    }
    // returns coefficient log; consumes nothing when no coefficient is present
    bool coefficient(int& out) {
        if (at('t')) {
            std::size_t start = pos++;
            if (at('^')) {
                ++pos;
                number();
            }
            out = f->parse(std::string_view(s).substr(start, pos - start));
            return true;
        }
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::size_t start = pos;
            number();
            out = f->parse(std::string_view(s).substr(start, pos - start));
            return true;
        }
        return false;
    }
};

}  // namespace

SkewPoly parse_poly(const FieldPtr& f, int i, std::string_view text) {
    PolyParser p{f, {}, 0, text};
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) p.s += c;
    if (p.s.empty()) throw p.error("empty");
    std::vector<int> c;
    bool first = true;
    while (p.pos < p.s.size()) {
        bool negative = false;
        if (p.at('+') || p.at('-')) {
            negative = p.at('-');
            ++p.pos;
        } else if (!first) {
            throw p.error("expected + or - between terms");
        }
        first = false;
        int coef = 0;
        bool has_coef = p.coefficient(coef);
        if (has_coef && p.at('*')) ++p.pos;
        int deg = 0;
        if (p.at('x')) {
            ++p.pos;
            deg = 1;
            if (p.at('^')) {
                ++p.pos;
                long long k = p.number();
                if (k > 1 << 20) throw p.error("degree too large");
                deg = static_cast<int>(k);
            }
        } else if (!has_coef) {
            throw p.error("expected a term");
        }
        if (negative) coef = f->neg(coef);
        if (static_cast<int>(c.size()) <= deg) c.resize(deg + 1, GaloisField::ZERO);
        c[deg] = f->add(c[deg], coef);
    }
    return SkewPoly(f, i, std::move(c));
}

std::vector<SkewPoly> right_divisors_search(int n, int d, const FieldPtr& f, int i,
                                            const DivisorSearchOptions& opt) {
    if (d < 0 || d > n) return {};
    double need = std::pow(static_cast<double>(f->q()), d);
    if (need > opt.budget)
        throw BudgetExceeded("divisor search needs " + std::to_string(static_cast<long long>(need)) +
                                 " trials, budget is " + std::to_string(static_cast<long long>(opt.budget)),
                             need);
    long long total = static_cast<long long>(need);
    SkewPoly target = SkewPoly::xn_minus_one(f, i, n);
    unsigned workers = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<long long>(workers, std::max<long long>(1, total / 64)));
    std::vector<std::vector<SkewPoly>> parts(workers);
    auto run = [&](unsigned w) {
        long long lo = total * w / workers, hi = total * (w + 1) / workers;
        std::vector<int> c(d + 1);
        for (long long idx = lo; idx < hi; ++idx) {
            long long v = idx;
            for (int k = 0; k < d; ++k) {
                c[k] = f->from_symbol(static_cast<int>(v % f->q()));
                v /= f->q();
            }
            c[d] = 0;
            SkewPoly cand(f, i, c);
            if (right_divmod(target, cand).second.is_zero()) parts[w].push_back(std::move(cand));
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> th;
        for (unsigned w = 0; w < workers; ++w) th.emplace_back(run, w);
        for (auto& t : th) t.join();
    }
    std::vector<SkewPoly> out;
    for (auto& p : parts)
        for (auto& x : p) out.push_back(std::move(x));
    return out;
}

RingElement RingSkewPoly::coefficient(int k) const {
    return crt_join(v.coefficient(k), vp.coefficient(k));
}

std::string RingSkewPoly::str() const {
    return "v*(" + v.str() + ") + v'*(" + vp.str() + ")";
}

RingSkewPoly ring_poly_from_coeffs(const FieldPtr& f, int i, const std::vector<RingElement>& c) {
    std::vector<int> a(c.size()), b(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        auto [c0, c1] = crt_split(c[k]);
        a[k] = c0.log();
        b[k] = c1.log();
    }
    return {SkewPoly(f, i, std::move(a)), SkewPoly(f, i, std::move(b))};
}

std::pair<SkewPoly, SkewPoly> decompose(const RingSkewPoly& f) { return {f.v, f.vp}; }

RingSkewPoly compose(const SkewPoly& fv, const SkewPoly& fvp) { return {fv, fvp}; }

RingSkewPoly s_mul(const RingSkewPoly& f, const RingSkewPoly& g) { return f * g; }

std::pair<RingSkewPoly, RingSkewPoly> right_divmod(const RingSkewPoly& g, const RingSkewPoly& f) {
    if (!f.lead_is_unit())
        throw DivisionByZero("right division over R needs a unit leading coefficient");
    auto [qv, rv] = right_divmod(g.v, f.v);
    auto [qp, rp] = right_divmod(g.vp, f.vp);
    return {{qv, qp}, {rv, rp}};
}

bool is_right_divisor(const RingSkewPoly& f, const RingSkewPoly& g) {
    return is_right_divisor(f.v, g.v) && is_right_divisor(f.vp, g.vp);
}

RingSkewPoly right_gcd(const RingSkewPoly& f, const RingSkewPoly& g) {
    if (f.is_zero() && g.is_zero()) throw DivisionByZero("right_gcd of two zero polynomials");
    auto comp = [](const SkewPoly& a, const SkewPoly& b) {
        if (a.is_zero() && b.is_zero()) return a;
        return right_gcd(a, b);
    };
    return {comp(f.v, g.v), comp(f.vp, g.vp)};
}

RingSkewPoly right_lcm(const RingSkewPoly& f, const RingSkewPoly& g) {
    return {right_lcm(f.v, g.v), right_lcm(f.vp, g.vp)};
}

RingSkewPoly reciprocal_star(const RingSkewPoly& f) {
    return {reciprocal_star(f.v), reciprocal_star(f.vp)};
}

RingSkewPoly theta_map(const RingSkewPoly& f, long long k) {
    return {theta_map(f.v, k), theta_map(f.vp, k)};
}

}  // namespace dsc
