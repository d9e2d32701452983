#include "dsc/field.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "dsc/error.hpp"

namespace dsc {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Remainder of a modulo b over GF(p), ascending coefficients, b monic.
std::vector<int> prime_poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        int c = a[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j)
            a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
    a.resize(std::min<std::size_t>(a.size(), db));
    return a;
}

bool is_irreducible(const std::vector<int>& f, int p) {
    int m = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= m / 2; ++d) {
        // every monic polynomial of degree d
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            std::vector<int> g(d + 1);
            long long v = idx;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(v % p);
                v /= p;
            }
            g[d] = 1;
            auto r = prime_poly_mod(f, g, p);
            bool zero = true;
            for (int c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
    static const std::map<std::pair<int, int>, std::vector<int>> t = {
        {{2, 1}, {1, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{3, 1}, {1, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{5, 1}, {3, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{7, 1}, {4, 1}},
        {{7, 2}, {3, 6, 1}},
        {{11, 1}, {9, 1}},
        {{13, 1}, {11, 1}},
    };
    return t;
}

}  // namespace

std::optional<std::vector<int>> GaloisField::conway_modulus(int p, int m) {
    auto it = conway_table().find({p, m});
    if (it == conway_table().end()) return std::nullopt;
    return it->second;
}

FieldPtr GaloisField::make_default(int p, int m) {
    auto mod = conway_modulus(p, m);
    if (!mod)
        throw ParseError("no default modulus for GF(" + std::to_string(p) + "^" +
                         std::to_string(m) + "); supply one");
    return make(p, m, *mod);
}

FieldPtr GaloisField::from_order(int q) {
    for (int p = 2; p <= q; ++p) {
        if (q % p) continue;
        int m = 0, r = q;
        while (r % p == 0) {
            r /= p;
            ++m;
        }
        if (r != 1) throw ParseError("field order " + std::to_string(q) + " is not a prime power");
        return make_default(p, m);
    }
    throw ParseError("invalid field order " + std::to_string(q));
}

FieldPtr GaloisField::make(int p, int m, std::vector<int> modulus) {
    if (!is_prime(p)) throw ParseError("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw ParseError("extension degree must be >= 1");
    if (static_cast<int>(modulus.size()) != m + 1)
        throw ParseError("modulus must have m+1 coefficients");
    for (int& c : modulus) {
        if (c < 0 || c >= p) throw ParseError("modulus coefficient out of range");
    }
    if (modulus[m] != 1) throw ParseError("modulus must be monic");
    long long qq = 1;
    for (int i = 0; i < m; ++i) qq *= p;
    if (qq > (1 << 16)) throw ParseError("field order above 2^16 is not supported");
    if (!is_irreducible(modulus, p)) throw ParseError("modulus is reducible over GF(p)");

    auto f = std::shared_ptr<GaloisField>(new GaloisField());
    f->p_ = p;
    f->m_ = m;
    f->q_ = static_cast<int>(qq);
    f->ord_ = f->q_ - 1;
    f->modulus_ = modulus;

    // Powers of x modulo the modulus, as base-p symbols.
    f->exp_sym_.assign(f->ord_, 0);
    f->log_sym_.assign(f->q_, ZERO);
    std::vector<int> cur(m, 0);
    cur[0] = 1;
    auto encode = [&](const std::vector<int>& v) {
        int s = 0;
        for (int i = m - 1; i >= 0; --i) s = s * p + v[i];
        return s;
    };
    for (int e = 0; e < f->ord_; ++e) {
        int s = encode(cur);
        if (f->log_sym_[s] != ZERO)
            throw ParseError("x is not primitive modulo " + f->modulus_string());
        f->exp_sym_[e] = s;
        f->log_sym_[s] = e;
        // cur *= x
        int top = cur[m - 1];
        for (int i = m - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        for (int i = 0; i < m; ++i) cur[i] = ((cur[i] - top * modulus[i]) % p + p) % p;
    }
    if (encode(cur) != 1) throw ParseError("x is not primitive modulo " + f->modulus_string());

    // Zech logarithms: zech[n] = log(1 + t^n).
    f->zech_.assign(f->ord_, ZERO);
    for (int n = 0; n < f->ord_; ++n) {
        int s = f->exp_sym_[n];
        // add 1 to the constant digit
        int d0 = s % p;
        int s1 = s - d0 + (d0 + 1) % p;
        f->zech_[n] = f->log_sym_[s1];
    }
    f->ppow_.assign(m, 1);
    for (int k = 1; k < m; ++k) f->ppow_[k] = f->ppow_[k - 1] * p % f->ord_;
    return f;
}

std::string GaloisField::label() const {
    return "GF(" + std::to_string(q_) + ")";
}

std::string GaloisField::modulus_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    os << ']';
    return os.str();
}

int GaloisField::inv(int a) const {
    if (a < 0) throw DivisionByZero("inverse of zero in " + label());
    return a == 0 ? 0 : ord_ - a;
}

int GaloisField::pow(int a, long long e) const {
    if (a < 0) {
        if (e == 0) return 0;
        if (e < 0) throw DivisionByZero("negative power of zero");
        return ZERO;
    }
    long long r = (static_cast<long long>(a) * (e % ord_)) % ord_;
    if (r < 0) r += ord_;
    return static_cast<int>(r);
}

int GaloisField::from_int(long long c) const {
    int d = static_cast<int>(((c % p_) + p_) % p_);
    return log_sym_[d];
}

std::vector<int> GaloisField::to_vector(int a) const {
    std::vector<int> v(m_, 0);
    int s = to_symbol(a);
    for (int i = 0; i < m_; ++i) {
        v[i] = s % p_;
        s /= p_;
    }
    return v;
}

int GaloisField::from_vector(const std::vector<int>& v) const {
    if (static_cast<int>(v.size()) != m_) throw ParseError("vector length must equal m");
    int s = 0;
    for (int i = m_ - 1; i >= 0; --i) {
        if (v[i] < 0 || v[i] >= p_) throw ParseError("vector entry out of range");
        s = s * p_ + v[i];
    }
    return log_sym_[s];
}

int GaloisField::parse(std::string_view tok) const {
    auto bad = [&](const char* why) {
        return ParseError(std::string("bad field token '") + std::string(tok) + "': " + why);
    };
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (tok.empty()) throw bad("empty");
    if (tok[0] == 't') {
        if (tok.size() == 1) return 1 % ord_;
        if (tok.size() < 3 || tok[1] != '^') throw bad("expected t^k");
        long long k = 0;
        auto body = tok.substr(2);
        auto res = std::from_chars(body.data(), body.data() + body.size(), k);
        if (res.ec != std::errc() || res.ptr != body.data() + body.size() || k < 0)
            throw bad("exponent must be a non-negative integer");
        return static_cast<int>(k % ord_);
    }
    long long c = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), c);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) throw bad("not 0, t^k or a literal");
    if (c < 0 || c >= p_) throw bad("literal must lie in 0..p-1");
    return from_int(c);
}

std::string GaloisField::format(int a) const {
    if (a < 0) return "0";
    if (a == 0) return "1";
    if (a == 1) return "t";
    return "t^" + std::to_string(a);
}

FieldElement FieldElement::t_pow(const FieldPtr& f, long long e) {
    return {f.get(), f->pow(f->order() == 1 ? 0 : 1, e)};
}

void FieldElement::check_same(const FieldElement& o) const {
    if (!f_ || !o.f_ || !f_->same_as(*o.f_))
        throw SpecMismatch("field elements from different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return {f_, f_->add(log_, o.log_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    return {f_, f_->sub(log_, o.log_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return {f_, f_->mul(log_, o.log_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    return {f_, f_->div(log_, o.log_)};
}
bool FieldElement::operator==(const FieldElement& o) const {
    check_same(o);
    return log_ == o.log_;
}

FieldElement ff_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement ff_inv(const FieldElement& a) { return a.inv(); }
FieldElement frobenius(const FieldElement& a, long long i) { return a.frobenius(i); }
FieldElement parse_element(const FieldPtr& f, std::string_view token) {
    return {f.get(), f->parse(token)};
}

}  // namespace dsc
