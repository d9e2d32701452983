#pragma once

#include <random>
#include <vector>

#include "dsc/field.hpp"
#include "dsc/skew_poly.hpp"

namespace oracle {

// Field arithmetic on coefficient vectors, reduced by the defining modulus.
struct VecField {
    int p;
    std::vector<int> mod;  // low to high, monic

    std::vector<int> add(std::vector<int> a, const std::vector<int>& b) const {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % p;
        return a;
    }
    std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b) const {
        int m = static_cast<int>(mod.size()) - 1;
        std::vector<int> c(2 * m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
        for (int d = 2 * m - 1; d >= m; --d) {
            int lead = c[d];
            if (!lead) continue;
            for (int k = 0; k <= m; ++k) c[d - m + k] = ((c[d - m + k] - lead * mod[k]) % p + p) % p;
        }
        c.resize(m);
        return c;
    }
};

// sum_{a,b} f_a theta^a(g_b) x^{a+b}, coefficients as logs.
inline std::vector<int> naive_skew_mul(const dsc::GaloisField& f, int i, const std::vector<int>& a,
                                       const std::vector<int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> c(a.size() + b.size() - 1, dsc::GaloisField::ZERO);
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < b.size(); ++y)
            c[x + y] = f.add(c[x + y], f.mul(a[x], f.frob(b[y], static_cast<long long>(i) * x)));
    while (!c.empty() && c.back() < 0) c.pop_back();
    return c;
}

inline int random_log(const dsc::GaloisField& f, std::mt19937_64& rng) {
    return static_cast<int>(rng() % f.q()) - 1;
}

inline dsc::SkewPoly random_poly(const dsc::FieldPtr& f, int i, int max_deg, std::mt19937_64& rng) {
    int d = static_cast<int>(rng() % (max_deg + 1));
    std::vector<int> c(d + 1);
    for (int& x : c) x = random_log(*f, rng);
    return dsc::SkewPoly(f, i, c);
}

inline dsc::SkewPoly random_monic(const dsc::FieldPtr& f, int i, int deg, std::mt19937_64& rng) {
    std::vector<int> c(deg + 1);
    for (int& x : c) x = random_log(*f, rng);
    c[deg] = 0;
    return dsc::SkewPoly(f, i, c);
}

}  // namespace oracle
