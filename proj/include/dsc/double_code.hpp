#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dsc/gray.hpp"
#include "dsc/linear_code.hpp"
#include "dsc/skew_poly.hpp"

namespace dsc {

// C = <(g | 0), (l | h)> in R_r x R_s, stored by the six CRT components.
struct DoubleCodeSpec {
    FieldPtr field;
    int i = 1;
    int r = 0;
    int s = 0;
    SkewPoly g_v, g_vp, l_v, l_vp, h_v, h_vp;

    RingSkewPoly g() const { return {g_v, g_vp}; }
    RingSkewPoly l() const { return {l_v, l_vp}; }
    RingSkewPoly h() const { return {h_v, h_vp}; }
    int n() const { return r + s; }

    // g = x^r - 1, l = 0, h = x^s - 1
    static DoubleCodeSpec zero_code(const FieldPtr& f, int i, int r, int s);
    // g = 1, l = 0, h = 1
    static DoubleCodeSpec full_code(const FieldPtr& f, int i, int r, int s);
};

enum class ConditionKind {
    Generator,   // monic generators dividing x^n - 1
    NormalForm,  // deg l < deg g per component
    Closure,     // g |_r ((x^s - 1)/h) l per component
    Derived,     // consequences of closure, reported for inspection
};

struct Condition {
    std::string name;
    ConditionKind kind;
    bool ok;
    std::string detail;  // offending remainder when the check fails
};

struct ValidationReport {
    std::vector<Condition> conditions;

    bool valid() const;         // every Generator condition holds
    bool shift_closed() const;  // every Closure condition holds
    const Condition* find(const std::string& name) const;
    std::string str() const;
};

ValidationReport validate(const DoubleCodeSpec& code);
// Replaces l by its right remainder modulo g in each component.
DoubleCodeSpec normalize_l(const DoubleCodeSpec& code);

struct DoubleWord {
    std::vector<RingElement> left;
    std::vector<RingElement> right;

    std::vector<RingElement> concat() const;
    bool operator==(const DoubleWord& o) const { return left == o.left && right == o.right; }
};

// (theta(c_{r-1}), theta(c_0), ..., | theta(c'_{s-1}), theta(c'_0), ...)
DoubleWord t_shift(const DoubleWord& w, int i);
std::vector<DoubleWord> spanning_set(const DoubleCodeSpec& code);
RMatrix generator_matrix_R(const DoubleCodeSpec& code);
// Gray image of the spanning set, (spanning count) x 2(r+s).
LinearCodeMatrix gray_generator(const DoubleCodeSpec& code, const GrayMatrix& n);
int spanning_count(const DoubleCodeSpec& code);

// Exponents e with |X| = q^e.
struct Cardinality {
    int q = 0;
    int code = 0;
    int left = 0;   // C_r
    int right = 0;  // C_s
};
Cardinality cardinality(const DoubleCodeSpec& code);

// Generators of the punctured codes C_r and C_s.
std::pair<RingSkewPoly, RingSkewPoly> punctured_generators(const DoubleCodeSpec& code);

bool contains(const DoubleCodeSpec& code, const DoubleWord& w, const GrayMatrix& n);
// Every spanning word's T-shift lies in the span of the spanning set.
bool is_shift_closed(const DoubleCodeSpec& code, const GrayMatrix& n);

// Random code with g_v, g_v' |_r x^r - 1, h_v, h_v' |_r x^s - 1 and l chosen
// so that every closure condition holds. Divisors come from exhaustive
// search, so q^deg must stay small.
DoubleCodeSpec random_closed_code(const FieldPtr& f, int i, int r, int s, std::mt19937_64& rng);
// Random l with deg l < deg g and g |_r (q l mod x^r - 1), drawn uniformly from the
// F_p-space of solutions.
SkewPoly random_closed_l(const SkewPoly& g, const SkewPoly& q, int r, std::mt19937_64& rng);

// Left quotient (x^n - 1) / f, i.e. the Q with x^n - 1 = Q f.
SkewPoly cofactor(const SkewPoly& f, int n);

}  // namespace dsc
