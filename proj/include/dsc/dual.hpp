#pragma once

#include <string>
#include <vector>

#include "dsc/double_code.hpp"

namespace dsc {

// xi_k(x^step) = sum_{j<k} x^{j*step}
SkewPoly xi(const FieldPtr& f, int i, int k, int step = 1);

// One CRT component of alpha o beta in F_q[x;theta]/(x^gamma - 1).
// A zero component of beta contributes nothing.
SkewPoly circle_component(const SkewPoly& a1, const SkewPoly& a2, const SkewPoly& b1, const SkewPoly& b2, int r,
                          int s);
// alpha = (a1 | a2), beta = (b1 | b2) in R_r x R_s.
RingSkewPoly circle(const RingSkewPoly& a1, const RingSkewPoly& a2, const RingSkewPoly& b1,
                    const RingSkewPoly& b2, int r, int s);

// beta is orthogonal to alpha and to every T-shift of alpha (R inner product).
bool orthogonal_to_shifts(const DoubleWord& alpha, const DoubleWord& beta, int i);
DoubleWord word_from_polys(const RingSkewPoly& left, const RingSkewPoly& right, int r, int s);

struct DualData {
    RingSkewPoly g_bar, l_bar, h_bar;
    DoubleCodeSpec code;      // <(g_bar | 0), (l_bar | h_bar)>
    LinearCodeMatrix parity;  // nullspace of the primal Gray generator
    int gamma = 0;
};

// Dual generators extracted by linear algebra per CRT component. A component
// whose left kernel is trivial gets g_bar = x^r - 1, likewise h_bar = x^s - 1.
DualData compute_dual(const DoubleCodeSpec& code, const GrayMatrix& n);
LinearCodeMatrix nullspace_dual(const DoubleCodeSpec& code, const GrayMatrix& n);

struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

// Degree identities for g_bar and h_bar per component.
std::vector<Check> degree_checks(const DoubleCodeSpec& code, const DualData& dual);

struct CardinalityExponents {
    int c_r = 0, c_s = 0;            // C_r, C_s
    int dual_r = 0, dual_s = 0;      // (C^perp)_r, (C^perp)_s
    int c_r_perp = 0, c_s_perp = 0;  // (C_r)^perp, (C_s)^perp
    bool operator==(const CardinalityExponents&) const = default;
};
CardinalityExponents cardinality_formulas(const DoubleCodeSpec& code);
CardinalityExponents cardinality_ranks(const DoubleCodeSpec& code, const GrayMatrix& n);

// Closed forms for the dual generators, compared with the computed ones.
// "reciprocal": monic reciprocal of the cofactor of the kernel generators.
// "printed": the quotients built from theta-twisted reciprocals of g, l and j.
std::vector<Check> formula_checks(const DoubleCodeSpec& code, const DualData& dual);

// Orthogonality of every dual spanning word to every T-shift of every primal spanning word.
bool dual_orthogonal_to_shifts(const DoubleCodeSpec& code, const DualData& dual);

}  // namespace dsc
