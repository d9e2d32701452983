#pragma once

#include <string>

#include "dsc/distance.hpp"
#include "dsc/double_code.hpp"

namespace dsc {

// Columns are grouped per block: the first Gray coordinates of a block, then
// the second ones. This is the layout of the printed G' matrices and fixes
// which columns the r > s truncation keeps.
struct ConstructionInput {
    LinearCodeMatrix G;   // Gray image of the x^k g_v v and x^k g_v' v' rows, width 2r
    LinearCodeMatrix LH;  // Gray image of the (l | h) spanning rows, width 2(r + s)
};

ConstructionInput construction_input(const DoubleCodeSpec& code, const GrayMatrix& n);

// r = s: [[G, G], [L, H]]
// r < s: [[G, G1], [L, H]], G1 = G zero-padded on the right to width 2s
// r > s: [[G, G2], [L, H]], G2 = first 2s columns of G
LinearCodeMatrix build_construction(const ConstructionInput& inp, int r, int s);

struct ConstructionReport {
    int n = 0;
    int rows = 0;
    int k_before = 0;
    int k_after = 0;
    DistanceResult before;
    DistanceResult after;
    LinearCodeMatrix matrix;  // G'
    bool empty = false;
};

ConstructionReport evaluate_construction(const DoubleCodeSpec& code, const GrayMatrix& n,
                                         const DistanceOptions& opt = {});

}  // namespace dsc
