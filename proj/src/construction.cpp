#include "dsc/construction.hpp"

#include "dsc/error.hpp"

namespace dsc {

namespace {

// Interleaved (a_0 b_0 a_1 b_1 ...) to grouped (a_0 a_1 ... b_0 b_1 ...) over len coordinates, from first.
void append_grouped(std::vector<int>& perm, int first, int len) {
    for (int j = 0; j < len; ++j) perm.push_back(first + 2 * j);
    for (int j = 0; j < len; ++j) perm.push_back(first + 2 * j + 1);
}

}  // namespace

ConstructionInput construction_input(const DoubleCodeSpec& code, const GrayMatrix& n) {
    const FieldPtr& f = code.field;
    ConstructionInput inp{LinearCodeMatrix(f, 0, 2 * code.r), LinearCodeMatrix(f, 0, 2 * code.n())};
    int g_rows = (code.r - code.g_v.degree()) + (code.r - code.g_vp.degree());
    auto words = spanning_set(code);
    for (int k = 0; k < static_cast<int>(words.size()); ++k) {
        if (k < g_rows)
            inp.G.append_row(phi_word(words[k].left, n));
        else
            inp.LH.append_row(phi_word(words[k].concat(), n));
    }
    std::vector<int> left, both;
    append_grouped(left, 0, code.r);
    both = left;
    append_grouped(both, 2 * code.r, code.s);
    inp.G = inp.G.select_columns(left);
    inp.LH = inp.LH.select_columns(both);
    return inp;
}

LinearCodeMatrix build_construction(const ConstructionInput& inp, int r, int s) {
    if (inp.G.cols() != 2 * r) throw StructuralError("G must have width 2r");
    if (inp.LH.cols() != 2 * (r + s)) throw StructuralError("[L | H] must have width 2(r + s)");
    const FieldPtr& f = inp.LH.field();
    LinearCodeMatrix second;
    if (r == s) {
        second = inp.G;
    } else if (r < s) {
        second = inp.G.hconcat(LinearCodeMatrix(f, inp.G.rows(), 2 * (s - r)));
    } else {
        second = inp.G.column_range(0, 2 * s);
    }
    LinearCodeMatrix top = inp.G.hconcat(second);
    if (top.cols() != inp.LH.cols()) throw StructuralError("construction width mismatch");
    return top.vconcat(inp.LH);
}

ConstructionReport evaluate_construction(const DoubleCodeSpec& code, const GrayMatrix& n,
                                         const DistanceOptions& opt) {
    ConstructionReport rep;
    rep.n = 2 * code.n();
    LinearCodeMatrix plain = gray_generator(code, n);
    rep.matrix = build_construction(construction_input(code, n), code.r, code.s);
    rep.rows = rep.matrix.rows();
    rep.k_before = plain.rank();
    rep.k_after = rep.matrix.rank();
    if (rep.rows == 0) {
        rep.empty = true;
        return rep;
    }
    rep.before = min_distance_bz(plain, opt);
    rep.after = min_distance_bz(rep.matrix, opt);
    return rep;
}

}  // namespace dsc
