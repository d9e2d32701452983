#include "dsc/table.hpp"

#include "dsc/construction.hpp"

namespace dsc {

namespace {

bool consistent(const DistanceResult& d, int want) { return !d.empty && d.lower <= want && want <= d.upper; }

}  // namespace

const char* to_string(RowStatus s) {
    switch (s) {
        case RowStatus::Match: return "match";
        case RowStatus::Bounded: return "bounded";
        case RowStatus::Contradiction: return "contradiction";
        case RowStatus::Invalid: return "invalid";
    }
    return "?";
}

RowOutcome evaluate_row(const TableRow& row, const DistanceOptions& opt) {
    RowOutcome o;
    o.label = row.label;
    o.expect_n = row.n;
    o.expect_k = row.k;
    o.expect_d = row.d;
    DoubleCodeSpec code = row.job.code();
    ValidationReport rep = validate(code);
    if (!rep.valid()) return o;
    o.shift_closed = rep.shift_closed();
    code = normalize_l(code);
    GrayMatrix n = row.job.gray_matrix();
    LinearCodeMatrix g = gray_generator(code, n);
    o.n = g.cols();
    o.k = g.rank();
    o.plain = min_distance_bz(g, opt);
    o.path = "plain";
    if (o.n != row.n || o.k != row.k) {
        o.status = RowStatus::Contradiction;
        return o;
    }
    if (o.plain.exact && o.plain.upper == row.d) {
        o.status = RowStatus::Match;
        return o;
    }
    LinearCodeMatrix gp = build_construction(construction_input(code, n), code.r, code.s);
    bool same_k = gp.rank() == row.k;
    o.construction_run = true;
    o.construction = min_distance_bz(gp, opt);
    if (same_k && o.construction.exact && o.construction.upper == row.d) {
        o.status = RowStatus::Match;
        o.path = "construction";
    } else if (same_k && consistent(o.construction, row.d)) {
        o.status = RowStatus::Bounded;
        o.path = "construction";
    } else if (consistent(o.plain, row.d)) {
        o.status = RowStatus::Bounded;
    } else {
        o.status = RowStatus::Contradiction;
        o.path = "none";
    }
    return o;
}

}  // namespace dsc
