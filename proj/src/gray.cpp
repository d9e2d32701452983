#include "dsc/gray.hpp"

#include "dsc/error.hpp"

namespace dsc {

GrayMatrix make_gray(const FieldElement& n00, const FieldElement& n01, const FieldElement& n10,
                     const FieldElement& n11) {
    FieldElement eta = n00 * n00 + n01 * n01;
    FieldElement other = n10 * n10 + n11 * n11;
    FieldElement cross = n00 * n10 + n01 * n11;
    if (eta.is_zero()) throw StructuralError("Gray matrix has eta = 0");
    if (other != eta || !cross.is_zero()) throw StructuralError("Gray matrix does not satisfy N N^T = eta I");
    return {n00, n01, n10, n11, eta};
}

GrayMatrix default_n(const FieldPtr& f) {
    auto one = FieldElement::one(f);
    if (f->even()) {
        if (f->q() == 2) throw StructuralError("GF(2) has no default Gray matrix; supply N");
        auto t = FieldElement::t_pow(f, 1);
        return make_gray(one, t, t, one);
    }
    return make_gray(one, one, one, -one);
}

std::pair<FieldElement, FieldElement> phi(const RingElement& x, const GrayMatrix& n) {
    auto [c0, c1] = crt_split(x);
    return {c0 * n.n00 + c1 * n.n10, c0 * n.n01 + c1 * n.n11};
}

std::vector<int> phi_word(const std::vector<RingElement>& x, const GrayMatrix& n) {
    std::vector<int> out;
    out.reserve(2 * x.size());
    for (const auto& e : x) {
        auto [y0, y1] = phi(e, n);
        out.push_back(y0.log());
        out.push_back(y1.log());
    }
    return out;
}

int gray_weight(const std::vector<RingElement>& w, const GrayMatrix& n) {
    return hamming_weight(phi_word(w, n));
}

LinearCodeMatrix phi_matrix(const RMatrix& m, int width, const FieldPtr& f, const GrayMatrix& n) {
    LinearCodeMatrix out(f, 0, 2 * width);
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != width) throw StructuralError("R-matrix row width mismatch");
        out.append_row(phi_word(row, n));
    }
    return out;
}

}  // namespace dsc
