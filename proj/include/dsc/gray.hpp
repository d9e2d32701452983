#pragma once

#include <utility>
#include <vector>

#include "dsc/field.hpp"
#include "dsc/linear_code.hpp"
#include "dsc/ring.hpp"

namespace dsc {

using RMatrix = std::vector<std::vector<RingElement>>;

// 2x2 matrix N over F_q with N N^T = eta I_2, eta != 0.
struct GrayMatrix {
    FieldElement n00, n01, n10, n11;
    FieldElement eta;

    const GaloisField& field() const { return n00.field(); }
};

// Validates N N^T = eta I_2 with eta nonzero.
GrayMatrix make_gray(const FieldElement& n00, const FieldElement& n01, const FieldElement& n10,
                     const FieldElement& n11);
// [[1, t], [t, 1]] in characteristic 2 (needs q > 2), [[1, 1], [1, -1]] otherwise.
GrayMatrix default_n(const FieldPtr& f);

std::pair<FieldElement, FieldElement> phi(const RingElement& x, const GrayMatrix& n);
// (x_0 N, x_1 N, ...) as logs, length 2 * x.size()
std::vector<int> phi_word(const std::vector<RingElement>& x, const GrayMatrix& n);
int gray_weight(const std::vector<RingElement>& w, const GrayMatrix& n);
LinearCodeMatrix phi_matrix(const RMatrix& m, int width, const FieldPtr& f, const GrayMatrix& n);

}  // namespace dsc
