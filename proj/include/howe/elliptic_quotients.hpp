#pragma once

#include "howe/canonical_model.hpp"
#include "howe/variety.hpp"

#include <array>

namespace howe {

// One degree-2 elliptic quotient of a canonical genus-4 curve: the hyperplane
// datum a, the linear-form datum b with R = P - (b.x+...)Q landing in the
// 3-space spanned by the first three basis rows, and the change of basis
// (X,Y,Z,W) = (x,y,z,w) * basis^T (rows of `basis` give X,Y,Z,W).
struct EllipticQuotient {
    FieldCtxPtr ctx;
    std::array<FieldElement, 4> a_vec;
    std::array<FieldElement, 4> b_vec;
    std::array<std::array<FieldElement, 4>, 4> basis;
    char case_tag = '?';
    MultiPoly cubic; // R rewritten in X,Y,Z (4-var ring, W absent)
};

// polynomial system for one normalization case 'A'..'D' in the parameter
// ring a1 > a2 > a3 > b1 > b2 > b3 > b4: the ten W-monomial coefficients of
// R = P - (b1 x + b2 y + b3 z + b4 w) Q after the case's coordinate change,
// plus the case's pinning constraints
std::vector<MultiPoly> case_system(const MultiPoly& Q, const MultiPoly& P, char tag);

// all elliptic quotients together with the common field K_H holding them
std::pair<std::vector<EllipticQuotient>, FieldCtxPtr>
compute_EQ(const MultiPoly& Q, const MultiPoly& P);

} // namespace howe
