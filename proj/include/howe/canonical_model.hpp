#pragma once

#include "howe/howe_search.hpp"
#include "howe/multipoly.hpp"

namespace howe {

// Projective coordinate ring k[x,y,z,w] with x > y > z > w.
inline constexpr u32 kVarX = 0, kVarY = 1, kVarZ = 2, kVarW = 3;

// The genus-4 canonical model V(Q, P) of a Howe curve:
//   Q = z^2 - w^2 - q(x, y),  P = z^2 y - f1h(x, y)
struct CanonicalModel {
    MultiPoly Q;
    MultiPoly P;
    HoweParams params;
};

// q(x,y) = (f1h - f2h)/y, as a quadratic form in the 4-variable ring
MultiPoly q_form(const HoweParams& hp);

// errors: NotHoweType
CanonicalModel canonical(const HoweParams& hp);

} // namespace howe
