#pragma once

#include "howe/elliptic_quotients.hpp"

#include <optional>

namespace howe {

// Six finite ramification x-coordinates attached to one ordered admissible
// pair of elliptic quotients: the roots of the two cubic discriminants,
// each triple canonically sorted and the two triples canonically ordered
// (sound because the comparison quantifies over S3 x S3 x S2 anyway).
struct RamTuple {
    FieldCtxPtr ctx;
    std::array<FieldElement, 6> roots;
    u32 src_i = 0, src_j = 0; // provenance: indices into EQ(H)

    static bool canonical_less(const RamTuple& a, const RamTuple& b);
};

// coordinate package of one ordered admissible pair
struct AdmissiblePair {
    MultiPoly R1, R2;                  // P - L_i * Q over the quotient field
    std::array<FieldElement, 4> y_vec; // L1 - L2
    std::array<FieldElement, 4> x_vec; // first null-space vector independent of y
    std::array<FieldElement, 4> z_vec[2];
    std::array<FieldElement, 4> w_vec[2];
};

// absent when the pair is not admissible (some R_i is not quadratic in its
// z-coordinate); errors: DegenerateGeometry when L1 = L2
std::optional<AdmissiblePair> admissible_data(const MultiPoly& Q, const MultiPoly& P,
                                              const EllipticQuotient& U1,
                                              const EllipticQuotient& U2);

// ramification tuples of every ordered admissible pair, deduplicated, in
// canonical order over one common field (degenerate pairs skipped + logged)
std::pair<std::vector<RamTuple>, FieldCtxPtr>
compute_VH(const MultiPoly& Q, const MultiPoly& P,
           const std::vector<EllipticQuotient>& eq);

// true iff some arrangement (sigma, tau, swap) of v makes the 3x6 matrix
// [arranged v; v0; all-ones] have rank <= 2; errors: MixedContexts
bool rank_test(const RamTuple& v0, const RamTuple& v);

struct CurveRecord {
    HoweParams params;
    std::vector<RamTuple> vh;
    FieldCtxPtr field; // common field of the tuples
};

// canonical model -> EQ(H) -> V_H for one parameter tuple
CurveRecord build_record(const HoweParams& hp);

struct IsoClassification {
    std::vector<u32> class_of;        // record index -> class id
    std::vector<u32> representatives; // class id -> least record index
    u32 num_classes() const { return (u32)representatives.size(); }
};

// union-find classification: a record joins the first representative whose
// reference tuple matches one of its tuples (Frobenius conjugates of the
// candidate side included when the tuples live above F_{p^2});
// errors: EmptyVH when a record has no tuple
IsoClassification classify(const std::vector<CurveRecord>& records);

} // namespace howe
