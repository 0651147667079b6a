#pragma once

#include "howe/cartier_manin.hpp"
#include "howe/curves.hpp"

namespace howe {

// One Howe curve as the parameter tuple (A1,B1,A2,B2,lambda,mu,nu) over
// F_{p^2}, with nu = 1 fixed throughout the search.
struct HoweParams {
    FieldElement A1, B1, A2, B2, lambda, mu, nu;

    static bool canonical_less(const HoweParams& a, const HoweParams& b);
    bool operator==(const HoweParams& o) const;
};

struct SearchOptions {
    bool ordered_pairs = false; // default fixed empirically against the
                                // published counts; see enumerate_howe
    bool early_stop = false;
    unsigned jobs = 1;
};

// the two defining cubics
UniPoly howe_f1(const HoweParams& hp);
UniPoly howe_f2(const HoweParams& hp);

// full solution set of "Cartier-Manin matrix = 0" with nu = 1, before the
// Howe-type filter: for each mu in F_{p^2}^x the symbolic entries are formed
// and the roots of gcd(a,b,c,d) in F_{p^2} collected; an identically zero
// gcd admits every lambda
std::vector<std::pair<FieldElement, FieldElement>>
solve_lambda_mu(const SupersingularEntry& e1, const SupersingularEntry& e2,
                const FieldCtxPtr& ctx, unsigned jobs = 1);

// scalar-mode sweep over all (lambda, mu), mu != 0; test oracle only
std::vector<std::pair<FieldElement, FieldElement>>
brute_force_lambda_mu(const SupersingularEntry& e1, const SupersingularEntry& e2,
                      const FieldCtxPtr& ctx);

// mu != 0, nu != 0 and Res_x(f1, f2) != 0
bool is_howe_type(const HoweParams& hp);

// the list H(p) in canonical order; with early_stop at most one element
std::vector<HoweParams> enumerate_howe(u32 p, const SearchOptions& opt = {});

// independent re-validation of one output tuple: catalog membership, Howe
// type, and vanishing scalar-mode Cartier-Manin entries
bool validate_howe_params(const HoweParams& hp);

} // namespace howe
