#pragma once

#include "howe/unipoly.hpp"

namespace howe {

// Cartier-Manin entries of the genus-2 curve u^2 = f1(x) f2(x): the four
// coefficients gamma_{p-1}, gamma_{2p-1}, gamma_{p-2}, gamma_{2p-2} of
// f^((p-1)/2). Scalar mode works for concrete (lambda, mu, nu); symbolic
// mode keeps lambda as a variable, producing polynomials in lambda.

struct CMScalar {
    FieldElement a, b, c, d;
    bool all_zero() const {
        return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero();
    }
};

struct CMSymbolic {
    UniPoly a, b, c, d; // polynomials in lambda over F_{p^2}
};

// f1(x) f2(x) with f1 = x^3 + A1 mu^2 x + B1 mu^3 and
// f2 = (x - lambda)^3 + A2 nu^2 (x - lambda) + B2 nu^3.
// Errors: DegenerateParams when mu or nu vanishes.
UniPoly sextic_scalar(const FieldElement& A1, const FieldElement& B1,
                      const FieldElement& A2, const FieldElement& B2,
                      const FieldElement& lambda, const FieldElement& mu,
                      const FieldElement& nu);

// same product with lambda symbolic: x-major list of lambda-polynomials,
// entry i the coefficient of x^i
std::vector<UniPoly> sextic_symbolic(const FieldElement& A1, const FieldElement& B1,
                                     const FieldElement& A2, const FieldElement& B2,
                                     const FieldElement& mu, const FieldElement& nu);

// coefficients of f(x)^((p-1)/2) at the requested x-exponents; generic in
// deg f, so the degree-3 Legendre case serves as the 1x1 elliptic analogue
std::vector<FieldElement> gamma_coeffs(const UniPoly& f, const std::vector<u32>& targets);
std::vector<UniPoly> gamma_coeffs_symbolic(const std::vector<UniPoly>& f_by_x,
                                           const std::vector<u32>& targets);

CMScalar cm_entries_scalar(const UniPoly& f);
CMSymbolic cm_entries_symbolic(const std::vector<UniPoly>& f_by_x);

// evaluate the symbolic entries at a concrete lambda
CMScalar cm_specialize(const CMSymbolic& sym, const FieldElement& lambda);

} // namespace howe
