#pragma once

#include "howe/multipoly.hpp"

namespace howe {

struct VarietyPoint {
    FieldCtxPtr ctx;
    std::vector<FieldElement> coords; // indexed by variable
};

// All solutions of a zero-dimensional ideal over the algebraic closure, with
// every coordinate expressed in one common extension field (the smallest
// even-degree canonical field containing all of them). Method: lex Groebner
// basis, then recursive back-substitution from the least variable, factoring
// the univariate eliminant and branching per irreducible factor, extending
// the field for factors of degree > 1. Empty list for the unit ideal.
// Errors: NotZeroDimensional if the lex basis leaves a variable unbounded.
std::pair<std::vector<VarietyPoint>, FieldCtxPtr>
solve_zero_dimensional(const std::vector<MultiPoly>& gens, u32 nvars);

// number of monomials under the leading-term staircase (the k-dimension of
// the quotient ring); finite exactly when the ideal is zero-dimensional
u64 staircase_dimension(const std::vector<MultiPoly>& basis, u32 nvars);

} // namespace howe
