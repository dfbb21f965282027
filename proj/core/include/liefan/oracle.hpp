#pragma once

#include "liefan/algebra.hpp"

#include <map>

namespace liefan {

/// Full weight diagram of a finite-dimensional module, Weyl-invariant.
struct FiniteModuleDiagram {
    std::map<Weight, Int, Weight::Less> multiplicities;
    Weight highest_weight;
    Int dimension;
};

/// Independent validation oracle: the classical inner-product recursion for
/// weight multiplicities, iterating down the dominant weights and extending
/// by Weyl invariance. Never used by the main engine.
FiniteModuleDiagram freudenthal(const AlgebraSpec& spec, const Weight& mu);

/// prod over positive roots of (mu+rho|alpha)/(rho|alpha), as an exact
/// integer. Throws if the product is not integral (bad spec).
Int weyl_dimension(const AlgebraSpec& spec, const Weight& mu);

} // namespace liefan
