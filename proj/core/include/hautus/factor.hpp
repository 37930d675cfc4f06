#pragma once

#include "hautus/poly.hpp"

#include <utility>
#include <vector>

namespace hautus {

// A factor with its multiplicity. Factors are primitive with positive
// leading (degrevlex) coefficient.
using FactorList = std::vector<std::pair<Poly, int>>;

// Square-free decomposition over Q: p = const * prod factor^multiplicity with
// each factor square-free and the factors pairwise coprime. Contents with
// respect to the recursion variable are split off and decomposed separately,
// so d1^2*d2 comes back as [(d1,2),(d2,1)], not [(d1^2*d2-ish, ...)].
// Requires p nonzero and non-constant. No irreducibility is promised for
// multivariate factors; use univariate_factor to split univariate ones.
FactorList squarefree_decomposition(const Poly& p);

// Full factorization into irreducibles over Q for polynomials involving at
// most one variable. Constants yield an empty list; multivariate input is an
// error. Square-free reduction, then rational-root extraction; root-free
// remainders of degree <= 3 are irreducible outright, higher degrees go
// through a Kronecker interpolation search (exact, desk-scale).
FactorList univariate_factor(const Poly& p);

} // namespace hautus
