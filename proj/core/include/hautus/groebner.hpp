#pragma once

#include "hautus/poly.hpp"

#include <vector>

namespace hautus {

// Generating set of an ideal in Q[d1..dn]. Zero generators are dropped; the
// zero ideal is the empty list.
struct IdealBasis {
    int nvars = 0;
    std::vector<Poly> generators;

    IdealBasis() = default;
    IdealBasis(int nvars_in, std::vector<Poly> gens);

    bool is_zero_ideal() const { return generators.empty(); }
};

// Reduced Groebner basis: monic elements, pairwise non-divisible leading
// terms, fully reduced tails; unique for (ideal, order). Elements are sorted
// by descending leading term.
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Poly> elements;
};

// Buchberger's algorithm with the product (coprime leading terms) and chain
// criteria, followed by interreduction. Errors on the zero ideal.
GroebnerBasis buchberger(const IdealBasis& ideal,
                         const MonomialOrder& order = MonomialOrder::degrevlex());

// Remainder of full multivariate division by the basis; zero iff p lies in
// the ideal when gb is a Groebner basis.
Poly normal_form(const Poly& p, const GroebnerBasis& gb);

bool contains_one(const GroebnerBasis& gb);

// Krull dimension of Q[d1..dn]/I — the size of the largest set of variables
// independent modulo the leading-term ideal of a degrevlex basis. By
// convention: -1 for the unit ideal, nvars for the zero ideal.
int krull_dimension(const IdealBasis& ideal);
int krull_dimension(const GroebnerBasis& degrevlex_gb, int nvars);

} // namespace hautus
