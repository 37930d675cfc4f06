#pragma once

#include "hautus/groebner.hpp"
#include "hautus/poly.hpp"

#include <vector>

namespace hautus {

// Element of the free module Q[d1..dn]^rank.
struct VectorPoly {
    int nvars = 0;
    std::vector<Poly> components;

    VectorPoly() = default;
    VectorPoly(int nvars_in, int rank);
    VectorPoly(int nvars_in, std::vector<Poly> comps);

    static VectorPoly unit(int nvars, int rank, int pos);

    int rank() const { return static_cast<int>(components.size()); }
    bool is_zero() const;

    VectorPoly operator+(const VectorPoly& o) const;
    VectorPoly operator-(const VectorPoly& o) const;
    VectorPoly scaled_by(const Poly& f) const;
    VectorPoly times_term(const Monomial& m, const Rational& c) const;

    friend bool operator==(const VectorPoly& a, const VectorPoly& b) {
        return a.nvars == b.nvars && a.components == b.components;
    }
};

// Generators of a submodule of Q[d1..dn]^rank; zero vectors are dropped.
struct SubmoduleBasis {
    int nvars = 0;
    int rank = 0;
    std::vector<VectorPoly> generators;

    SubmoduleBasis() = default;
    SubmoduleBasis(int nvars_in, int rank_in, std::vector<VectorPoly> gens);

    // Row module of a matrix: one generator per row, ambient rank = cols.
    static SubmoduleBasis row_module(const class PolyMatrix& m);
};

// Reduced module Groebner basis under position-over-term (e_1 > e_2 > ...)
// with degrevlex on monomials.
struct ModuleGroebnerBasis {
    int nvars = 0;
    int rank = 0;
    std::vector<VectorPoly> elements;
};

ModuleGroebnerBasis module_buchberger(const SubmoduleBasis& m);

VectorPoly module_normal_form(const VectorPoly& v, const ModuleGroebnerBasis& gb);
bool module_membership(const VectorPoly& v, const ModuleGroebnerBasis& gb);

// The ideal {a in Q[d1..dn] : a*e_j lies in the module M}, computed from a
// generating set of syzygies of (e_j, generators of M): the first components
// of those syzygies generate exactly this ideal. j is 0-based.
IdealBasis colon_against_unit_vector(const SubmoduleBasis& m, int j);

} // namespace hautus
