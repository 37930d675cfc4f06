// Groebner machinery for submodules of a free module, position-over-term
// order. Unlike the scalar case, Buchberger runs without pair-skipping
// criteria: the product criterion is unsound for modules, and the syzygy
// collection behind colon_against_unit_vector needs every same-position
// S-pair's standard representation anyway (Schreyer). Inputs here are rows
// of small matrices, so the lost pruning is irrelevant.

#include "hautus/module_groebner.hpp"

#include "hautus/errors.hpp"
#include "hautus/polymatrix.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace hautus {

VectorPoly::VectorPoly(int nvars_in, int rank)
    : nvars(nvars_in), components(static_cast<size_t>(rank), Poly(nvars_in)) {
    if (rank < 1) throw std::invalid_argument("VectorPoly: rank must be positive");
}

VectorPoly::VectorPoly(int nvars_in, std::vector<Poly> comps)
    : nvars(nvars_in), components(std::move(comps)) {
    if (components.empty()) throw std::invalid_argument("VectorPoly: rank must be positive");
    for (const Poly& p : components)
        if (p.nvars() != nvars) throw std::invalid_argument("VectorPoly: mixed variable counts");
}

VectorPoly VectorPoly::unit(int nvars, int rank, int pos) {
    VectorPoly v(nvars, rank);
    if (pos < 0 || pos >= rank) throw std::invalid_argument("VectorPoly::unit: bad position");
    v.components[static_cast<size_t>(pos)] = Poly::constant(nvars, 1);
    return v;
}

bool VectorPoly::is_zero() const {
    return std::all_of(components.begin(), components.end(),
                       [](const Poly& p) { return p.is_zero(); });
}

VectorPoly VectorPoly::operator+(const VectorPoly& o) const {
    if (rank() != o.rank()) throw std::invalid_argument("VectorPoly: rank mismatch");
    VectorPoly r = *this;
    for (size_t i = 0; i < components.size(); ++i) r.components[i] += o.components[i];
    return r;
}

VectorPoly VectorPoly::operator-(const VectorPoly& o) const {
    if (rank() != o.rank()) throw std::invalid_argument("VectorPoly: rank mismatch");
    VectorPoly r = *this;
    for (size_t i = 0; i < components.size(); ++i) r.components[i] -= o.components[i];
    return r;
}

VectorPoly VectorPoly::scaled_by(const Poly& f) const {
    VectorPoly r = *this;
    for (Poly& c : r.components) c *= f;
    return r;
}

VectorPoly VectorPoly::times_term(const Monomial& m, const Rational& c) const {
    VectorPoly r = *this;
    for (Poly& p : r.components) p = p.times_term(m, c);
    return r;
}

SubmoduleBasis::SubmoduleBasis(int nvars_in, int rank_in, std::vector<VectorPoly> gens)
    : nvars(nvars_in), rank(rank_in) {
    if (rank < 1) throw std::invalid_argument("SubmoduleBasis: rank must be positive");
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.nvars != nvars || g.rank() != rank)
            throw std::invalid_argument("SubmoduleBasis: generator shape mismatch");
        generators.push_back(std::move(g));
    }
}

SubmoduleBasis SubmoduleBasis::row_module(const PolyMatrix& m) {
    std::vector<VectorPoly> gens;
    for (int i = 0; i < m.rows(); ++i) gens.emplace_back(m.nvars(), m.row(i));
    return SubmoduleBasis(m.nvars(), m.cols(), std::move(gens));
}

namespace {

struct ModTerm {
    int pos;
    Monomial mon;
    Rational coeff;
};

// Position-over-term: lower positions dominate; degrevlex inside a position.
std::optional<ModTerm> leading_module_term(const VectorPoly& v) {
    for (size_t p = 0; p < v.components.size(); ++p) {
        if (v.components[p].is_zero()) continue;
        const auto [m, c] = v.components[p].leading_term();
        return ModTerm{static_cast<int>(p), m, c};
    }
    return std::nullopt;
}

bool lead_greater(const ModTerm& a, const ModTerm& b) {
    if (a.pos != b.pos) return a.pos < b.pos;
    return degrevlex_cmp(a.mon, b.mon) > 0;
}

// A generator with the combination that produced it: v == sum cof[i]*input_i.
struct Tracked {
    VectorPoly v;
    std::vector<Poly> cof;
};

struct Reduction {
    VectorPoly remainder;
    std::vector<Poly> cof; // updated combination for remainder
};

Reduction reduce_tracked(VectorPoly work, std::vector<Poly> cof,
                         const std::vector<Tracked>& basis) {
    VectorPoly rem(work.nvars, work.rank());
    while (!work.is_zero()) {
        const ModTerm lt = *leading_module_term(work);
        bool hit = false;
        for (const Tracked& g : basis) {
            const ModTerm glt = *leading_module_term(g.v);
            if (glt.pos != lt.pos || !glt.mon.divides(lt.mon)) continue;
            const Monomial q = lt.mon.divided_by(glt.mon);
            const Rational c = lt.coeff / glt.coeff;
            work = work - g.v.times_term(q, c);
            for (size_t i = 0; i < cof.size(); ++i) cof[i] -= g.cof[i].times_term(q, c);
            hit = true;
            break;
        }
        if (!hit) {
            Poly t = Poly::term(lt.mon, lt.coeff);
            rem.components[static_cast<size_t>(lt.pos)] += t;
            work.components[static_cast<size_t>(lt.pos)] -= t;
        }
    }
    return {std::move(rem), std::move(cof)};
}

// Runs Buchberger over the inputs, tracking combinations. Appends every
// syzygy discovered through S-pairs that reduce to zero.
std::vector<Tracked> tracked_buchberger(const std::vector<VectorPoly>& inputs,
                                        std::vector<std::vector<Poly>>* syzygies) {
    const int nvars = inputs.front().nvars;
    const size_t m = inputs.size();

    std::vector<Tracked> g;
    for (size_t i = 0; i < m; ++i) {
        std::vector<Poly> cof(m, Poly(nvars));
        cof[i] = Poly::constant(nvars, 1);
        g.push_back({inputs[i], std::move(cof)});
    }

    std::vector<std::pair<size_t, size_t>> pending;
    auto add_pairs = [&](size_t fresh) {
        const ModTerm lt = *leading_module_term(g[fresh].v);
        for (size_t i = 0; i < fresh; ++i)
            if (leading_module_term(g[i].v)->pos == lt.pos) pending.push_back({i, fresh});
    };
    for (size_t i = 0; i < g.size(); ++i) add_pairs(i);

    while (!pending.empty()) {
        const auto [i, j] = pending.back();
        pending.pop_back();
        const ModTerm li = *leading_module_term(g[i].v);
        const ModTerm lj = *leading_module_term(g[j].v);
        const Monomial l = li.mon.lcm_with(lj.mon);

        const Monomial qi = l.divided_by(li.mon);
        const Monomial qj = l.divided_by(lj.mon);
        VectorPoly s = g[i].v.times_term(qi, Rational(1) / li.coeff) -
                       g[j].v.times_term(qj, Rational(1) / lj.coeff);
        std::vector<Poly> cof(m, Poly(nvars));
        for (size_t t = 0; t < m; ++t)
            cof[t] = g[i].cof[t].times_term(qi, Rational(1) / li.coeff) -
                     g[j].cof[t].times_term(qj, Rational(1) / lj.coeff);

        Reduction red = reduce_tracked(std::move(s), std::move(cof), g);
        if (red.remainder.is_zero()) {
            if (syzygies) syzygies->push_back(std::move(red.cof));
            continue;
        }
        g.push_back({std::move(red.remainder), std::move(red.cof)});
        add_pairs(g.size() - 1);
    }
    return g;
}

std::vector<VectorPoly> interreduce_module(std::vector<VectorPoly> basis) {
    std::vector<VectorPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        const ModTerm li = *leading_module_term(basis[i]);
        bool keep = true;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const ModTerm lj = *leading_module_term(basis[j]);
            if (lj.pos != li.pos || !lj.mon.divides(li.mon)) continue;
            if (li.mon != lj.mon || j < i) {
                keep = false;
                break;
            }
        }
        if (keep) minimal.push_back(basis[i]);
    }

    std::vector<VectorPoly> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Tracked> others;
        std::vector<Poly> dummy;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back({minimal[j], dummy});
        Reduction red = reduce_tracked(minimal[i], {}, others);
        if (red.remainder.is_zero()) continue;
        const ModTerm lt = *leading_module_term(red.remainder);
        out.push_back(red.remainder.times_term(Monomial(red.remainder.nvars),
                                               Rational(1) / lt.coeff));
    }
    std::sort(out.begin(), out.end(), [](const VectorPoly& a, const VectorPoly& b) {
        return lead_greater(*leading_module_term(a), *leading_module_term(b));
    });
    return out;
}

} // namespace

ModuleGroebnerBasis module_buchberger(const SubmoduleBasis& m) {
    ModuleGroebnerBasis out;
    out.nvars = m.nvars;
    out.rank = m.rank;
    if (m.generators.empty()) return out; // zero module: empty basis
    std::vector<Tracked> g = tracked_buchberger(m.generators, nullptr);
    std::vector<VectorPoly> vs;
    vs.reserve(g.size());
    for (auto& t : g) vs.push_back(std::move(t.v));
    out.elements = interreduce_module(std::move(vs));
    return out;
}

VectorPoly module_normal_form(const VectorPoly& v, const ModuleGroebnerBasis& gb) {
    if (v.rank() != gb.rank && gb.rank != 0)
        throw std::invalid_argument("module_normal_form: rank mismatch");
    if (gb.elements.empty()) return v;
    std::vector<Tracked> basis;
    std::vector<Poly> dummy;
    for (const VectorPoly& e : gb.elements) basis.push_back({e, dummy});
    return reduce_tracked(v, {}, basis).remainder;
}

bool module_membership(const VectorPoly& v, const ModuleGroebnerBasis& gb) {
    if (v.is_zero()) return true;
    return module_normal_form(v, gb).is_zero();
}

IdealBasis colon_against_unit_vector(const SubmoduleBasis& m, int j) {
    if (j < 0 || j >= m.rank)
        throw std::invalid_argument("colon_against_unit_vector: bad coordinate");

    std::vector<VectorPoly> inputs;
    inputs.push_back(VectorPoly::unit(m.nvars, m.rank, j));
    for (const VectorPoly& g : m.generators) inputs.push_back(g);

    std::vector<std::vector<Poly>> syzygies;
    std::vector<Tracked> gb = tracked_buchberger(inputs, &syzygies);

    // Relations from re-expressing each input through the basis: the rows of
    // (Id - Q*A) complete the S-pair syzygies to a generating set.
    for (size_t mu = 0; mu < inputs.size(); ++mu) {
        std::vector<Poly> neg_qa(inputs.size(), Poly(m.nvars));
        // reduce input_mu to zero, accumulating -q*A into the combination row
        VectorPoly work = inputs[mu];
        while (!work.is_zero()) {
            const ModTerm lt = *leading_module_term(work);
            bool hit = false;
            for (const Tracked& u : gb) {
                const ModTerm ult = *leading_module_term(u.v);
                if (ult.pos != lt.pos || !ult.mon.divides(lt.mon)) continue;
                const Monomial q = lt.mon.divided_by(ult.mon);
                const Rational c = lt.coeff / ult.coeff;
                work = work - u.v.times_term(q, c);
                for (size_t t = 0; t < neg_qa.size(); ++t)
                    neg_qa[t] -= u.cof[t].times_term(q, c);
                hit = true;
                break;
            }
            if (!hit)
                throw invariant_violation(
                    "colon_against_unit_vector: input does not reduce to zero by its own basis");
        }
        std::vector<Poly> row = std::move(neg_qa);
        row[mu] += Poly::constant(m.nvars, 1);
        syzygies.push_back(std::move(row));
    }

    std::vector<Poly> gens;
    for (const auto& z : syzygies)
        if (!z.front().is_zero()) gens.push_back(z.front());
    return IdealBasis(m.nvars, std::move(gens));
}

} // namespace hautus
