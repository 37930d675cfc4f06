#include "hautus/groebner.hpp"

#include "hautus/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hautus {

IdealBasis::IdealBasis(int nvars_in, std::vector<Poly> gens) : nvars(nvars_in) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.nvars() != nvars) throw std::invalid_argument("IdealBasis: mixed variable counts");
        generators.push_back(std::move(g));
    }
}

namespace {

Poly spoly(const Poly& f, const Poly& g, const MonomialOrder& order) {
    const auto [mf, cf] = f.leading_term(order);
    const auto [mg, cg] = g.leading_term(order);
    const Monomial l = mf.lcm_with(mg);
    return f.times_term(l.divided_by(mf), Rational(1) / cf) -
           g.times_term(l.divided_by(mg), Rational(1) / cg);
}

Poly reduce(const Poly& p, const std::vector<Poly>& basis, const MonomialOrder& order) {
    Poly rem(p.nvars());
    Poly work = p;
    while (!work.is_zero()) {
        const auto [wm, wc] = work.leading_term(order);
        bool reduced = false;
        for (const Poly& g : basis) {
            const auto [gm, gc] = g.leading_term(order);
            if (gm.divides(wm)) {
                work -= g.times_term(wm.divided_by(gm), wc / gc);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem += Poly::term(wm, wc);
            work -= Poly::term(wm, wc);
        }
    }
    return rem;
}

std::vector<Poly> interreduce(std::vector<Poly> basis, const MonomialOrder& order) {
    // minimal: drop elements whose leading term another one divides
    std::vector<Poly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        const Monomial mi = basis[i].leading_term(order).first;
        bool keep = true;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Monomial mj = basis[j].leading_term(order).first;
            if (mj.divides(mi) && (mi != mj || j < i)) {
                keep = false;
                break;
            }
        }
        if (keep) minimal.push_back(basis[i]);
    }
    // tails reduced, monic
    std::vector<Poly> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly r = others.empty() ? minimal[i] : reduce(minimal[i], others, order);
        if (r.is_zero()) continue; // duplicate generator
        out.push_back(r.scaled(Rational(1) / r.leading_term(order).second));
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
        return order.greater(a.leading_term(order).first, b.leading_term(order).first);
    });
    return out;
}

} // namespace

GroebnerBasis buchberger(const IdealBasis& ideal, const MonomialOrder& order) {
    if (ideal.is_zero_ideal())
        throw std::invalid_argument("buchberger: the zero ideal has no Groebner basis here");

    std::vector<Poly> g = ideal.generators;
    using Pair = std::pair<size_t, size_t>;
    std::set<Pair> pending;
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j) pending.insert({i, j});

    auto lt = [&](size_t i) { return g[i].leading_term(order).first; };

    while (!pending.empty()) {
        // normal selection: smallest lcm of leading terms
        auto best = pending.begin();
        Monomial best_lcm = lt(best->first).lcm_with(lt(best->second));
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = lt(it->first).lcm_with(lt(it->second));
            if (order.less(l, best_lcm)) {
                best = it;
                best_lcm = std::move(l);
            }
        }
        const auto [i, j] = *best;
        pending.erase(best);

        // product criterion: coprime leading terms reduce to zero
        if (lt(i).coprime_with(lt(j))) continue;

        // chain criterion: an element k dividing the lcm whose pairs with i
        // and j are both already handled makes this pair redundant
        const Monomial lcm_ij = lt(i).lcm_with(lt(j));
        bool redundant = false;
        for (size_t k = 0; k < g.size() && !redundant; ++k) {
            if (k == i || k == j) continue;
            if (!lt(k).divides(lcm_ij)) continue;
            const Pair ik{std::min(i, k), std::max(i, k)};
            const Pair jk{std::min(j, k), std::max(j, k)};
            if (!pending.count(ik) && !pending.count(jk)) redundant = true;
        }
        if (redundant) continue;

        const Poly r = reduce(spoly(g[i], g[j], order), g, order);
        if (r.is_zero()) continue;
        g.push_back(r);
        for (size_t k = 0; k + 1 < g.size(); ++k) pending.insert({k, g.size() - 1});
    }

    return GroebnerBasis{order, interreduce(std::move(g), order)};
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
    if (gb.elements.empty()) return p;
    return reduce(p, gb.elements, gb.order);
}

bool contains_one(const GroebnerBasis& gb) {
    return gb.elements.size() == 1 && gb.elements.front().is_constant() &&
           !gb.elements.front().is_zero();
}

int krull_dimension(const GroebnerBasis& gb, int nvars) {
    if (contains_one(gb)) return -1;
    if (gb.elements.empty()) return nvars;
    if (nvars > 24) throw std::invalid_argument("krull_dimension: too many variables");

    std::vector<unsigned> supports;
    for (const Poly& g : gb.elements) {
        const Monomial m = g.leading_term(gb.order).first;
        unsigned s = 0;
        for (int v = 0; v < nvars; ++v)
            if (m.exponent(v) > 0) s |= 1u << v;
        supports.push_back(s);
    }

    int best = 0;
    for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
        bool independent = true;
        for (unsigned s : supports)
            if ((s & ~mask) == 0) { // leading monomial supported inside the set
                independent = false;
                break;
            }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

int krull_dimension(const IdealBasis& ideal) {
    if (ideal.is_zero_ideal()) return ideal.nvars;
    return krull_dimension(buchberger(ideal, MonomialOrder::degrevlex()), ideal.nvars);
}

} // namespace hautus
