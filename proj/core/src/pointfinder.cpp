#include "hautus/pointfinder.hpp"

#include "hautus/errors.hpp"
#include "hautus/factor.hpp"
#include "hautus/rng.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hautus {

PointAnswer PointAnswer::yes(std::vector<Rational> pt, std::string cert) {
    return {PointStatus::Yes, std::move(pt), std::move(cert), ""};
}
PointAnswer PointAnswer::yes_uncarried(std::string cert) {
    return {PointStatus::Yes, std::nullopt, std::move(cert), ""};
}
PointAnswer PointAnswer::no(std::string cert) {
    return {PointStatus::No, std::nullopt, std::move(cert), ""};
}
PointAnswer PointAnswer::unknown(std::string effort) {
    return {PointStatus::Unknown, std::nullopt, "", std::move(effort)};
}

namespace {

void validate_input(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("pointfinder: zero polynomial");
    if (p.is_constant()) throw std::invalid_argument("pointfinder: constant polynomial");
    // square-free test: gcd(p, all partials) must be constant
    Poly g = p;
    for (int v : p.variables_present()) g = poly_gcd(g, p.partial_derivative(v));
    if (!g.is_constant())
        throw std::invalid_argument("pointfinder: input is not square-free");
}

struct Budget {
    long remaining;
    bool spend() { return remaining-- > 0; }
};

// Point in the full ambient space with the present variables assigned and
// every other coordinate zero.
std::vector<Rational> embed(int nvars, const std::vector<int>& vars,
                            const std::vector<Rational>& coords) {
    std::vector<Rational> pt(static_cast<size_t>(nvars), Rational(0));
    for (size_t i = 0; i < vars.size(); ++i) pt[static_cast<size_t>(vars[i])] = coords[i];
    return pt;
}

PointAnswer checked_yes(const Poly& p, std::vector<Rational> pt, std::string cert) {
    if (p.eval(pt) != 0)
        throw invariant_violation("pointfinder: claimed zero does not evaluate to zero");
    return PointAnswer::yes(std::move(pt), std::move(cert));
}

// ---- univariate exact layer ----

std::vector<Rational> dense_of(const Poly& p, int v) {
    return p.univariate_coefficients(v);
}

std::vector<Rational> derivative_dense(const std::vector<Rational>& f) {
    std::vector<Rational> d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Rational(static_cast<long>(i)));
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

std::vector<Rational> remainder_dense(std::vector<Rational> f, const std::vector<Rational>& g) {
    while (f.size() >= g.size() && !f.empty()) {
        const Rational c = f.back() / g.back();
        const size_t k = f.size() - g.size();
        for (size_t i = 0; i < g.size(); ++i) f[k + i] -= c * g[i];
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    return f;
}

// Number of distinct real roots of a square-free univariate polynomial, by
// counting sign variations of the Sturm chain at -inf and +inf.
int sturm_real_root_count(std::vector<Rational> f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.size() <= 1) return 0;
    std::vector<std::vector<Rational>> chain{f, derivative_dense(f)};
    while (chain.back().size() > 1) {
        auto r = remainder_dense(chain[chain.size() - 2], chain.back());
        if (r.empty()) break; // gcd reached (square-free: a constant scaled out)
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    auto variations = [&](bool at_minus_inf) {
        int var = 0, prev = 0;
        for (const auto& poly : chain) {
            if (poly.empty()) continue;
            int s = sign_of(poly.back());
            if (at_minus_inf && (poly.size() - 1) % 2 == 1) s = -s;
            if (s != 0 && prev != 0 && s != prev) ++var;
            if (s != 0) prev = s;
        }
        return var;
    };
    return variations(true) - variations(false);
}

// All rational roots, via the exact univariate factorization.
std::vector<Rational> rational_roots(const Poly& p, int v) {
    std::vector<Rational> roots;
    for (const auto& [f, mult] : univariate_factor(p)) {
        if (f.total_degree() != 1) continue;
        const auto dense = f.univariate_coefficients(v);
        roots.push_back(-dense[0] / dense[1]);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---- certificates ----

// All coefficients share the sign of a nonzero constant term and every
// non-constant monomial has exclusively even exponents: |p| >= |constant|.
bool positivity_certificate(const Poly& p) {
    const Rational c0 = p.coefficient(Monomial(p.nvars()));
    if (c0 == 0) return false;
    const int s = sign_of(c0);
    for (const auto& [m, c] : p.terms()) {
        if (sign_of(c) != s) return false;
        if (m.is_one()) continue;
        for (int e : m.exponents())
            if (e % 2 != 0) return false;
    }
    return true;
}

// No integer zero because the primitive integer form is odd at every point
// of {0,1}^vars (x^k == x mod 2).
bool parity_certificate(const Poly& p, const std::vector<int>& vars) {
    const Poly ip = p.primitive_integer_form().first;
    const size_t m = vars.size();
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<Rational> coords(m, Rational(0));
        for (size_t i = 0; i < m; ++i)
            if (mask & (1ull << i)) coords[i] = 1;
        const Rational val = ip.eval(embed(ip.nvars(), vars, coords));
        if (numerator_of(val) % 2 == 0) return false;
    }
    return true;
}

// ---- randomized grid + segment restriction (multivariate) ----

// p restricted to the segment a + t*(b-a), as a univariate polynomial in t.
Poly restrict_to_segment(const Poly& p, const std::vector<Rational>& a,
                         const std::vector<Rational>& b) {
    const int n = p.nvars();
    std::vector<std::vector<Poly>> powers(static_cast<size_t>(n));
    Poly acc(1);
    for (const auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(1, c);
        for (int v = 0; v < n; ++v) {
            const int e = m.exponent(v);
            if (e == 0) continue;
            auto& pw = powers[static_cast<size_t>(v)];
            if (pw.empty()) {
                // a_v + (b_v - a_v) t
                Poly lin = Poly::constant(1, a[static_cast<size_t>(v)]) +
                           Poly::variable(1, 0).scaled(b[static_cast<size_t>(v)] -
                                                       a[static_cast<size_t>(v)]);
                pw.push_back(Poly::constant(1, 1));
                pw.push_back(std::move(lin));
            }
            while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * pw[1]);
            term *= pw[static_cast<size_t>(e)];
        }
        acc += term;
    }
    return acc;
}

std::optional<std::vector<Rational>> segment_rational_zero(const Poly& p,
                                                           const std::vector<Rational>& a,
                                                           const std::vector<Rational>& b) {
    const Poly q = restrict_to_segment(p, a, b);
    if (q.is_zero() || q.is_constant()) return std::nullopt;
    for (const Rational& t : rational_roots(q, 0)) {
        if (t < 0 || t > 1) continue;
        std::vector<Rational> pt(a.size());
        for (size_t i = 0; i < a.size(); ++i) pt[i] = a[i] + t * (b[i] - a[i]);
        if (p.eval(pt) == 0) return pt;
    }
    return std::nullopt;
}

struct GridScan {
    std::optional<std::vector<Rational>> zero;
    std::vector<std::vector<Rational>> positives;
    std::vector<std::vector<Rational>> negatives;
    long samples = 0;
};

GridScan scan_grid(const Poly& p, const std::vector<int>& vars, const SearchBounds& bounds,
                   Budget& budget) {
    GridScan scan;
    const int n = p.nvars();
    const size_t sign_cap = 24;

    auto consider = [&](const std::vector<Rational>& coords) -> bool {
        if (!budget.spend()) return false;
        const auto pt = embed(n, vars, coords);
        const Rational val = p.eval(pt);
        ++scan.samples;
        if (val == 0) {
            scan.zero = pt;
            return true;
        }
        auto& side = val > 0 ? scan.positives : scan.negatives;
        if (side.size() < sign_cap) side.push_back(pt);
        return false;
    };

    // systematic small integer grid first, so zeros at simple points are
    // found deterministically
    const int s = std::min(2, bounds.real_grid_radius);
    std::vector<int> idx(vars.size(), -s);
    for (bool carried = true; carried;) {
        std::vector<Rational> coords;
        coords.reserve(vars.size());
        for (int i : idx) coords.emplace_back(i);
        if (consider(coords)) return scan;
        carried = false;
        size_t pos = vars.size();
        while (pos-- > 0) {
            if (idx[pos] < s) {
                ++idx[pos];
                std::fill(idx.begin() + static_cast<long>(pos) + 1, idx.end(), -s);
                carried = true;
                break;
            }
        }
    }

    SplitMix64 rng = SplitMix64::substream(bounds.seed, 0);
    for (int k = 0; k < 256; ++k) {
        std::vector<Rational> coords;
        coords.reserve(vars.size());
        for (size_t i = 0; i < vars.size(); ++i) {
            const long long den = 1 + static_cast<long long>(rng.below(2)); // 1 or 2
            const long long num = rng.range(-bounds.real_grid_radius * den,
                                            bounds.real_grid_radius * den);
            coords.emplace_back(Rational(Integer(num), Integer(den)));
        }
        if (consider(coords)) return scan;
    }
    return scan;
}

std::optional<std::vector<Rational>> segment_phase(const Poly& p, const GridScan& scan) {
    int tried = 0;
    for (const auto& a : scan.positives)
        for (const auto& b : scan.negatives) {
            if (++tried > 64) return std::nullopt;
            if (auto pt = segment_rational_zero(p, a, b)) return pt;
        }
    return std::nullopt;
}

// ---- integer box machinery ----

// 0, 1, -1, 2, -2, ... out to radius
long long spiral_value(long long i) { return (i % 2 == 1) ? (i + 1) / 2 : -(i / 2); }

struct BoxResult {
    std::optional<std::vector<Rational>> zero;
    bool exhausted = false;
};

BoxResult scan_box(const Poly& p, const std::vector<int>& vars,
                   const std::vector<long long>& radii, Budget& budget) {
    BoxResult res;
    const size_t m = vars.size();
    std::vector<long long> idx(m, 0);
    for (;;) {
        std::vector<Rational> coords;
        coords.reserve(m);
        for (size_t i = 0; i < m; ++i) coords.emplace_back(Integer(spiral_value(idx[i])));
        if (!budget.spend()) return res; // not exhausted
        const auto pt = embed(p.nvars(), vars, coords);
        if (p.eval(pt) == 0) {
            res.zero = pt;
            return res;
        }
        size_t pos = m;
        bool carried = false;
        while (pos-- > 0) {
            if (idx[pos] < 2 * radii[pos]) {
                ++idx[pos];
                std::fill(idx.begin() + static_cast<long>(pos) + 1, idx.end(), 0);
                carried = true;
                break;
            }
        }
        if (!carried) {
            res.exhausted = true;
            return res;
        }
    }
}

Integer floor_nth_root(const Rational& x, int k) {
    // largest B with B^k <= x
    Integer lo(0), hi(2);
    while (Rational(boost::multiprecision::pow(hi, static_cast<unsigned>(k))) <= x) hi *= 2;
    while (lo < hi - 1) {
        Integer mid = (lo + hi) / 2;
        if (Rational(boost::multiprecision::pow(mid, static_cast<unsigned>(k))) <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

// For p = q - c with c > 0 and q a sum of even-exponent, positive-coefficient
// monomials where each present variable owns a pure power a*v^(2m), every
// integer (indeed real) zero satisfies |v| <= (c/a)^(1/2m). Returns the
// per-variable radii, or nothing when the shape does not apply.
std::optional<std::vector<long long>> definite_box_radii(const Poly& p,
                                                         const std::vector<int>& vars) {
    Rational c0 = p.coefficient(Monomial(p.nvars()));
    if (c0 == 0) return std::nullopt;
    const Poly q = c0 > 0 ? -p : p; // normalize to "positive terms minus constant"
    c0 = q.coefficient(Monomial(q.nvars()));
    const Rational c = -c0; // > 0
    std::vector<long long> radii;
    for (int v : vars) {
        std::optional<Rational> pure_coeff;
        int pure_exp = 0;
        for (const auto& [m, coeff] : q.terms()) {
            if (m.is_one()) continue;
            for (int e : m.exponents())
                if (e % 2 != 0) return std::nullopt;
            if (coeff < 0) return std::nullopt;
            bool only_v = true;
            for (int u = 0; u < q.nvars(); ++u)
                if (u != v && m.exponent(u) > 0) only_v = false;
            if (only_v && m.exponent(v) > 0 &&
                (!pure_coeff || m.exponent(v) < pure_exp)) {
                pure_coeff = coeff;
                pure_exp = m.exponent(v);
            }
        }
        if (!pure_coeff) return std::nullopt; // no pure power: unbounded direction
        const Integer b = floor_nth_root(c / *pure_coeff, pure_exp);
        if (b > 1000000) return std::nullopt; // the "definite" bound is no bound at all
        radii.push_back(b.convert_to<long long>());
    }
    return radii;
}

std::string radius_string(const std::vector<long long>& radii) {
    long long mx = 0;
    for (long long r : radii) mx = std::max(mx, r);
    return std::to_string(mx);
}

} // namespace

PointAnswer has_real_points(const Poly& p, const SearchBounds& bounds) {
    validate_input(p);
    int v = -1;
    if (p.is_effectively_univariate(&v)) {
        const int count = sturm_real_root_count(dense_of(p, v));
        if (count == 0) return PointAnswer::no("sturm(0)");
        const auto roots = rational_roots(p, v);
        if (!roots.empty())
            return checked_yes(p, embed(p.nvars(), {v}, {roots.front()}), "univariate-roots");
        return PointAnswer::yes_uncarried("sturm(" + std::to_string(count) + ")");
    }

    if (positivity_certificate(p)) return PointAnswer::no("positivity");

    const auto vars = p.variables_present();
    Budget budget{bounds.eval_budget};
    const GridScan scan = scan_grid(p, vars, bounds, budget);
    if (scan.zero) return checked_yes(p, *scan.zero, "rational-zero");
    if (auto pt = segment_phase(p, scan)) return checked_yes(p, *pt, "segment-root");

    std::ostringstream effort;
    effort << "grid(radius=" << bounds.real_grid_radius << ",samples=" << scan.samples
           << ",segments=64)";
    return PointAnswer::unknown(effort.str());
}

PointAnswer has_rational_points(const Poly& p, const SearchBounds& bounds) {
    validate_input(p);
    int v = -1;
    if (p.is_effectively_univariate(&v)) {
        const auto roots = rational_roots(p, v);
        if (!roots.empty())
            return checked_yes(p, embed(p.nvars(), {v}, {roots.front()}), "univariate-roots");
        return PointAnswer::no("univariate-roots");
    }

    if (positivity_certificate(p)) return PointAnswer::no("positivity");

    const auto vars = p.variables_present();
    Budget budget{bounds.eval_budget};

    // height-ordered sweep: all tuples of reduced rationals a/b with
    // max(|a|, b) <= h, introducing each level h once
    std::vector<Rational> candidates{Rational(0)};
    std::vector<size_t> level_start{0, 1}; // level_start[h] = #candidates of height < h... [0]=unused
    long evals = 0;
    for (int h = 1; h <= bounds.rational_height; ++h) {
        for (long long b = 1; b <= h; ++b) {
            if (integer_gcd(Integer(h), Integer(b)) == 1) {
                candidates.emplace_back(Rational(Integer(h), Integer(b)));
                candidates.emplace_back(Rational(Integer(-h), Integer(b)));
            }
        }
        for (long long a = 1; a < h; ++a) {
            if (integer_gcd(Integer(a), Integer(h)) == 1) {
                candidates.emplace_back(Rational(Integer(a), Integer(h)));
                candidates.emplace_back(Rational(Integer(-a), Integer(h)));
            }
        }
        const size_t old_count = level_start.back();
        level_start.push_back(candidates.size());

        const size_t m = vars.size();
        std::vector<size_t> idx(m, 0);
        bool out_of_budget = false;
        for (;;) {
            bool all_old = true;
            for (size_t i : idx)
                if (i >= old_count) all_old = false;
            if (!all_old) {
                if (!budget.spend()) {
                    out_of_budget = true;
                    break;
                }
                std::vector<Rational> coords;
                coords.reserve(m);
                for (size_t i = 0; i < m; ++i) coords.push_back(candidates[idx[i]]);
                const auto pt = embed(p.nvars(), vars, coords);
                ++evals;
                if (p.eval(pt) == 0) return checked_yes(p, pt, "height-search");
            }
            size_t pos = m;
            bool carried = false;
            while (pos-- > 0) {
                if (idx[pos] + 1 < candidates.size()) {
                    ++idx[pos];
                    std::fill(idx.begin() + static_cast<long>(pos) + 1, idx.end(), 0);
                    carried = true;
                    break;
                }
            }
            if (!carried) break;
        }
        if (out_of_budget) break;
    }

    // sign-change segments can still pin an exact rational point
    const GridScan scan = scan_grid(p, vars, bounds, budget);
    if (scan.zero) return checked_yes(p, *scan.zero, "rational-zero");
    if (auto pt = segment_phase(p, scan)) return checked_yes(p, *pt, "segment-root");

    std::ostringstream effort;
    effort << "height(" << bounds.rational_height << ",evals=" << evals << ")";
    return PointAnswer::unknown(effort.str());
}

PointAnswer has_integer_points(const Poly& p, const SearchBounds& bounds) {
    validate_input(p);
    const auto vars = p.variables_present();

    if (parity_certificate(p, vars)) return PointAnswer::no("parity");

    int v = -1;
    if (p.is_effectively_univariate(&v)) {
        for (const Rational& r : rational_roots(p, v))
            if (is_integer(r)) return checked_yes(p, embed(p.nvars(), {v}, {r}), "univariate-roots");
        return PointAnswer::no("univariate-roots");
    }

    if (positivity_certificate(p)) return PointAnswer::no("positivity");

    Budget budget{bounds.eval_budget};
    if (auto radii = definite_box_radii(p, vars)) {
        const BoxResult res = scan_box(p, vars, *radii, budget);
        if (res.zero) return checked_yes(p, *res.zero, "box-search");
        if (res.exhausted) return PointAnswer::no("exhaustive-box(" + radius_string(*radii) + ")");
    }

    const std::vector<long long> radii(vars.size(),
                                       static_cast<long long>(bounds.integer_box_radius));
    const BoxResult res = scan_box(p, vars, radii, budget);
    if (res.zero) return checked_yes(p, *res.zero, "box-search");

    std::ostringstream effort;
    effort << "box(" << bounds.integer_box_radius << (res.exhausted ? ",exhausted-non-proof" : ",budget")
           << ")";
    return PointAnswer::unknown(effort.str());
}

} // namespace hautus
