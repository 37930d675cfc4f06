#include "hautus/factor.hpp"

#include "hautus/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace hautus {
namespace {

Poly normalized(const Poly& p) { return p.primitive_integer_form().first; }

Poly exact_div(const Poly& a, const Poly& b, const char* where) {
    auto q = a.try_divide(b);
    if (!q) throw invariant_violation(std::string("factor: inexact division in ") + where);
    return *q;
}

// Yun's algorithm on the primitive part with respect to v, valid in
// characteristic zero over the UFD Q[the other variables].
void yun(const Poly& f, int v, FactorList& out) {
    const Poly df = f.partial_derivative(v);
    const Poly g = poly_gcd(f, df);
    if (g.is_constant()) {
        out.emplace_back(normalized(f), 1);
        return;
    }
    Poly c = exact_div(f, g, "yun c1");
    Poly d = exact_div(df, g, "yun d1") - c.partial_derivative(v);
    for (int i = 1;; ++i) {
        const Poly a = poly_gcd(c, d);
        if (!a.is_constant()) out.emplace_back(normalized(a), i);
        c = exact_div(c, a, "yun c step");
        if (c.is_constant()) break;
        d = exact_div(d, a, "yun d step") - c.partial_derivative(v);
    }
}

void squarefree_rec(const Poly& p, FactorList& out) {
    const auto vars = p.variables_present();
    const int v = vars.back();
    const auto coeffs = p.coefficients_in(v);
    Poly content = Poly::zero(p.nvars());
    for (const Poly& c : coeffs) {
        content = poly_gcd(content, c);
        if (!content.is_zero() && content.is_constant()) break;
    }
    const Poly pp = exact_div(p, content, "content split");
    if (!content.is_constant()) squarefree_rec(content, out);
    if (!pp.is_constant()) yun(pp, v, out);
}

// ---- dense univariate helpers (rational coefficients, index = power) ----

using Dense = std::vector<Rational>;

void strip(Dense& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Dense& f) { return static_cast<int>(f.size()) - 1; }

Rational horner(const Dense& f, const Rational& x) {
    Rational acc(0);
    for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

std::optional<Dense> divide_dense(const Dense& f, const Dense& g) {
    if (g.empty()) throw std::invalid_argument("divide_dense: division by zero");
    Dense r = f;
    strip(r);
    if (r.empty()) return Dense{};
    if (deg(r) < deg(g)) return std::nullopt;
    Dense q(static_cast<size_t>(deg(r) - deg(g)) + 1, Rational(0));
    while (!r.empty() && deg(r) >= deg(g)) {
        const Rational c = r.back() / g.back();
        const int k = deg(r) - deg(g);
        q[static_cast<size_t>(k)] = c;
        for (size_t i = 0; i < g.size(); ++i) r[static_cast<size_t>(k) + i] -= c * g[i];
        strip(r);
    }
    if (!r.empty()) return std::nullopt;
    return q;
}

Dense mul_dense(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Positive divisors, ascending.
std::vector<Integer> divisors_of(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> small, large;
    for (Integer i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            small.push_back(i);
            if (i * i != n) large.push_back(n / i);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Make integer-primitive with positive leading coefficient.
Dense normalize_dense(Dense f) {
    strip(f);
    if (f.empty()) return f;
    Integer den(1);
    for (const Rational& c : f) den = integer_lcm(den, denominator_of(c));
    Integer g(0);
    for (const Rational& c : f) g = integer_gcd(g, numerator_of(c) * (den / denominator_of(c)));
    Rational scale(g, den);
    if (f.back() < 0) scale = -scale;
    for (Rational& c : f) c /= scale;
    return f;
}

std::vector<Dense> factor_squarefree_dense(Dense f);

// Kronecker's interpolation search: a degree-dg divisor g of f satisfies
// g(x) | f(x) at every integer x, so enumerating divisor tuples of
// f(x_0)..f(x_dg) and interpolating covers every candidate. Correct because
// an integer factorization exists whenever a rational one does (Gauss).
std::vector<Dense> kronecker_split(const Dense& f) {
    const int d = deg(f);
    for (int dg = 2; dg <= d / 2; ++dg) {
        std::vector<Integer> xs;
        for (int i = 0; static_cast<int>(xs.size()) < dg + 1; ++i)
            xs.push_back(i == 0 ? Integer(0) : (i % 2 ? Integer((i + 1) / 2) : Integer(-(i / 2))));
        std::vector<std::vector<Integer>> choices;
        long double combo_estimate = 1.0L;
        for (int i = 0; i <= dg; ++i) {
            const Rational val = horner(f, Rational(xs[static_cast<size_t>(i)]));
            std::vector<Integer> ds = divisors_of(numerator_of(val));
            if (i > 0) { // first point fixed positive: g vs -g give the same split
                std::vector<Integer> with_sign;
                for (const Integer& v : ds) {
                    with_sign.push_back(v);
                    with_sign.push_back(-v);
                }
                ds = std::move(with_sign);
            }
            combo_estimate *= static_cast<long double>(ds.size());
            choices.push_back(std::move(ds));
        }
        if (combo_estimate > 4e6L)
            throw std::runtime_error("univariate_factor: Kronecker search budget exceeded");

        std::vector<size_t> idx(static_cast<size_t>(dg) + 1, 0);
        for (;;) {
            // Lagrange interpolation through (xs[i], choices[i][idx[i]]).
            Dense cand;
            for (int i = 0; i <= dg; ++i) {
                Dense basis{Rational(1)};
                Rational denom(1);
                for (int j = 0; j <= dg; ++j) {
                    if (j == i) continue;
                    basis = mul_dense(basis, Dense{Rational(-xs[static_cast<size_t>(j)]), Rational(1)});
                    denom *= Rational(xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(j)]);
                }
                const Rational w = Rational(choices[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]]) / denom;
                if (cand.size() < basis.size()) cand.resize(basis.size(), Rational(0));
                for (size_t t = 0; t < basis.size(); ++t) cand[t] += basis[t] * w;
            }
            strip(cand);
            if (deg(cand) == dg) {
                bool integral = true;
                for (const Rational& c : cand)
                    if (!is_integer(c)) { integral = false; break; }
                if (integral) {
                    if (auto q = divide_dense(f, cand)) {
                        auto left = factor_squarefree_dense(normalize_dense(cand));
                        auto right = factor_squarefree_dense(normalize_dense(*q));
                        left.insert(left.end(), right.begin(), right.end());
                        return left;
                    }
                }
            }
            // odometer
            size_t pos = 0;
            while (pos < idx.size()) {
                if (++idx[pos] < choices[pos].size()) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
    }
    return {f}; // irreducible
}

// f primitive integer, square-free. Returns irreducible factors.
std::vector<Dense> factor_squarefree_dense(Dense f) {
    std::vector<Dense> out;
    strip(f);
    if (deg(f) <= 0) return out;

    // powers of x
    while (f.front() == 0) {
        out.push_back(Dense{Rational(0), Rational(1)});
        f.erase(f.begin());
    }

    // rational roots p/q: p | constant term, q | leading coefficient
    bool again = true;
    while (again && deg(f) >= 1) {
        again = false;
        const auto ps = divisors_of(numerator_of(f.front()));
        const auto qs = divisors_of(numerator_of(f.back()));
        for (const Integer& q : qs) {
            for (const Integer& p : ps) {
                if (integer_gcd(p, q) != 1) continue;
                for (int s : {1, -1}) {
                    const Rational root(p * s, q);
                    if (horner(f, root) != 0) continue;
                    Dense lin{Rational(-p * s), Rational(q)};
                    out.push_back(lin);
                    auto h = divide_dense(f, lin);
                    if (!h) throw invariant_violation("factor: root deflation failed");
                    f = normalize_dense(*h);
                    again = deg(f) >= 1;
                    goto deflated;
                }
            }
        }
    deflated:;
    }

    if (deg(f) >= 1) {
        if (deg(f) <= 3) {
            // no rational root and degree <= 3: any split would need a linear factor
            out.push_back(f);
        } else {
            auto rest = kronecker_split(f);
            out.insert(out.end(), rest.begin(), rest.end());
        }
    }
    return out;
}

} // namespace

FactorList squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    if (p.is_constant()) throw std::invalid_argument("squarefree_decomposition: constant polynomial");
    FactorList out;
    squarefree_rec(p.primitive_integer_form().first, out);
    return out;
}

FactorList univariate_factor(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("univariate_factor: zero polynomial");
    int v = -1;
    if (!p.is_effectively_univariate(&v))
        throw std::invalid_argument("univariate_factor: multivariate input");
    if (v < 0) return {}; // constant

    FactorList out;
    for (const auto& [sf, mult] : squarefree_decomposition(p)) {
        Dense dense;
        for (const Rational& c : sf.univariate_coefficients(v)) dense.push_back(c);
        for (const Dense& g : factor_squarefree_dense(normalize_dense(dense))) {
            std::vector<Poly> coeffs;
            coeffs.reserve(g.size());
            for (const Rational& c : g) coeffs.push_back(Poly::constant(p.nvars(), c));
            out.emplace_back(normalized(Poly::from_coefficients_in(p.nvars(), v, coeffs)), mult);
        }
    }
    return out;
}

} // namespace hautus
