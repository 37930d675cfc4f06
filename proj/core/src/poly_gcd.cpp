// Multivariate gcd over Q[d1..dn].
//
// Strategy (classic, exact, no modular tricks): reduce to primitive
// integer-coefficient polynomials, pick the highest-index variable v present,
// split each input into content * primitive part with respect to v (contents
// handled by recursion), and run a subresultant polynomial remainder sequence
// on the primitive parts. The subresultant divisor g*h^delta keeps every
// intermediate remainder inside Z[other vars][v] while avoiding the
// exponential coefficient growth of the naive pseudo-remainder sequence.
//
// All divisions below are exact by the theory; an inexact one means the
// implementation is broken, so it raises invariant_violation rather than
// returning garbage.

#include "hautus/errors.hpp"
#include "hautus/poly.hpp"

#include <algorithm>
#include <vector>

namespace hautus {
namespace {

// Univariate-in-v view: c[i] is the Poly coefficient of v^i (free of v).
using Coeffs = std::vector<Poly>;

void strip(Coeffs& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

int deg(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

Poly exact_div(const Poly& a, const Poly& b, const char* where) {
    auto q = a.try_divide(b);
    if (!q) throw invariant_violation(std::string("poly_gcd: inexact division in ") + where);
    return *q;
}

Coeffs scale(const Coeffs& c, const Poly& f) {
    Coeffs r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = c[i] * f;
    strip(r);
    return r;
}

Coeffs divide_coeffs(const Coeffs& c, const Poly& f, const char* where) {
    Coeffs r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = exact_div(c[i], f, where);
    return r;
}

// r = a - b * v^shift
Coeffs sub_shifted(const Coeffs& a, const Coeffs& b, int shift) {
    Coeffs r = a;
    if (r.size() < b.size() + static_cast<size_t>(shift))
        r.resize(b.size() + static_cast<size_t>(shift), Poly(b.empty() ? 0 : b[0].nvars()));
    for (size_t i = 0; i < b.size(); ++i) r[i + static_cast<size_t>(shift)] -= b[i];
    strip(r);
    return r;
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A = Q*B + R, deg_v R < deg_v B.
Coeffs prem(Coeffs A, const Coeffs& B) {
    const Poly lcB = B.back();
    int e = deg(A) - deg(B) + 1;
    while (!A.empty() && deg(A) >= deg(B)) {
        const Poly lr = A.back();
        const int k = deg(A) - deg(B);
        A = sub_shifted(scale(A, lcB), scale(B, lr), k);
        --e;
    }
    for (; e > 0; --e) A = scale(A, lcB);
    return A;
}

Poly gcd_primitive(const Poly& a, const Poly& b);

// gcd of the coefficient list = content of the univariate view.
Poly content_of(const Coeffs& c, int nvars) {
    Poly g = Poly::zero(nvars);
    for (const Poly& p : c) {
        g = gcd_primitive(g, p.primitive_integer_form().first);
        if (!g.is_zero() && g.is_constant()) return Poly::constant(nvars, 1);
    }
    return g;
}

// Both inputs primitive with integer coefficients (or zero).
Poly gcd_primitive(const Poly& a, const Poly& b) {
    const int n = std::max(a.nvars(), b.nvars());
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) return Poly::constant(n, 1);

    const auto va = a.variables_present();
    const auto vb = b.variables_present();
    const int v = std::max(va.back(), vb.back());

    Coeffs A = a.coefficients_in(v);
    Coeffs B = b.coefficients_in(v);
    const Poly ca = content_of(A, n);
    const Poly cb = content_of(B, n);
    const Poly c = gcd_primitive(ca, cb);
    A = divide_coeffs(A, ca, "content removal");
    B = divide_coeffs(B, cb, "content removal");

    if (deg(A) < deg(B)) std::swap(A, B);
    if (deg(B) == 0) return c; // primitive parts coprime: B reduced to a unit in v

    Poly g = Poly::constant(n, 1);
    Poly h = Poly::constant(n, 1);
    for (;;) {
        const int delta = deg(A) - deg(B);
        Coeffs R = prem(A, B);
        if (R.empty()) {
            const Poly ppB = exact_div(Poly::from_coefficients_in(n, v, B),
                                       content_of(B, n), "primitive part");
            return (c * ppB).primitive_integer_form().first;
        }
        if (deg(R) == 0) return c;
        A = std::move(B);
        B = divide_coeffs(R, g * h.pow(static_cast<unsigned>(delta)), "subresultant step");
        g = A.back();
        if (delta > 0)
            h = exact_div(g.pow(static_cast<unsigned>(delta)),
                          h.pow(static_cast<unsigned>(delta - 1)), "h update");
    }
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("poly_gcd: mixed variable counts");
    const Poly pa = a.primitive_integer_form().first;
    const Poly pb = b.primitive_integer_form().first;
    return gcd_primitive(pa, pb).primitive_integer_form().first;
}

Poly poly_gcd(const std::vector<Poly>& ps) {
    if (ps.empty()) throw std::invalid_argument("poly_gcd: empty list");
    Poly g = Poly::zero(ps.front().nvars());
    for (const Poly& p : ps) {
        g = poly_gcd(g, p);
        if (!g.is_zero() && g.is_constant()) return g;
    }
    return g;
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.nvars());
    const Poly pa = a.primitive_integer_form().first;
    const Poly pb = b.primitive_integer_form().first;
    const Poly g = poly_gcd(pa, pb);
    auto q = pb.try_divide(g);
    if (!q) throw invariant_violation("poly_lcm: gcd does not divide its input");
    return (pa * *q).primitive_integer_form().first;
}

} // namespace hautus
