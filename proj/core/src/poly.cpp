#include "hautus/poly.hpp"

#include <stdexcept>

namespace hautus {

Poly::Poly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("Poly: negative variable count");
}

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(nvars), c);
    return p;
}

Poly Poly::variable(int nvars, int v) {
    if (v < 0 || v >= nvars) throw std::invalid_argument("Poly::variable: index out of range");
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(v)] = 1;
    Poly p(nvars);
    p.terms_.emplace(Monomial(std::move(e)), Rational(1));
    return p;
}

Poly Poly::term(const Monomial& m, const Rational& c) {
    Poly p(m.nvars());
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

Poly Poly::from_terms(int nvars, TermMap terms) {
    Poly p(nvars);
    for (auto& [m, c] : terms) {
        if (m.nvars() != nvars)
            throw std::invalid_argument("Poly::from_terms: monomial arity mismatch");
        if (c != 0) p.terms_.emplace(m, c);
    }
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_value() const {
    if (!is_constant()) throw std::invalid_argument("Poly::constant_value: not a constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int Poly::total_degree() const {
    if (terms_.empty()) return kMinusInfinity;
    // Canonical order is degree-first, so the last key has maximal degree.
    return terms_.rbegin()->first.total_degree();
}

int Poly::degree_in(int v) const {
    if (terms_.empty()) return kMinusInfinity;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Monomial, Rational> Poly::leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("Poly::leading_term: zero polynomial");
    return *terms_.rbegin();
}

std::pair<Monomial, Rational> Poly::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::invalid_argument("Poly::leading_term: zero polynomial");
    if (order.kind == MonomialOrder::Kind::degrevlex) return *terms_.rbegin();
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return *best;
}

void Poly::insert_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_same_ring(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: mixed variable counts");
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.insert_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_ring(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.insert_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(o);
    Poly r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.insert_term(ma.times(mb), ca * cb);
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Poly Poly::times_term(const Monomial& m, const Rational& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [mm, k] : terms_) r.terms_.emplace(mm.times(m), k * c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::constant(nvars_, 1);
    Poly b = *this;
    while (e != 0) {
        if (e & 1u) acc = acc * b;
        b = b * b;
        e >>= 1u;
    }
    return acc;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("Poly::eval: point arity mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int v = 0; v < nvars_; ++v) {
            int e = m.exponent(v);
            if (e != 0) t *= rational_pow(point[static_cast<size_t>(v)], static_cast<unsigned>(e));
        }
        acc += t;
    }
    return acc;
}

Poly Poly::partial_derivative(int v) const {
    if (v < 0 || v >= nvars_)
        throw std::invalid_argument("Poly::partial_derivative: index out of range");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (e == 0) continue;
        std::vector<int> es = m.exponents();
        es[static_cast<size_t>(v)] = e - 1;
        r.insert_term(Monomial(std::move(es)), c * e);
    }
    return r;
}

std::optional<Poly> Poly::try_divide(const Poly& divisor) const {
    check_same_ring(divisor);
    if (divisor.is_zero()) throw std::invalid_argument("Poly::try_divide: division by zero");
    Poly q(nvars_);
    Poly r = *this;
    const auto [dm, dc] = divisor.leading_term();
    while (!r.is_zero()) {
        const auto [rm, rc] = r.leading_term();
        if (!dm.divides(rm)) return std::nullopt;
        Monomial qm = rm.divided_by(dm);
        Rational qc = rc / dc;
        q.insert_term(qm, qc);
        r -= divisor.times_term(qm, qc);
    }
    return q;
}

std::vector<int> Poly::variables_present() const {
    std::vector<int> vs;
    for (int v = 0; v < nvars_; ++v) {
        for (const auto& [m, c] : terms_) {
            if (m.exponent(v) > 0) {
                vs.push_back(v);
                break;
            }
        }
    }
    return vs;
}

bool Poly::is_effectively_univariate(int* var) const {
    auto vs = variables_present();
    if (var) *var = vs.empty() ? -1 : vs.front();
    return vs.size() <= 1;
}

std::vector<Poly> Poly::coefficients_in(int v) const {
    int d = degree_in(v);
    if (d == kMinusInfinity) return {};
    std::vector<Poly> cs(static_cast<size_t>(d) + 1, Poly(nvars_));
    for (const auto& [m, c] : terms_) {
        std::vector<int> es = m.exponents();
        int e = es[static_cast<size_t>(v)];
        es[static_cast<size_t>(v)] = 0;
        cs[static_cast<size_t>(e)].insert_term(Monomial(std::move(es)), c);
    }
    return cs;
}

Poly Poly::from_coefficients_in(int nvars, int v, const std::vector<Poly>& coeffs) {
    Poly r(nvars);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        for (const auto& [m, c] : coeffs[i].terms()) {
            if (m.exponent(v) != 0)
                throw std::invalid_argument("Poly::from_coefficients_in: coefficient involves v");
            std::vector<int> es = m.exponents();
            es[static_cast<size_t>(v)] = static_cast<int>(i);
            r.insert_term(Monomial(std::move(es)), c);
        }
    }
    return r;
}

std::vector<Rational> Poly::univariate_coefficients(int v) const {
    std::vector<Rational> cs(static_cast<size_t>(std::max(degree_in(v), 0)) + 1, Rational(0));
    if (is_zero()) return {Rational(0)};
    for (const auto& [m, c] : terms_) {
        for (int u = 0; u < nvars_; ++u)
            if (u != v && m.exponent(u) != 0)
                throw std::invalid_argument(
                    "Poly::univariate_coefficients: polynomial is not univariate in v");
        cs[static_cast<size_t>(m.exponent(v))] = c;
    }
    return cs;
}

std::pair<Poly, Rational> Poly::primitive_integer_form() const {
    if (is_zero()) return {*this, Rational(1)};
    Integer den_lcm(1);
    for (const auto& [m, c] : terms_) den_lcm = integer_lcm(den_lcm, denominator_of(c));
    Integer num_gcd(0);
    for (const auto& [m, c] : terms_)
        num_gcd = integer_gcd(num_gcd, numerator_of(c) * (den_lcm / denominator_of(c)));
    Rational scale(num_gcd, den_lcm); // positive: num_gcd > 0, den_lcm > 0
    if (terms_.rbegin()->second < 0) scale = -scale;
    Poly prim(nvars_);
    for (const auto& [m, c] : terms_) prim.terms_.emplace(m, c / scale);
    return {prim, scale};
}

bool associates(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.num_terms() != b.num_terms()) return false;
    Rational ratio = a.leading_term().second / b.leading_term().second;
    return a == b.scaled(ratio);
}

} // namespace hautus
