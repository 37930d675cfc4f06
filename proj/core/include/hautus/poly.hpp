#pragma once

#include "hautus/monomial.hpp"
#include "hautus/rational.hpp"

#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hautus {

struct DegRevLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return degrevlex_cmp(a, b) < 0;
    }
};

// Sparse multivariate polynomial over the rationals in variables d1..dn.
// Terms live in a map keyed by ascending degrevlex, so equality is
// structural and the canonical leading term is the last entry. Instances
// are value types; every operation returns a fresh polynomial.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, DegRevLexLess>;

    // total_degree() of the zero polynomial; deliberately not -1, which is a
    // legal Krull dimension elsewhere in this codebase.
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    Poly() = default;
    explicit Poly(int nvars);

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int nvars, int v); // v is 0-based
    static Poly term(const Monomial& m, const Rational& c);
    static Poly from_terms(int nvars, TermMap terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Requires is_constant(); the zero polynomial yields 0.
    Rational constant_value() const;

    int num_terms() const { return static_cast<int>(terms_.size()); }
    const TermMap& terms() const { return terms_; }

    int total_degree() const;
    int degree_in(int v) const;

    Rational coefficient(const Monomial& m) const;

    // Leading term under an arbitrary order; the degrevlex case is O(1).
    std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const;
    std::pair<Monomial, Rational> leading_term() const; // canonical degrevlex

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rational& c) const;
    Poly times_term(const Monomial& m, const Rational& c) const;
    Poly pow(unsigned e) const;

    Rational eval(const std::vector<Rational>& point) const;
    Poly partial_derivative(int v) const;

    // Exact division: returns *this / divisor when the division leaves no
    // remainder, std::nullopt otherwise. Exactness is decided with respect to
    // the ring (not any term order), via leading-term elimination.
    std::optional<Poly> try_divide(const Poly& divisor) const;

    // Sorted list of the variables that actually occur.
    std::vector<int> variables_present() const;
    // True when at most one variable occurs; *var is set to it (or to -1 for
    // constants).
    bool is_effectively_univariate(int* var) const;

    // View as a univariate polynomial in v with Poly coefficients (each free
    // of v, same nvars). Index i holds the coefficient of v^i.
    std::vector<Poly> coefficients_in(int v) const;
    static Poly from_coefficients_in(int nvars, int v, const std::vector<Poly>& coeffs);

    // Dense rational coefficient vector; requires the polynomial to involve
    // no variable other than v.
    std::vector<Rational> univariate_coefficients(int v) const;

    // Writes *this as scale * primitive where primitive has integer
    // coefficients with gcd 1 and positive leading (degrevlex) coefficient.
    // The zero polynomial yields (0, scale=1).
    std::pair<Poly, Rational> primitive_integer_form() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void insert_term(const Monomial& m, const Rational& c);
    void check_same_ring(const Poly& o) const;

    int nvars_ = 0;
    TermMap terms_;
};

// Primitive gcd with positive leading (degrevlex) coefficient: recursive
// content/primitive-part reduction with a subresultant remainder sequence in
// the last variable present. gcd(0, 0) = 0; any constant input or coprime
// pair yields 1.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_gcd(const std::vector<Poly>& ps);
Poly poly_lcm(const Poly& a, const Poly& b);

// True when a and b differ by a nonzero rational constant factor.
bool associates(const Poly& a, const Poly& b);

} // namespace hautus
