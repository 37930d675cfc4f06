// Polynomial ring: arithmetic axioms, evaluation, derivatives, gcd,
// square-free structure, and the text format.

#include "doctest.h"
#include "helpers.hpp"

#include "hautus/errors.hpp"
#include "hautus/factor.hpp"
#include "hautus/poly.hpp"
#include "hautus/poly_text.hpp"

#include <algorithm>
#include <vector>

using namespace hautus;
using testutil::pp;
using testutil::random_nonzero;

namespace {

std::vector<Rational> random_point(SplitMix64& rng, int nvars) {
    std::vector<Rational> pt;
    pt.reserve(nvars);
    for (int v = 0; v < nvars; ++v) {
        const long long num = rng.range(-9, 9);
        const long long den = rng.range(1, 4);
        pt.emplace_back(num, den);
    }
    return pt;
}

} // namespace

TEST_CASE("worked arithmetic examples") {
    const Poly lhs = pp("(d1 + 1) * (d1 - 1)", 2);
    CHECK(lhs == pp("d1^2 - 1", 2));
    CHECK(pp("d1*d2 + d2*d1", 2) == pp("2*d1*d2", 2));
    const Poly p = pp("3*d1^2*d2 - d2 + 4", 2);
    CHECK((p + (-p)).is_zero());
    CHECK(p - p == Poly::zero(2));
    CHECK(pp("0", 3).is_zero());
    CHECK(pp("7", 1).is_constant());
    CHECK(pp("7", 1).constant_value() == Rational(7));
}

TEST_CASE("ring axioms on random triples") {
    SplitMix64 rng(101);
    const Poly zero = Poly::zero(3);
    const Poly one = Poly::constant(3, Rational(1));
    for (int i = 0; i < 200; ++i) {
        const Poly a = random_nonzero(rng, 3, 3, 0.6);
        const Poly b = random_nonzero(rng, 3, 3, 0.6);
        const Poly c = random_nonzero(rng, 3, 3, 0.6);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + zero == a);
        CHECK(a * one == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("degree arithmetic") {
    SplitMix64 rng(102);
    for (int i = 0; i < 60; ++i) {
        const Poly a = random_nonzero(rng, 2, 3, 0.7);
        const Poly b = random_nonzero(rng, 2, 3, 0.7);
        CHECK((a * b).total_degree() == a.total_degree() + b.total_degree());
        CHECK((a + b).total_degree() <= std::max(a.total_degree(), b.total_degree()));
    }
    CHECK(Poly::zero(2).total_degree() == Poly::kMinusInfinity);
}

TEST_CASE("evaluation is a ring homomorphism") {
    SplitMix64 rng(103);
    for (int i = 0; i < 200; ++i) {
        const Poly a = random_nonzero(rng, 3, 3, 0.6);
        const Poly b = random_nonzero(rng, 3, 3, 0.6);
        const auto pt = random_point(rng, 3);
        CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
        CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    }
    CHECK(pp("d1^2 + d2", 2).eval({Rational(2), Rational(-1)}) == Rational(3));
}

TEST_CASE("partial derivatives satisfy the Leibniz rule") {
    SplitMix64 rng(104);
    for (int i = 0; i < 100; ++i) {
        const Poly a = random_nonzero(rng, 2, 3, 0.7);
        const Poly b = random_nonzero(rng, 2, 3, 0.7);
        for (int v = 0; v < 2; ++v) {
            const Poly lhs = (a * b).partial_derivative(v);
            const Poly rhs = a.partial_derivative(v) * b + a * b.partial_derivative(v);
            CHECK(lhs == rhs);
        }
    }
    CHECK(pp("d1^3*d2", 2).partial_derivative(0) == pp("3*d1^2*d2", 2));
    CHECK(pp("d1^3*d2", 2).partial_derivative(1) == pp("d1^3", 2));
    CHECK(pp("5", 2).partial_derivative(0).is_zero());
}

TEST_CASE("exact division round-trips and rejects non-divisors") {
    SplitMix64 rng(105);
    for (int i = 0; i < 80; ++i) {
        const Poly a = random_nonzero(rng, 2, 2);
        const Poly b = random_nonzero(rng, 2, 2);
        const auto q = (a * b).try_divide(b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
    CHECK_FALSE(pp("d1^2 + 1", 2).try_divide(pp("d2", 2)).has_value());
    CHECK_FALSE(pp("d1 + 1", 1).try_divide(pp("d1", 1)).has_value());
}

TEST_CASE("gcd divides both arguments with coprime quotients") {
    SplitMix64 rng(106);
    for (int i = 0; i < 100; ++i) {
        const Poly a = random_nonzero(rng, 2, 2, 0.8);
        const Poly b = random_nonzero(rng, 2, 2, 0.8);
        const Poly common = random_nonzero(rng, 2, 1);
        const Poly g = poly_gcd(a * common, b * common);
        const auto qa = (a * common).try_divide(g);
        const auto qb = (b * common).try_divide(g);
        REQUIRE(qa.has_value());
        REQUIRE(qb.has_value());
        CHECK(poly_gcd(*qa, *qb).is_constant());
        // The planted factor divides the gcd.
        CHECK(g.try_divide(common).has_value());
    }
}

TEST_CASE("gcd worked examples") {
    CHECK(associates(poly_gcd(pp("d1^2 - d2^2", 2), pp("d1 - d2", 2)), pp("d1 - d2", 2)));
    CHECK(associates(poly_gcd(pp("d1*d2", 2), pp("d1^2 + d1*d2", 2)), pp("d1", 2)));
    CHECK(poly_gcd(pp("d1 + 1", 2), pp("d2 + 1", 2)).is_constant());
    // gcd with zero is the other argument up to normalization.
    CHECK(associates(poly_gcd(pp("2*d1 + 2", 1), Poly::zero(1)), pp("d1 + 1", 1)));
    // Vector form.
    const Poly g = poly_gcd(std::vector<Poly>{pp("d1^2*d2", 2), pp("d1*d2^2", 2), pp("d1*d2", 2)});
    CHECK(associates(g, pp("d1*d2", 2)));
}

TEST_CASE("lcm satisfies gcd * lcm = a * b up to constants") {
    SplitMix64 rng(107);
    for (int i = 0; i < 40; ++i) {
        const Poly a = random_nonzero(rng, 2, 2, 0.8);
        const Poly b = random_nonzero(rng, 2, 2, 0.8);
        CHECK(associates(poly_gcd(a, b) * poly_lcm(a, b), a * b));
    }
}

TEST_CASE("square-free decomposition reconstructs and separates") {
    SplitMix64 rng(108);
    for (int i = 0; i < 60; ++i) {
        const Poly base = random_nonzero(rng, 2, 2, 0.8);
        const Poly p = base * base * random_nonzero(rng, 2, 1);
        const FactorList parts = squarefree_decomposition(p);
        Poly rebuilt = Poly::constant(2, Rational(1));
        for (const auto& [factor, mult] : parts) {
            REQUIRE(mult >= 1);
            rebuilt = rebuilt * factor.pow(static_cast<unsigned>(mult));
            // Each factor is square-free: coprime to its own derivative.
            Poly d = factor.partial_derivative(0);
            if (d.is_zero()) d = factor.partial_derivative(1);
            if (!d.is_zero()) CHECK(poly_gcd(factor, d).is_constant());
        }
        CHECK(associates(rebuilt, p));
        for (std::size_t s = 0; s < parts.size(); ++s)
            for (std::size_t t = s + 1; t < parts.size(); ++t)
                CHECK(poly_gcd(parts[s].first, parts[t].first).is_constant());
    }
}

TEST_CASE("square-free worked examples") {
    const FactorList f1 = squarefree_decomposition(pp("d1^2*d2", 2));
    REQUIRE(f1.size() == 2);
    // Multiplicities 2 and 1 for d1 and d2 in some order.
    const bool d1_first = associates(f1[0].first, pp("d1", 2));
    const auto& sq = d1_first ? f1[0] : f1[1];
    const auto& lin = d1_first ? f1[1] : f1[0];
    CHECK(associates(sq.first, pp("d1", 2)));
    CHECK(sq.second == 2);
    CHECK(associates(lin.first, pp("d2", 2)));
    CHECK(lin.second == 1);

    const FactorList f2 = squarefree_decomposition(pp("d1^2 + d2^2", 2));
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].second == 1);

    const Poly cube = pp("(d1 + d2)^3", 2);
    const FactorList f3 = squarefree_decomposition(cube);
    REQUIRE(f3.size() == 1);
    CHECK(associates(f3[0].first, pp("d1 + d2", 2)));
    CHECK(f3[0].second == 3);
}

TEST_CASE("univariate factorization finds rational roots and stops at irreducibles") {
    const FactorList f1 = univariate_factor(pp("d1^2 - 1", 1));
    REQUIRE(f1.size() == 2);

    const FactorList f2 = univariate_factor(pp("d1^2 + 1", 1));
    REQUIRE(f2.size() == 1);
    CHECK(associates(f2[0].first, pp("d1^2 + 1", 1)));

    const FactorList f3 = univariate_factor(pp("d1^3 - d1", 1));
    CHECK(f3.size() == 3);

    // Kronecker splits a product of two quadratics without rational roots.
    const Poly prod = pp("(d1^2 + d1 + 1) * (d1^2 + 2)", 1);
    const FactorList f4 = univariate_factor(prod);
    REQUIRE(f4.size() == 2);
    CHECK(associates(f4[0].first * f4[1].first, prod));

    // An irreducible quartic must not split.
    const FactorList f5 = univariate_factor(pp("d1^4 + d1^3 + d1^2 + d1 + 1", 1));
    REQUIRE(f5.size() == 1);
    CHECK(f5[0].second == 1);

    const FactorList f6 = univariate_factor(pp("d1^4 - 4", 1));
    REQUIRE(f6.size() == 2);
    CHECK(associates(f6[0].first * f6[1].first, pp("d1^4 - 4", 1)));
}

TEST_CASE("primitive integer form scales back to the original") {
    SplitMix64 rng(109);
    for (int i = 0; i < 40; ++i) {
        Poly p = random_nonzero(rng, 2, 2, 0.8);
        p = p.scaled(Rational(rng.range(-7, 7) * 2 + 1, rng.range(1, 9)));
        const auto [primitive, scale] = p.primitive_integer_form();
        CHECK(primitive.scaled(scale) == p);
        CHECK(sign_of(primitive.leading_term().second) > 0);
    }
}

TEST_CASE("text round-trip and parse errors") {
    SplitMix64 rng(110);
    for (int i = 0; i < 100; ++i) {
        const Poly p = random_nonzero(rng, 3, 3, 0.5);
        CHECK(parse_poly(poly_to_string(p), 3) == p);
    }
    CHECK(poly_to_string(Poly::zero(2)) == "0");
    CHECK(parse_poly("-d1^2 + 3/2", 1) == pp("3/2 - d1^2", 1));
    CHECK_THROWS_AS(parse_poly("d4", 3), parse_error);
    CHECK_THROWS_AS(parse_poly("d0", 3), parse_error);
    CHECK_THROWS_AS(parse_poly("d1 +", 3), parse_error);
    CHECK_THROWS_AS(parse_poly("(d1", 3), parse_error);
    CHECK_THROWS_AS(parse_poly("d1 d2", 3), parse_error);
    CHECK_THROWS_AS(parse_poly("", 3), parse_error);
    CHECK_THROWS_AS(parse_poly("d1^-2", 3), parse_error);
}
