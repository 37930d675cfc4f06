// Matrices over the polynomial ring: determinants (Bareiss vs cofactor
// oracle), minor enumeration, rank, evaluation, and the text format.

#include "doctest.h"
#include "helpers.hpp"

#include "hautus/errors.hpp"
#include "hautus/polymatrix.hpp"

#include <vector>

using namespace hautus;
using testutil::mat;
using testutil::pp;

namespace {

// Textbook cofactor expansion along the first row; exponential but
// independent of the fraction-free elimination under test.
Poly cofactor_determinant(const PolyMatrix& m) {
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    Poly acc = Poly::zero(m.nvars());
    for (int j = 0; j < n; ++j) {
        PolyMatrix sub(n - 1, n - 1, m.nvars());
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        const Poly term = m.at(0, j) * cofactor_determinant(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

PolyMatrix random_matrix_of(SplitMix64& rng, int rows, int cols, int nvars, int degree,
                            double density) {
    SampleSpec spec;
    spec.rows = rows;
    spec.cols = cols;
    spec.nvars = nvars;
    spec.degree = degree;
    spec.density = density;
    return random_matrix(spec, rng);
}

} // namespace

TEST_CASE("Bareiss determinant matches cofactor expansion") {
    SplitMix64 rng(201);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(rng.below(4));
        const PolyMatrix m = random_matrix_of(rng, n, n, 2, 1, 0.7);
        CHECK(determinant(m) == cofactor_determinant(m));
    }
}

TEST_CASE("determinant worked examples") {
    const PolyMatrix curl = mat("vars: 3\n0; -d3; d2\nd3; 0; -d1\n-d2; d1; 0\n");
    CHECK(determinant(curl).is_zero());
    const PolyMatrix diag = mat("vars: 2\nd1; 0\n0; d2\n");
    CHECK(determinant(diag) == pp("d1*d2", 2));
    const PolyMatrix two = mat("vars: 2\nd1; d2\nd2; d1\n");
    CHECK(determinant(two) == pp("d1^2 - d2^2", 2));
}

TEST_CASE("minor enumeration has the right count and index order") {
    const PolyMatrix curl = mat("vars: 3\n0; -d3; d2\nd3; 0; -d1\n-d2; d1; 0\n");
    const MinorSet ms = minors(curl, 2);
    REQUIRE(ms.entries.size() == 9); // C(3,2)^2
    CHECK(ms.size == 2);
    // First entry: rows {0,1}, cols {0,1}.
    CHECK(ms.entries[0].rows == std::vector<int>{0, 1});
    CHECK(ms.entries[0].cols == std::vector<int>{0, 1});
    CHECK(ms.entries[0].value == pp("d3^2", 3));
    // Column sets advance before row sets.
    CHECK(ms.entries[1].rows == std::vector<int>{0, 1});
    CHECK(ms.entries[1].cols == std::vector<int>{0, 2});
    CHECK(ms.entries.back().rows == std::vector<int>{1, 2});
    CHECK(ms.entries.back().cols == std::vector<int>{1, 2});

    const MinorSet full = minors(curl, 3);
    REQUIRE(full.entries.size() == 1);
    CHECK(full.all_zero());

    CHECK_THROWS_AS(minors(curl, 4), std::invalid_argument);
    CHECK_THROWS_AS(minors(curl, 0), std::invalid_argument);
}

TEST_CASE("1x1 minors are the entries") {
    const PolyMatrix m = mat("vars: 2\nd1; d2\n");
    const MinorSet ms = minors(m, 1);
    REQUIRE(ms.entries.size() == 2);
    CHECK(ms.entries[0].value == pp("d1", 2));
    CHECK(ms.entries[1].value == pp("d2", 2));
    CHECK(ms.nonzero_values().size() == 2);
}

TEST_CASE("rank over the fraction field") {
    const PolyMatrix curl = mat("vars: 3\n0; -d3; d2\nd3; 0; -d1\n-d2; d1; 0\n");
    CHECK(rank_over_fraction_field(curl) == 2);
    const PolyMatrix grad = mat("vars: 2\nd1; d2\n");
    CHECK(rank_over_fraction_field(grad) == 1);
    PolyMatrix zero(2, 3, 1);
    CHECK(rank_over_fraction_field(zero) == 0);
    const PolyMatrix id = mat("vars: 1\n1; 0\n0; 1\n");
    CHECK(rank_over_fraction_field(id) == 2);

    // Rank agrees with the largest r having a nonzero r-minor.
    SplitMix64 rng(202);
    for (int i = 0; i < 30; ++i) {
        const PolyMatrix m = random_matrix_of(rng, 2, 3, 2, 1, 0.5);
        const int rank = rank_over_fraction_field(m);
        int largest = 0;
        for (int r = 1; r <= 2; ++r)
            if (!minors(m, r).all_zero()) largest = r;
        CHECK(rank == largest);
    }
}

TEST_CASE("evaluation reports the rank at the point") {
    const PolyMatrix curl = mat("vars: 3\n0; -d3; d2\nd3; 0; -d1\n-d2; d1; 0\n");
    const EvaluatedMatrix at_origin = eval_matrix(curl, {Rational(0), Rational(0), Rational(0)});
    CHECK(at_origin.rank == 0);
    const EvaluatedMatrix generic = eval_matrix(curl, {Rational(1), Rational(2), Rational(3)});
    CHECK(generic.rank == 2);
    CHECK(generic.entries[0][1] == Rational(-3));
}

TEST_CASE("matrix text round-trip") {
    SplitMix64 rng(203);
    for (int i = 0; i < 40; ++i) {
        const int rows = 1 + static_cast<int>(rng.below(3));
        const int cols = 1 + static_cast<int>(rng.below(3));
        const PolyMatrix m = random_matrix_of(rng, rows, cols, 2, 2, 0.6);
        CHECK(parse_matrix_text(format_matrix(m)) == m);
    }
}

TEST_CASE("matrix text accepts comments and blank lines") {
    const PolyMatrix m = mat("# leading comment\n\nvars: 2\n# interior comment\nd1; d2\n\n");
    CHECK(m.rows() == 1);
    CHECK(m.cols() == 2);
    CHECK(m.at(0, 1) == pp("d2", 2));
}

TEST_CASE("matrix text rejects malformed input") {
    CHECK_THROWS_AS(mat("d1; d2\n"), parse_error);                      // missing header
    CHECK_THROWS_AS(mat("vars: 0\nd1\n"), parse_error);                 // bad count
    CHECK_THROWS_AS(mat("vars: x\nd1\n"), parse_error);                 // non-numeric
    CHECK_THROWS_AS(mat("vars: 2\nd1; d2\nd1\n"), parse_error);         // ragged rows
    CHECK_THROWS_AS(mat("vars: 2\nd1; d3\n"), parse_error);             // unknown variable
    CHECK_THROWS_AS(mat("vars: 2\n"), parse_error);                     // no rows
    CHECK_THROWS_AS(mat("vars: 2\nd1; d2 d1\n"), parse_error);          // entry syntax
}

TEST_CASE("matrix file loader reports missing files") {
    CHECK_THROWS_AS(parse_matrix_file("/nonexistent/path.mat"), std::runtime_error);
}
