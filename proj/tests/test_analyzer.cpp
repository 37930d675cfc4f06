// The decision layer: classification, cancellation/characteristic ideals,
// controllability verdicts, factor extraction, torsion witnesses,
// signal-space variants, and coordinate controllability.

#include "doctest.h"
#include "helpers.hpp"

#include "hautus/analyzer.hpp"
#include "hautus/groebner.hpp"
#include "hautus/module_groebner.hpp"
#include "hautus/polymatrix.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace hautus;
using testutil::mat;
using testutil::pp;

namespace {

const char* kCurlP1 = "vars: 3\n0; -d3; d2\nd3; 0; -d1\n-d2; d1; 0\n";
const char* kCurlP2 = "vars: 3\n0; -d3; d2\nd3; 0; -d1\n-d1*d2; d1^2; 0\n";
const char* kGradient = "vars: 2\nd1; d2\n";
const char* kScalar = "vars: 2\nd1*d2; d1^2 + d1*d2\n";

bool has_factor(const std::vector<UncontrollableFactor>& fs, const Poly& f, int mult) {
    return std::any_of(fs.begin(), fs.end(), [&](const UncontrollableFactor& u) {
        return associates(u.factor, f) && u.multiplicity == mult;
    });
}

// Controllability matrix test for first-order systems d/dt x = A x + B u,
// presented as H = [d * I - A | -B]. Independent of the symbolic pipeline.
bool kalman_controllable(const std::vector<std::vector<Rational>>& A,
                         const std::vector<std::vector<Rational>>& B) {
    const int n = static_cast<int>(A.size());
    const int m = static_cast<int>(B[0].size());
    std::vector<std::vector<Rational>> block = B;
    PolyMatrix staircase(n, n * m, 1);
    int col = 0;
    for (int power = 0; power < n; ++power) {
        for (int j = 0; j < m; ++j, ++col)
            for (int i = 0; i < n; ++i)
                staircase.at(i, col) = Poly::constant(1, block[i][j]);
        // block <- A * block
        std::vector<std::vector<Rational>> next(n, std::vector<Rational>(m, Rational(0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < n; ++k) next[i][j] += A[i][k] * block[k][j];
        block = std::move(next);
    }
    return rank_over_fraction_field(staircase) == n;
}

PolyMatrix state_space_matrix(const std::vector<std::vector<Rational>>& A,
                              const std::vector<std::vector<Rational>>& B) {
    const int n = static_cast<int>(A.size());
    const int m = static_cast<int>(B[0].size());
    PolyMatrix h(n, n + m, 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Poly entry = Poly::constant(1, -A[i][j]);
            if (i == j) entry = entry + pp("d1", 1);
            h.at(i, j) = entry;
        }
        for (int j = 0; j < m; ++j) h.at(i, n + j) = Poly::constant(1, -B[i][j]);
    }
    return h;
}

} // namespace

TEST_CASE("classification and shape") {
    CHECK(classify(mat(kGradient)).kind == SystemClass::StrictlyUnderDetermined);
    CHECK(classify(mat(kCurlP1)).kind == SystemClass::Square);
    CHECK(classify(mat(kCurlP1)).rank_deficient);
    CHECK(classify(mat("vars: 1\nd1\nd1^2\n")).kind == SystemClass::OverDetermined);
    CHECK(classify(mat(kGradient)).symbolic_rank == 1);
}

TEST_CASE("cancellation and characteristic ideals") {
    const IdealBasis grad = cancellation_ideal(mat(kGradient));
    REQUIRE(grad.generators.size() == 2);
    CHECK(krull_dimension(grad) == 0);

    CHECK(cancellation_ideal(mat(kCurlP1)).is_zero_ideal());
    CHECK(characteristic_ideal(mat(kCurlP1)).is_zero_ideal());

    // Strictly under-determined: k-minors do not exist, characteristic ideal
    // degenerates to zero; cancellation ideal of an over-determined system
    // is undefined.
    CHECK(characteristic_ideal(mat(kGradient)).is_zero_ideal());
    CHECK_THROWS_AS(cancellation_ideal(mat("vars: 1\nd1\nd1^2\n")), std::invalid_argument);

    // Over-determined characteristic ideal: the full-size minors.
    const IdealBasis over = characteristic_ideal(mat("vars: 1\nd1\nd1^2\n"));
    REQUIRE(over.generators.size() == 2);
}

TEST_CASE("controllability verdicts on the worked examples") {
    const Verdict grad = hautus_verdict(mat(kGradient));
    CHECK(grad.status == VerdictStatus::Controllable);
    CHECK(grad.cancellation_dimension == 0);

    const Verdict scalar = hautus_verdict(mat(kScalar));
    CHECK(scalar.status == VerdictStatus::Uncontrollable);
    CHECK(scalar.cancellation_dimension == 1);
    REQUIRE(scalar.factors.size() == 1);
    CHECK(associates(scalar.factors[0].factor, pp("d1", 2)));

    CHECK(hautus_verdict(mat(kCurlP1)).status == VerdictStatus::Degenerate);
    CHECK(hautus_verdict(mat(kCurlP2)).status == VerdictStatus::Degenerate);

    // Unit row: strongly controllable.
    const Verdict unit = hautus_verdict(mat("vars: 2\n1; d1\n"));
    CHECK(unit.status == VerdictStatus::StronglyControllable);
    CHECK(unit.cancellation_dimension == -1);

    // Over-determined full column rank: uncontrollable presentation.
    CHECK(hautus_verdict(mat("vars: 1\nd1\nd1^2\n")).status == VerdictStatus::Uncontrollable);
    // Over-determined with zero k-minors (rank-one stack): degenerate.
    CHECK(hautus_verdict(mat("vars: 2\nd1; d2\nd1; d2\nd1; d2\n")).status ==
          VerdictStatus::Degenerate);
}

TEST_CASE("square systems with nonzero determinant are never controllable") {
    // A nonzero determinant that is non-constant gives torsion; a constant
    // determinant gives strong controllability. Either way the verdict and
    // the determinant agree.
    SplitMix64 rng(601);
    SampleSpec spec;
    spec.rows = 2;
    spec.cols = 2;
    spec.nvars = 2;
    spec.degree = 1;
    int seen_nonzero = 0;
    for (int i = 0; i < 25; ++i) {
        const PolyMatrix m = random_matrix(spec, rng);
        const Poly det = determinant(m);
        if (det.is_zero()) continue;
        ++seen_nonzero;
        const Verdict v = hautus_verdict(m);
        if (det.is_constant()) {
            CHECK(v.status == VerdictStatus::StronglyControllable);
        } else {
            CHECK(v.status == VerdictStatus::Uncontrollable);
        }
    }
    CHECK(seen_nonzero >= 20);
}

TEST_CASE("uncontrollable factors: extraction and refinement") {
    const auto fs = uncontrollable_factors(mat("vars: 3\nd1*d2; d1*d3\n"));
    REQUIRE(fs.size() == 1);
    CHECK(has_factor(fs, pp("d1", 3), 1));
    CHECK(fs[0].irreducible);

    const auto two = uncontrollable_factors(mat("vars: 3\nd1; d1*d2; 0\n0; d3; d3*d1\n"));
    CHECK(has_factor(two, pp("d1", 3), 1));
    CHECK(has_factor(two, pp("d3", 3), 1));

    // Controllable: no factors.
    CHECK(uncontrollable_factors(mat(kGradient)).empty());

    // Repeated factor: multiplicity from the square-free decomposition.
    const auto rep = uncontrollable_factors(mat("vars: 2\nd1^2*d2; d1^2*(d2 + 1)\n"));
    REQUIRE(rep.size() == 1);
    CHECK(has_factor(rep, pp("d1", 2), 2));

    // Univariate content is refined to irreducible factors.
    const auto uni = uncontrollable_factors(mat("vars: 2\n(d1^2 - 1)*d2; (d1^2 - 1)*(d2 + 1)\n"));
    CHECK(uni.size() == 2);
    CHECK(has_factor(uni, pp("d1 - 1", 2), 1));
    CHECK(has_factor(uni, pp("d1 + 1", 2), 1));

    // Degenerate input is rejected.
    CHECK_THROWS_AS(uncontrollable_factors(mat(kCurlP1)), std::invalid_argument);
}

TEST_CASE("torsion witness on the scalar example") {
    const TorsionWitness w = torsion_witness(mat(kScalar), pp("d1", 2));
    REQUIRE(w.witness.rank() == 2);
    CHECK(w.witness.components[0] == pp("d2", 2));
    CHECK(w.witness.components[1] == pp("d1 + d2", 2));
    REQUIRE(w.certificate.size() == 1);
    CHECK(w.certificate[0] == pp("1", 2));
}

TEST_CASE("torsion witness when a row is divisible by the factor") {
    const PolyMatrix m = mat("vars: 3\nd1; d1*d2; 0\n0; 0; 1\n");
    const TorsionWitness w = torsion_witness(m, pp("d1", 3));
    CHECK(w.witness.components[0] == pp("1", 3));
    CHECK(w.witness.components[1] == pp("d2", 3));
    CHECK(w.witness.components[2].is_zero());
}

TEST_CASE("torsion witnesses verify membership both ways") {
    SplitMix64 rng(602);
    const std::vector<const char*> sources = {
        kScalar,
        "vars: 2\nd1*d2; d1^2\n",
        "vars: 3\nd1*d2; d1*d3\n",
        "vars: 2\n(d1 + d2)*d1; (d1 + d2)*d2\n",
        "vars: 2\nd1^2*d2; d1^2*(d2 + 1)\n",
    };
    for (const char* src : sources) {
        const PolyMatrix m = mat(src);
        const ModuleGroebnerBasis rows = module_buchberger(SubmoduleBasis::row_module(m));
        for (const auto& f : uncontrollable_factors(m)) {
            const TorsionWitness w = torsion_witness(m, f.factor);
            CHECK_FALSE(module_membership(w.witness, rows));
            CHECK(module_membership(w.witness.scaled_by(f.factor), rows));
        }
    }
}

TEST_CASE("torsion witness preconditions") {
    // d2 does not divide the minors of the scalar example.
    CHECK_THROWS_AS(torsion_witness(mat(kScalar), pp("d2", 2)), std::exception);
    // Degenerate system has no witness.
    CHECK_THROWS_AS(torsion_witness(mat(kCurlP1), pp("d1", 3)), std::exception);
    // Constant factors are rejected.
    CHECK_THROWS_AS(torsion_witness(mat(kScalar), pp("2", 2)), std::invalid_argument);
}

TEST_CASE("first-order systems match the controllability-matrix test") {
    SplitMix64 rng(603);
    int agree = 0;
    const int cases = 100;
    for (int i = 0; i < cases; ++i) {
        const int n = 1 + static_cast<int>(rng.below(4));
        const int m = 1 + static_cast<int>(rng.below(2));
        std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
        std::vector<std::vector<Rational>> B(n, std::vector<Rational>(m));
        for (auto& row : A)
            for (auto& x : row) x = Rational(rng.range(-3, 3));
        for (auto& row : B)
            for (auto& x : row) x = Rational(rng.range(-3, 3));
        const Verdict v = hautus_verdict(state_space_matrix(A, B));
        const bool kalman = kalman_controllable(A, B);
        const bool symbolic = v.status == VerdictStatus::StronglyControllable;
        if (kalman == symbolic) ++agree;
        // In one variable the only controllable case is the strong one.
        if (!kalman)
            CHECK((v.status == VerdictStatus::Uncontrollable ||
                   v.status == VerdictStatus::Degenerate));
    }
    CHECK(agree == cases);
}

TEST_CASE("verdict strength is monotone in the ideal") {
    SplitMix64 rng(604);
    SampleSpec spec;
    spec.rows = 1;
    spec.cols = 2;
    spec.nvars = 2;
    spec.degree = 2;
    for (int i = 0; i < 40; ++i) {
        const PolyMatrix m = random_matrix(spec, rng);
        const IdealBasis ideal = cancellation_ideal(m);
        if (ideal.is_zero_ideal()) continue;
        const Verdict v = hautus_verdict(m);
        const GroebnerBasis gb = buchberger(ideal);
        const int dim = krull_dimension(gb, 2);
        if (v.status == VerdictStatus::StronglyControllable) CHECK(contains_one(gb));
        if (v.status == VerdictStatus::Controllable) CHECK(dim <= 0);
        if (v.status == VerdictStatus::Uncontrollable) {
            CHECK(dim == 1);
            CHECK_FALSE(v.factors.empty());
        }
        // Factors exist exactly in the uncontrollable case.
        CHECK(v.factors.empty() == (v.status != VerdictStatus::Uncontrollable));
    }
}

TEST_CASE("signal-space verdicts on the worked examples") {
    // Real-point-free factor: temperate-controllable despite smooth torsion.
    const PolyMatrix temp = mat("vars: 2\n(d1^2 + d2^2 + 1)*d1; (d1^2 + d2^2 + 1)*d2\n");
    CHECK(hautus_verdict(temp).status == VerdictStatus::Uncontrollable);
    const Verdict vt = signal_space_verdict(temp, SignalSpace::TemperateDistributions);
    CHECK(vt.status == VerdictStatus::Controllable);
    REQUIRE(vt.factors.size() == 1);
    REQUIRE(vt.factors[0].points.has_value());
    CHECK(vt.factors[0].points->certificate == "positivity");

    // Integer point (1, 2): uncontrollable over integer-frequency signals.
    const PolyMatrix sphere = mat("vars: 2\n(d1^2 + d2^2 - 5)*d1; (d1^2 + d2^2 - 5)*d2\n");
    const Verdict vi = signal_space_verdict(sphere, SignalSpace::PeriodicInteger);
    CHECK(vi.status == VerdictStatus::Uncontrollable);

    // Rational zero at 1/2 but odd on integers: verdicts split.
    const PolyMatrix parity = mat("vars: 2\n(2*d1 - 1)*d2; (2*d1 - 1)*(d1 + d2)\n");
    CHECK(signal_space_verdict(parity, SignalSpace::PeriodicRational).status ==
          VerdictStatus::Uncontrollable);
    const Verdict vp = signal_space_verdict(parity, SignalSpace::PeriodicInteger);
    CHECK(vp.status == VerdictStatus::Controllable);
    bool saw_parity = false;
    for (const auto& f : vp.factors)
        if (f.points && f.points->certificate == "parity") saw_parity = true;
    CHECK(saw_parity);

    // Smooth delegation.
    CHECK(signal_space_verdict(temp, SignalSpace::SmoothOrDistributions).status ==
          VerdictStatus::Uncontrollable);

    // Controllable systems stay controllable in every space.
    for (const auto space : {SignalSpace::SmoothOrDistributions, SignalSpace::TemperateDistributions,
                             SignalSpace::PeriodicRational, SignalSpace::PeriodicInteger})
        CHECK(signal_space_verdict(mat(kGradient), space).status ==
              VerdictStatus::Controllable);

    // Degenerate systems are degenerate in every space.
    CHECK(signal_space_verdict(mat(kCurlP1), SignalSpace::TemperateDistributions).status ==
          VerdictStatus::Degenerate);

    // Over-determined systems: the point criteria do not apply.
    const Verdict over = signal_space_verdict(mat("vars: 1\nd1\nd1^2\n"),
                                              SignalSpace::PeriodicInteger);
    CHECK(over.status == VerdictStatus::Unknown);
}

TEST_CASE("unknown point searches yield unknown verdicts") {
    // Factor with real points but no rational ones found in bounds, and no
    // disproof: the rational verdict must stay unknown, never guess.
    const PolyMatrix m = mat("vars: 2\n(d1^2 + d2^2 - 3)*d1; (d1^2 + d2^2 - 3)*d2\n");
    const Verdict v = signal_space_verdict(m, SignalSpace::PeriodicRational);
    CHECK(v.status == VerdictStatus::Unknown);
}

TEST_CASE("coordinate controllability") {
    const CoordinateReport grad = coordinate_controllability(mat(kGradient));
    CHECK(grad.controllable);
    CHECK(grad.surjective == std::vector<int>{0, 1});

    // Square full-rank: k-minor ideal nonzero, no surjective coordinate.
    const CoordinateReport id = coordinate_controllability(mat("vars: 1\nd1; 0\n0; d1\n"));
    CHECK_FALSE(id.controllable);
    CHECK(id.surjective.empty());

    // Degenerate square: zero minor ideal, coordinate-controllable.
    const CoordinateReport curl = coordinate_controllability(mat(kCurlP1));
    CHECK(curl.controllable);
    CHECK_FALSE(curl.surjective.empty());

    // Mixed: first coordinate constrained, second free.
    const CoordinateReport mixed = coordinate_controllability(mat("vars: 2\nd1; d2\n0; d2\n"));
    CHECK_FALSE(mixed.controllable);
}

TEST_CASE("full analysis report structure") {
    const Report r = analyze(mat(kScalar),
                             {SignalSpace::TemperateDistributions, SignalSpace::PeriodicInteger});
    CHECK(r.shape.kind == SystemClass::StrictlyUnderDetermined);
    REQUIRE(r.verdicts.size() == 3); // smooth first, then the requested two
    CHECK(r.verdicts[0].space == SignalSpace::SmoothOrDistributions);
    CHECK(r.verdicts[0].status == VerdictStatus::Uncontrollable);
    REQUIRE(r.factors.size() == 1);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(associates(r.witnesses[0].prime_factor, pp("d1", 2)));
    CHECK(r.cancellation_dimension == 1);
    CHECK_FALSE(r.fitting.has_value());
    CHECK(r.elapsed_seconds >= 0.0);

    // Degenerate report carries the fallback diagnostics instead.
    const Report deg = analyze(mat(kCurlP1), {});
    CHECK(deg.verdicts.size() == 1);
    REQUIRE(deg.fitting.has_value());
    CHECK(deg.fitting->rank == 2);
    CHECK(deg.fitting->dimension == 0);
    CHECK(deg.fitting->generators.size() == 6);
    CHECK_FALSE(deg.cancellation_dimension.has_value());

    // Witness extraction can be switched off.
    const Report quiet = analyze(mat(kScalar), {}, SearchBounds{}, false);
    CHECK(quiet.witnesses.empty());
    CHECK_FALSE(quiet.factors.empty());

    // Duplicate space requests collapse.
    const Report dedup = analyze(mat(kGradient),
                                 {SignalSpace::SmoothOrDistributions, SignalSpace::SmoothOrDistributions});
    CHECK(dedup.verdicts.size() == 1);
}
