#pragma once

#include "hautus/groebner.hpp"
#include "hautus/module_groebner.hpp"
#include "hautus/pointfinder.hpp"
#include "hautus/polymatrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hautus {

// Shape taxonomy for a system given by an l x k matrix of operators.
enum class SystemClass { StrictlyUnderDetermined, Square, OverDetermined };

// Where the solutions live. Smooth functions and distributions share one
// verdict; the remaining spaces attach arithmetic side conditions (real,
// rational, integer frequencies) to the uncontrollable factors.
enum class SignalSpace {
    SmoothOrDistributions,
    TemperateDistributions,
    PeriodicRational,
    PeriodicInteger,
};

enum class VerdictStatus {
    StronglyControllable, // maximal-minor ideal is the unit ideal: free quotient
    Controllable,         // rank drops only on a set of dimension <= n-2
    Uncontrollable,       // torsion present (codim-1 rank drop, or over-determined)
    Degenerate,           // maximal minors all vanish: the rank test is inapplicable
    Unknown,              // point searches inconclusive for this space
};

std::string system_class_name(SystemClass c);
std::string signal_space_name(SignalSpace s);
std::string verdict_status_name(VerdictStatus v);
std::string point_status_name(PointStatus s);
// Accepts the CLI vocabulary: smooth | temperate | periodic-rational | periodic-integer.
std::optional<SignalSpace> parse_signal_space(const std::string& text);

struct SystemShape {
    SystemClass kind = SystemClass::Square;
    int rows = 0;
    int cols = 0;
    int nvars = 0;
    int symbolic_rank = 0; // rank over the rational-function field
    bool rank_deficient = false;
};

// A square-free common factor of all maximal minors, i.e. one codimension-1
// component of the rank-drop locus.
struct UncontrollableFactor {
    Poly factor;
    int multiplicity = 1;
    // true when the factor is univariate and therefore certified irreducible
    // over the rationals; multivariate factors are square-free only.
    bool irreducible = false;
};

struct VerdictFactor {
    Poly factor;
    int multiplicity = 1;
    // The point query backing this space's verdict (absent for the
    // smooth/distribution space, where no arithmetic condition applies).
    std::optional<PointAnswer> points;
};

struct Verdict {
    SignalSpace space = SignalSpace::SmoothOrDistributions;
    VerdictStatus status = VerdictStatus::Unknown;
    // Krull dimension of the quotient by the maximal-minor ideal; absent when
    // that ideal is zero or undefined for the shape.
    std::optional<int> cancellation_dimension;
    std::vector<VerdictFactor> factors;
    std::vector<std::string> notes;
};

// x outside the row module with p*x inside it, plus the certifying
// combination: p*x = sum_i certificate[i] * row_i.
struct TorsionWitness {
    Poly prime_factor;
    VectorPoly witness;
    std::vector<Poly> certificate;
};

struct CoordinateReport {
    bool controllable = false;          // all maximal minors vanish (k x k ideal zero)
    std::vector<int> surjective;        // 0-based coordinates j with (row module : e_j) = 0
    std::vector<std::string> notes;
};

// Diagnostics for degenerate systems: the largest r with a nonzero r x r
// minor, those minors, and the dimension of their quotient.
struct FittingDiagnostics {
    int rank = 0;
    std::vector<Poly> generators;
    int dimension = 0;
};

struct Report {
    PolyMatrix system;
    SystemShape shape;
    // Maximal-minor (l x l) ideal; meaningful only when rows <= cols.
    std::optional<IdealBasis> cancellation;
    // k x k minor ideal; the zero ideal when rows < cols.
    IdealBasis characteristic;
    std::optional<int> cancellation_dimension;
    std::vector<Verdict> verdicts;
    std::vector<UncontrollableFactor> factors;
    std::vector<TorsionWitness> witnesses;
    CoordinateReport coordinates;
    std::optional<FittingDiagnostics> fitting;
    std::vector<std::string> diagnostics;
    double elapsed_seconds = 0.0;

    explicit Report(PolyMatrix sys) : system(std::move(sys)), characteristic(system.nvars(), {}) {}
};

SystemShape classify(const PolyMatrix& P);

// Ideal of the l x l minors (rows <= cols; throws std::invalid_argument for
// rows > cols, where no such minor exists).
IdealBasis cancellation_ideal(const PolyMatrix& P);
// Ideal of the k x k minors; the zero ideal when rows < cols.
IdealBasis characteristic_ideal(const PolyMatrix& P);

// The controllability decision for smooth functions / distributions.
Verdict hautus_verdict(const PolyMatrix& P);

// Square-free decomposition of the gcd of all nonzero maximal minors, with
// univariate factors refined to irreducibles. Requires rows <= cols and a
// nonzero maximal-minor ideal (std::invalid_argument otherwise). Empty
// exactly when the gcd is constant (no codimension-1 rank drop).
std::vector<UncontrollableFactor> uncontrollable_factors(const PolyMatrix& P);

// Constructive torsion extraction: eliminate over the ring of fractions whose
// denominators avoid the factor p, pivoting on entries not divisible by p;
// the first row left fully divisible by p yields x = row/p. Verifies
// p*x in the row module and x outside it, and throws invariant_violation if
// either check fails - an unverified witness is never returned.
TorsionWitness torsion_witness(const PolyMatrix& P, const Poly& p);

Verdict signal_space_verdict(const PolyMatrix& P, SignalSpace space,
                             const SearchBounds& bounds = {});

CoordinateReport coordinate_controllability(const PolyMatrix& P);

// Full orchestration. The smooth/distribution verdict is always computed
// first; the remaining requested spaces follow in the given order.
Report analyze(const PolyMatrix& P, const std::vector<SignalSpace>& spaces,
               const SearchBounds& bounds = {}, bool want_witnesses = true);

// Serialization (implemented in report_json.cpp). The JSON document carries
// schema tag "hautus-report/1"; polynomials are rendered in the d1..dn text
// grammar and re-parse to equal values.
std::string report_to_json(const Report& report);
std::string report_to_text(const Report& report);

} // namespace hautus
