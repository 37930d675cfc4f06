#include "hautus/analyzer.hpp"

#include "hautus/errors.hpp"
#include "hautus/factor.hpp"
#include "hautus/poly_text.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace hautus {

std::string system_class_name(SystemClass c) {
    switch (c) {
        case SystemClass::StrictlyUnderDetermined: return "strictly-under-determined";
        case SystemClass::Square: return "square";
        case SystemClass::OverDetermined: return "over-determined";
    }
    return "?";
}

std::string signal_space_name(SignalSpace s) {
    switch (s) {
        case SignalSpace::SmoothOrDistributions: return "smooth";
        case SignalSpace::TemperateDistributions: return "temperate";
        case SignalSpace::PeriodicRational: return "periodic-rational";
        case SignalSpace::PeriodicInteger: return "periodic-integer";
    }
    return "?";
}

std::string verdict_status_name(VerdictStatus v) {
    switch (v) {
        case VerdictStatus::StronglyControllable: return "strongly-controllable";
        case VerdictStatus::Controllable: return "controllable";
        case VerdictStatus::Uncontrollable: return "uncontrollable";
        case VerdictStatus::Degenerate: return "degenerate";
        case VerdictStatus::Unknown: return "unknown";
    }
    return "?";
}

std::string point_status_name(PointStatus s) {
    switch (s) {
        case PointStatus::Yes: return "yes";
        case PointStatus::No: return "no";
        case PointStatus::Unknown: return "unknown";
    }
    return "?";
}

std::optional<SignalSpace> parse_signal_space(const std::string& text) {
    if (text == "smooth") return SignalSpace::SmoothOrDistributions;
    if (text == "temperate") return SignalSpace::TemperateDistributions;
    if (text == "periodic-rational") return SignalSpace::PeriodicRational;
    if (text == "periodic-integer") return SignalSpace::PeriodicInteger;
    return std::nullopt;
}

namespace {

Poly sign_normalized(const Poly& p) {
    if (p.is_zero()) return p;
    return p.leading_term().second < 0 ? -p : p;
}

// Deterministic total order on polynomials: compare term lists from the
// leading end (degrevlex monomial, then coefficient).
bool poly_less(const Poly& a, const Poly& b) {
    auto ai = a.terms().rbegin();
    auto bi = b.terms().rbegin();
    const auto ae = a.terms().rend();
    const auto be = b.terms().rend();
    for (; ai != ae && bi != be; ++ai, ++bi) {
        const int c = degrevlex_cmp(ai->first, bi->first);
        if (c != 0) return c < 0;
        if (ai->second != bi->second) return ai->second < bi->second;
    }
    return ai == ae && bi != be;
}

// Sign-normalized, sorted, deduplicated generator list.
std::vector<Poly> normalized_unique(std::vector<Poly> v) {
    for (Poly& p : v) p = sign_normalized(p);
    std::sort(v.begin(), v.end(), poly_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::string factor_note(const std::string& kind, const Poly& f, const PointAnswer& a) {
    std::ostringstream os;
    os << "factor " << poly_to_string(f) << ": " << kind << " points "
       << point_status_name(a.status);
    if (!a.certificate.empty()) os << " (certificate: " << a.certificate << ")";
    if (!a.effort.empty()) os << " (search: " << a.effort << ")";
    if (a.point) {
        os << " at (";
        for (size_t i = 0; i < a.point->size(); ++i)
            os << (i ? ", " : "") << rational_to_string((*a.point)[i]);
        os << ")";
    }
    return os.str();
}

const char* kConventionNote =
    "symbols d1..dn are read as the frequency variables of this signal space; "
    "supply the matrix already in those coordinates";

} // namespace

SystemShape classify(const PolyMatrix& P) {
    SystemShape s;
    s.rows = P.rows();
    s.cols = P.cols();
    s.nvars = P.nvars();
    s.kind = s.rows < s.cols   ? SystemClass::StrictlyUnderDetermined
             : s.rows == s.cols ? SystemClass::Square
                                : SystemClass::OverDetermined;
    s.symbolic_rank = rank_over_fraction_field(P);
    s.rank_deficient = s.symbolic_rank < std::min(s.rows, s.cols);
    return s;
}

IdealBasis cancellation_ideal(const PolyMatrix& P) {
    if (P.rows() > P.cols())
        throw std::invalid_argument(
            "cancellation ideal undefined: more rows than columns, no full-row minor exists");
    return IdealBasis(P.nvars(), normalized_unique(minors(P, P.rows()).nonzero_values()));
}

IdealBasis characteristic_ideal(const PolyMatrix& P) {
    if (P.rows() < P.cols()) return IdealBasis(P.nvars(), {}); // no k x k submatrix
    return IdealBasis(P.nvars(), normalized_unique(minors(P, P.cols()).nonzero_values()));
}

std::vector<UncontrollableFactor> uncontrollable_factors(const PolyMatrix& P) {
    const IdealBasis il = cancellation_ideal(P); // throws for rows > cols
    if (il.is_zero_ideal())
        throw std::invalid_argument(
            "uncontrollable factors undefined: all maximal minors vanish");
    const Poly g = poly_gcd(il.generators);
    std::vector<UncontrollableFactor> out;
    if (g.is_constant()) return out;
    for (const auto& [f, mult] : squarefree_decomposition(g)) {
        int var = -1;
        if (f.is_effectively_univariate(&var)) {
            for (const auto& [q, m2] : univariate_factor(f))
                out.push_back({q, mult * m2, true});
        } else {
            // Polynomials of total degree one are irreducible over any field;
            // higher multivariate factors are square-free but uncertified.
            out.push_back({sign_normalized(f), mult, f.total_degree() == 1});
        }
    }
    return out;
}

Verdict hautus_verdict(const PolyMatrix& P) {
    Verdict v;
    v.space = SignalSpace::SmoothOrDistributions;
    const int n = P.nvars();

    if (P.rows() > P.cols()) {
        const IdealBasis ik = characteristic_ideal(P);
        if (!ik.is_zero_ideal()) {
            v.status = VerdictStatus::Uncontrollable;
            v.notes.push_back(
                "over-determined system with a nonzero maximal (k x k) minor ideal: every "
                "coordinate of the quotient is annihilated by a nonzero operator, so no "
                "nonzero controllable sub-behavior exists");
        } else {
            v.status = VerdictStatus::Degenerate;
            v.notes.push_back(
                "over-determined system whose k x k minors all vanish: the symbolic rank is "
                "below the column count and the rank-drop test is inapplicable");
        }
        return v;
    }

    const IdealBasis il = cancellation_ideal(P);
    if (il.is_zero_ideal()) {
        v.status = VerdictStatus::Degenerate;
        v.notes.push_back(
            "all maximal minors vanish: the rows are dependent over the rational-function "
            "field, and the rank-drop criterion does not apply to this presentation");
        return v;
    }

    const GroebnerBasis gb = buchberger(il);
    if (contains_one(gb)) {
        v.status = VerdictStatus::StronglyControllable;
        v.cancellation_dimension = -1;
        v.notes.push_back(
            "the maximal-minor ideal is the unit ideal: the matrix keeps full row rank at "
            "every point, the quotient module is free");
        return v;
    }

    const int dim = krull_dimension(gb, n);
    v.cancellation_dimension = dim;
    if (dim <= n - 2) {
        v.status = VerdictStatus::Controllable;
        std::ostringstream os;
        os << "rank drops only on a variety of dimension " << dim << " <= n-2 = " << n - 2
           << ": the quotient module is torsion-free";
        v.notes.push_back(os.str());
    } else {
        v.status = VerdictStatus::Uncontrollable;
        std::ostringstream os;
        os << "rank drops on a variety of dimension " << dim
           << " > n-2: the maximal minors share a non-constant factor, giving torsion";
        v.notes.push_back(os.str());
        for (const auto& f : uncontrollable_factors(P))
            v.factors.push_back({f.factor, f.multiplicity, std::nullopt});
    }
    return v;
}

Verdict signal_space_verdict(const PolyMatrix& P, SignalSpace space, const SearchBounds& bounds) {
    if (space == SignalSpace::SmoothOrDistributions) return hautus_verdict(P);

    Verdict v;
    v.space = space;
    const int n = P.nvars();
    v.notes.push_back(kConventionNote);

    if (P.rows() > P.cols()) {
        v.status = VerdictStatus::Unknown;
        v.notes.push_back(
            "no decision criterion is implemented for over-determined systems in this "
            "signal space; the smooth/distribution verdict does not transfer");
        return v;
    }

    const IdealBasis il = cancellation_ideal(P);
    if (il.is_zero_ideal()) {
        v.status = VerdictStatus::Degenerate;
        v.notes.push_back(
            "all maximal minors vanish: the factor criterion for this space presupposes a "
            "presentation of full symbolic row rank");
        return v;
    }

    const GroebnerBasis gb = buchberger(il);
    if (contains_one(gb)) {
        v.status = VerdictStatus::StronglyControllable;
        v.cancellation_dimension = -1;
        v.notes.push_back("free row module: controllable in every admissible signal space");
        return v;
    }
    v.cancellation_dimension = krull_dimension(gb, n);

    const auto factors = uncontrollable_factors(P);
    if (factors.empty()) {
        v.status = VerdictStatus::Controllable;
        std::ostringstream os;
        os << "rank drops only on a variety of dimension " << *v.cancellation_dimension
           << " <= n-2 = " << n - 2 << ", with no codimension-1 component";
        v.notes.push_back(os.str());
        return v;
    }

    const char* kind = space == SignalSpace::TemperateDistributions ? "real"
                       : space == SignalSpace::PeriodicRational     ? "rational"
                                                                    : "integer";
    bool any_yes = false, any_unknown = false;
    for (const auto& f : factors) {
        PointAnswer ans = space == SignalSpace::TemperateDistributions
                              ? has_real_points(f.factor, bounds)
                          : space == SignalSpace::PeriodicRational
                              ? has_rational_points(f.factor, bounds)
                              : has_integer_points(f.factor, bounds);
        any_yes |= ans.status == PointStatus::Yes;
        any_unknown |= ans.status == PointStatus::Unknown;
        v.notes.push_back(factor_note(kind, f.factor, ans));
        v.factors.push_back({f.factor, f.multiplicity, std::move(ans)});
    }
    v.status = any_yes       ? VerdictStatus::Uncontrollable
               : any_unknown ? VerdictStatus::Unknown
                             : VerdictStatus::Controllable;
    if (v.status == VerdictStatus::Controllable)
        v.notes.push_back(
            "every codimension-1 rank-drop component avoids the arithmetic points of this "
            "space");
    return v;
}

// ---- torsion witness extraction ----

namespace {

// Fraction over the polynomial ring, kept reduced with a primitive
// positive-leading denominator. Used for elimination over the ring of
// fractions whose denominators avoid the chosen factor.
struct Frac {
    Poly num;
    Poly den;
};

Frac frac_zero(int nvars) { return {Poly::zero(nvars), Poly::constant(nvars, 1)}; }

Frac make_frac(Poly n, Poly d) {
    if (d.is_zero()) throw invariant_violation("local elimination: zero denominator");
    if (n.is_zero()) return frac_zero(n.nvars());
    const Poly g = poly_gcd(n, d);
    if (!g.is_constant()) {
        n = *n.try_divide(g);
        d = *d.try_divide(g);
    }
    auto [dp, dscale] = d.primitive_integer_form(); // d = dscale * dp
    return {n.scaled(Rational(1) / dscale), std::move(dp)};
}

Frac frac_of(const Poly& p) { return {p, Poly::constant(p.nvars(), 1)}; }

Frac frac_sub(const Frac& a, const Frac& b) {
    return make_frac(a.num * b.den - b.num * a.den, a.den * b.den);
}
Frac frac_mul(const Frac& a, const Frac& b) { return make_frac(a.num * b.num, a.den * b.den); }
Frac frac_div(const Frac& a, const Frac& b) {
    if (b.num.is_zero()) throw invariant_violation("local elimination: division by zero");
    return make_frac(a.num * b.den, a.den * b.num);
}

bool divisible_by(const Poly& a, const Poly& p) {
    return a.is_zero() || a.try_divide(p).has_value();
}

} // namespace

TorsionWitness torsion_witness(const PolyMatrix& P, const Poly& p) {
    const int l = P.rows(), k = P.cols(), n = P.nvars();
    if (p.nvars() != n) throw std::invalid_argument("witness factor has a different variable count");
    if (p.is_zero() || p.is_constant())
        throw std::invalid_argument("witness factor must be non-constant");
    if (l > k) throw std::invalid_argument("witness extraction requires rows <= cols");

    const MinorSet ms = minors(P, l);
    if (ms.all_zero())
        throw std::invalid_argument("witness extraction requires a nonzero maximal-minor ideal");
    for (const Poly& m : ms.nonzero_values())
        if (!m.try_divide(p))
            throw std::invalid_argument("factor " + poly_to_string(p) +
                                        " does not divide every maximal minor");

    // M = U * P over the localization; pivots are entries not divisible by p.
    std::vector<std::vector<Frac>> M(static_cast<size_t>(l)), U(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < k; ++j) M[static_cast<size_t>(i)].push_back(frac_of(P.at(i, j)));
        for (int j = 0; j < l; ++j)
            U[static_cast<size_t>(i)].push_back(
                i == j ? frac_of(Poly::constant(n, 1)) : frac_zero(n));
    }

    auto local_check = [&](Frac f) {
        if (f.den.try_divide(p))
            throw invariant_violation(
                "local elimination: a denominator became divisible by the factor "
                "(the factor is not prime)");
        return f;
    };

    int found = -1;
    for (int t = 0; t < l && found < 0; ++t) {
        // first row (top to bottom) whose entries are all divisible by p
        for (int r = t; r < l && found < 0; ++r) {
            bool all_div = true, all_zero = true;
            for (int c = 0; c < k; ++c) {
                const Poly& num = M[static_cast<size_t>(r)][static_cast<size_t>(c)].num;
                if (!num.is_zero()) all_zero = false;
                if (!divisible_by(num, p)) {
                    all_div = false;
                    break;
                }
            }
            if (all_div && !all_zero) found = r;
        }
        if (found >= 0) break;

        // pivot search: rows top to bottom, columns left to right
        int pr = -1, pc = -1;
        for (int r = t; r < l && pr < 0; ++r)
            for (int c = 0; c < k; ++c) {
                const Poly& num = M[static_cast<size_t>(r)][static_cast<size_t>(c)].num;
                if (!num.is_zero() && !divisible_by(num, p)) {
                    pr = r;
                    pc = c;
                    break;
                }
            }
        if (pr < 0)
            throw invariant_violation("local elimination: neither pivot nor divisible row");
        std::swap(M[static_cast<size_t>(t)], M[static_cast<size_t>(pr)]);
        std::swap(U[static_cast<size_t>(t)], U[static_cast<size_t>(pr)]);
        for (int i = t + 1; i < l; ++i) {
            auto& Mi = M[static_cast<size_t>(i)];
            auto& Ui = U[static_cast<size_t>(i)];
            if (Mi[static_cast<size_t>(pc)].num.is_zero()) continue;
            const Frac f = frac_div(Mi[static_cast<size_t>(pc)],
                                    M[static_cast<size_t>(t)][static_cast<size_t>(pc)]);
            for (int c = 0; c < k; ++c)
                Mi[static_cast<size_t>(c)] = local_check(frac_sub(
                    Mi[static_cast<size_t>(c)],
                    frac_mul(f, M[static_cast<size_t>(t)][static_cast<size_t>(c)])));
            for (int c = 0; c < l; ++c)
                Ui[static_cast<size_t>(c)] = local_check(frac_sub(
                    Ui[static_cast<size_t>(c)],
                    frac_mul(f, U[static_cast<size_t>(t)][static_cast<size_t>(c)])));
        }
    }
    if (found < 0)
        throw invariant_violation(
            "local elimination reached full rank although the factor divides every maximal "
            "minor (the factor is not prime)");

    // Clear denominators: D * M[found] = (D * U[found]) * P with D avoiding p.
    const auto& mrow = M[static_cast<size_t>(found)];
    const auto& urow = U[static_cast<size_t>(found)];
    Poly D = Poly::constant(n, 1);
    for (const Frac& f : urow) D = poly_lcm(D, f.den);
    for (const Frac& f : mrow) D = poly_lcm(D, f.den);

    std::vector<Poly> cert, x;
    cert.reserve(static_cast<size_t>(l));
    x.reserve(static_cast<size_t>(k));
    for (const Frac& f : urow) cert.push_back(f.num * *D.try_divide(f.den));
    for (const Frac& f : mrow) {
        const Poly cleared = f.num * *D.try_divide(f.den);
        auto q = cleared.try_divide(p);
        if (!q)
            throw invariant_violation(
                "local elimination: divisible row failed exact division by the factor");
        x.push_back(*q);
    }

    // Joint rescale to integer coefficients with content 1 (p*x = cert * rows
    // is preserved by common scaling), sign fixed by the first witness entry.
    Integer num_gcd(0), den_lcm(1);
    for (const auto* vec : {&x, &cert})
        for (const Poly& q : *vec)
            for (const auto& [mon, c] : q.terms()) {
                num_gcd = integer_gcd(num_gcd, boost::multiprecision::abs(numerator_of(c)));
                den_lcm = integer_lcm(den_lcm, denominator_of(c));
            }
    if (num_gcd != 0) {
        const Rational scale{Rational(den_lcm) / Rational(num_gcd)};
        for (auto* vec : {&x, &cert})
            for (Poly& q : *vec) q = q.scaled(scale);
    }
    Rational lead_sign(1);
    for (const Poly& q : x)
        if (!q.is_zero()) {
            if (q.leading_term().second < 0) lead_sign = -1;
            break;
        }
    if (lead_sign < 0)
        for (auto* vec : {&x, &cert})
            for (Poly& q : *vec) q = -q;

    VectorPoly witness(n, x);
    std::vector<Poly> px;
    px.reserve(x.size());
    for (const Poly& q : x) px.push_back(p * q);
    VectorPoly p_witness(n, px);

    const ModuleGroebnerBasis gb = module_buchberger(SubmoduleBasis::row_module(P));
    if (!module_membership(p_witness, gb))
        throw invariant_violation("torsion witness rejected: p*x does not lie in the row module");
    if (module_membership(witness, gb))
        throw invariant_violation("torsion witness rejected: x already lies in the row module");

    return {p, std::move(witness), std::move(cert)};
}

CoordinateReport coordinate_controllability(const PolyMatrix& P) {
    CoordinateReport rep;
    rep.controllable = characteristic_ideal(P).is_zero_ideal();
    const SubmoduleBasis rows = SubmoduleBasis::row_module(P);
    for (int j = 0; j < P.cols(); ++j)
        if (colon_against_unit_vector(rows, j).is_zero_ideal()) rep.surjective.push_back(j);

    // ann = 0 iff i_k = 0 iff some colon ideal is zero; a mismatch is a bug.
    if (rep.controllable != !rep.surjective.empty())
        throw invariant_violation(
            "coordinate analysis inconsistency: k x k minor test and colon ideals disagree");

    if (rep.controllable) {
        rep.notes.push_back(
            "the k x k minor ideal is zero, so the quotient has zero annihilator: at least "
            "one coordinate projection of the behavior is surjective");
        if (rep.surjective.size() >= 2)
            rep.notes.push_back(
                "each listed coordinate is surjective on its own; simultaneous surjectivity "
                "onto several coordinates at once is not implied");
    } else {
        rep.notes.push_back(
            "a nonzero operator annihilates the whole quotient: no coordinate projection is "
            "surjective");
    }
    return rep;
}

Report analyze(const PolyMatrix& P, const std::vector<SignalSpace>& spaces,
               const SearchBounds& bounds, bool want_witnesses) {
    const auto t0 = std::chrono::steady_clock::now();
    Report rep(P);
    rep.shape = classify(P);
    const int n = P.nvars();

    if (P.rows() <= P.cols()) rep.cancellation = cancellation_ideal(P);
    rep.characteristic = characteristic_ideal(P);

    std::vector<SignalSpace> ordered{SignalSpace::SmoothOrDistributions};
    for (SignalSpace s : spaces)
        if (std::find(ordered.begin(), ordered.end(), s) == ordered.end()) ordered.push_back(s);
    for (SignalSpace s : ordered) rep.verdicts.push_back(signal_space_verdict(P, s, bounds));
    rep.cancellation_dimension = rep.verdicts.front().cancellation_dimension;

    if (rep.cancellation && !rep.cancellation->is_zero_ideal()) {
        rep.factors = uncontrollable_factors(P);
        if (want_witnesses)
            for (const auto& f : rep.factors)
                rep.witnesses.push_back(torsion_witness(P, f.factor));
        for (const auto& f : rep.factors)
            if (!f.irreducible) {
                rep.diagnostics.push_back(
                    "factor " + poly_to_string(f.factor) +
                    " is square-free but not certified irreducible (multivariate); it may "
                    "split further over extensions of the rationals");
            }
    }

    rep.coordinates = coordinate_controllability(P);

    if (rep.verdicts.front().status == VerdictStatus::Degenerate) {
        const int r = rep.shape.symbolic_rank;
        if (r >= 1) {
            FittingDiagnostics fit;
            fit.rank = r;
            fit.generators = normalized_unique(minors(P, r).nonzero_values());
            fit.dimension = krull_dimension(IdealBasis(n, fit.generators));
            std::ostringstream os;
            os << "largest nonzero minor size is " << r
               << " (the symbolic rank); that minor ideal has quotient dimension "
               << fit.dimension << ", and dimension <= n-2 = " << n - 2 << " "
               << (fit.dimension <= n - 2 ? "holds" : "fails")
               << " - a necessary condition for controllability that does not decide it";
            rep.diagnostics.push_back(os.str());
            rep.fitting = std::move(fit);
        } else {
            rep.diagnostics.push_back(
                "the matrix is identically zero: the row module is zero and the quotient is "
                "free; the degenerate verdict reflects the redundant zero rows");
        }
        if (n == 1)
            rep.diagnostics.push_back(
                "in one variable every torsion-free quotient is free; a degenerate verdict "
                "only reflects dependent input rows - re-present the system with "
                "independent rows to decide it");
        if (n == 2)
            rep.diagnostics.push_back(
                "in two variables a controllable behavior always admits a presentation with "
                "nonzero maximal-minor ideal; dependent rows mean the presentation is "
                "non-minimal or the behavior is uncontrollable");
    }

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace hautus
