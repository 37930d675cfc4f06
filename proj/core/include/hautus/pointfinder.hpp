#pragma once

#include "hautus/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hautus {

enum class PointStatus { Yes, No, Unknown };

// Three-valued answer to "does the zero set meet R^n / Q^n / Z^n?".
//   Yes      — point, when present, re-evaluates to exactly zero. A Yes
//              without a point is backed by an exact root count ("sturm(k)").
//   No       — always carries a named certificate ("positivity", "parity",
//              "exhaustive-box(r)", "sturm(0)", "univariate-roots").
//   Unknown  — carries the search effort that was spent.
struct PointAnswer {
    PointStatus status = PointStatus::Unknown;
    std::optional<std::vector<Rational>> point;
    std::string certificate;
    std::string effort;

    static PointAnswer yes(std::vector<Rational> pt, std::string cert);
    static PointAnswer yes_uncarried(std::string cert);
    static PointAnswer no(std::string cert);
    static PointAnswer unknown(std::string effort);
};

struct SearchBounds {
    int real_grid_radius = 10;  // randomized real grid: coordinate range
    int rational_height = 8;    // rational search: |numerator|, denominator <= H
    int integer_box_radius = 25;
    std::uint64_t seed = 20240817; // randomized-grid determinism
    long eval_budget = 200000;     // cap on exact evaluations per query
};

// Preconditions for all three: p nonzero, non-constant, square-free.
// Univariate inputs are decided exactly (Sturm counts for R, full root
// computation for Q and Z). Multivariate Yes always carries an exact
// rational/integer point; No only appears with a sound certificate; anything
// else is Unknown. Consistency: a real No forces rational and integer No.
PointAnswer has_real_points(const Poly& p, const SearchBounds& bounds = {});
PointAnswer has_rational_points(const Poly& p, const SearchBounds& bounds = {});
PointAnswer has_integer_points(const Poly& p, const SearchBounds& bounds = {});

} // namespace hautus
