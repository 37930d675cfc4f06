#pragma once

#include "hautus/analyzer.hpp"
#include "hautus/rng.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hautus {

// Shape class for the random-matrix experiments: entries are random
// polynomials of total degree <= degree with nonzero integer coefficients
// drawn uniformly from [-coeff_range, -1] u [1, coeff_range], each monomial
// included independently with probability density.
struct SampleSpec {
    int rows = 1;
    int cols = 2;
    int nvars = 2;
    int degree = 2;
    long coeff_range = 5;
    double density = 1.0;
    int trials = 100;
    std::uint64_t seed = 0;
};

struct ExperimentResult {
    SampleSpec spec;
    std::vector<VerdictStatus> per_trial; // completed trials, in trial order
    int strongly_controllable = 0;
    int controllable = 0;
    int uncontrollable = 0;
    int degenerate = 0;
    int unknown = 0;
    // trials whose maximal (min(rows,cols)-size) minor ideal is nonzero
    int maximal_ideal_nonzero = 0;
    // trials with two or more nonzero maximal minors
    int multi_minor = 0;
    std::vector<std::pair<int, std::string>> failures; // (trial index, reason)

    int completed() const {
        return strongly_controllable + controllable + uncontrollable + degenerate + unknown;
    }
};

// Deterministic given the rng state; both consume the stream sequentially.
Poly random_poly(const SampleSpec& spec, SplitMix64& rng);
PolyMatrix random_matrix(const SampleSpec& spec, SplitMix64& rng);

// Runs spec.trials independent trials, each on its own substream of
// spec.seed, applying the smooth-space controllability verdict.
ExperimentResult run_experiment(const SampleSpec& spec);

std::string experiment_summary(const ExperimentResult& r);
std::string experiment_to_json(const ExperimentResult& r);

} // namespace hautus
