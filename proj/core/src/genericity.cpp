#include "hautus/genericity.hpp"

#include "json.hpp"

#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace hautus {

namespace {

void validate(const SampleSpec& s) {
    if (s.rows < 1 || s.cols < 1 || s.nvars < 1)
        throw std::invalid_argument("sample spec: rows, cols and nvars must be positive");
    if (s.degree < 0) throw std::invalid_argument("sample spec: degree must be >= 0");
    if (s.coeff_range < 1)
        throw std::invalid_argument("sample spec: coefficient range must be >= 1");
    if (!(s.density > 0.0) || s.density > 1.0)
        throw std::invalid_argument("sample spec: density must lie in (0, 1]");
    if (s.trials < 0) throw std::invalid_argument("sample spec: trials must be >= 0");
}

// All exponent vectors of total degree <= bound, in a fixed recursive order.
void enumerate_monomials(int nvars, int bound, std::vector<int>& exps, int pos,
                         const std::function<void(const std::vector<int>&)>& emit) {
    if (pos == nvars) {
        emit(exps);
        return;
    }
    for (int e = 0; e <= bound; ++e) {
        exps[static_cast<size_t>(pos)] = e;
        enumerate_monomials(nvars, bound - e, exps, pos + 1, emit);
    }
    exps[static_cast<size_t>(pos)] = 0;
}

long nonzero_coefficient(const SampleSpec& spec, SplitMix64& rng) {
    const std::uint64_t u = rng.below(2 * static_cast<std::uint64_t>(spec.coeff_range));
    if (u < static_cast<std::uint64_t>(spec.coeff_range))
        return -spec.coeff_range + static_cast<long>(u);
    return static_cast<long>(u) - spec.coeff_range + 1;
}

double fraction(int num, int den) { return den == 0 ? 0.0 : static_cast<double>(num) / den; }

} // namespace

Poly random_poly(const SampleSpec& spec, SplitMix64& rng) {
    validate(spec);
    Poly p = Poly::zero(spec.nvars);
    std::vector<int> exps(static_cast<size_t>(spec.nvars), 0);
    enumerate_monomials(spec.nvars, spec.degree, exps, 0, [&](const std::vector<int>& e) {
        if (!rng.bernoulli(spec.density)) return;
        const long c = nonzero_coefficient(spec, rng);
        p += Poly::term(Monomial(e), Rational(c));
    });
    return p;
}

PolyMatrix random_matrix(const SampleSpec& spec, SplitMix64& rng) {
    validate(spec);
    PolyMatrix m(spec.rows, spec.cols, spec.nvars);
    for (int i = 0; i < spec.rows; ++i)
        for (int j = 0; j < spec.cols; ++j) m.at(i, j) = random_poly(spec, rng);
    return m;
}

ExperimentResult run_experiment(const SampleSpec& spec) {
    validate(spec);
    ExperimentResult res;
    res.spec = spec;
    for (int trial = 0; trial < spec.trials; ++trial) {
        SplitMix64 rng = SplitMix64::substream(spec.seed, static_cast<std::uint64_t>(trial));
        try {
            const PolyMatrix P = random_matrix(spec, rng);

            int nonzero_minors = 0;
            for (const auto& e : minors(P, std::min(spec.rows, spec.cols)).entries)
                if (!e.value.is_zero()) ++nonzero_minors;
            if (nonzero_minors >= 1) ++res.maximal_ideal_nonzero;
            if (nonzero_minors >= 2) ++res.multi_minor;

            const Verdict v = hautus_verdict(P);
            switch (v.status) {
                case VerdictStatus::StronglyControllable: ++res.strongly_controllable; break;
                case VerdictStatus::Controllable: ++res.controllable; break;
                case VerdictStatus::Uncontrollable: ++res.uncontrollable; break;
                case VerdictStatus::Degenerate: ++res.degenerate; break;
                case VerdictStatus::Unknown: ++res.unknown; break;
            }
            res.per_trial.push_back(v.status);
        } catch (const std::exception& e) {
            res.failures.emplace_back(trial, e.what());
        }
    }
    return res;
}

std::string experiment_summary(const ExperimentResult& r) {
    const int total = r.spec.trials;
    std::ostringstream os;
    os << "shape " << r.spec.rows << " x " << r.spec.cols << ", vars " << r.spec.nvars
       << ", degree <= " << r.spec.degree << ", coefficients up to " << r.spec.coeff_range
       << ", density " << r.spec.density << ", trials " << total << ", seed " << r.spec.seed
       << "\n";
    os << "verdicts: strongly-controllable " << r.strongly_controllable << " | controllable "
       << r.controllable << " | uncontrollable " << r.uncontrollable << " | degenerate "
       << r.degenerate << " | unknown " << r.unknown << " | failures " << r.failures.size()
       << "\n";
    os << std::fixed << std::setprecision(3);
    os << "fractions: controllable-or-stronger "
       << fraction(r.strongly_controllable + r.controllable, total) << ", uncontrollable "
       << fraction(r.uncontrollable, total) << "\n";
    os << "maximal-minor ideal nonzero: " << r.maximal_ideal_nonzero << "/" << total << " ("
       << fraction(r.maximal_ideal_nonzero, total) << ")\n";
    os << "two or more nonzero maximal minors: " << r.multi_minor << "/" << total << " ("
       << fraction(r.multi_minor, total) << ")\n";
    for (const auto& [trial, reason] : r.failures)
        os << "trial " << trial << " failed: " << reason << "\n";
    return os.str();
}

std::string experiment_to_json(const ExperimentResult& r) {
    nlohmann::json j;
    j["schema"] = "hautus-generic/1";
    j["spec"] = {{"rows", r.spec.rows},         {"cols", r.spec.cols},
                 {"nvars", r.spec.nvars},       {"degree", r.spec.degree},
                 {"coeff_range", r.spec.coeff_range}, {"density", r.spec.density},
                 {"trials", r.spec.trials},     {"seed", r.spec.seed}};
    j["counts"] = {{"strongly_controllable", r.strongly_controllable},
                   {"controllable", r.controllable},
                   {"uncontrollable", r.uncontrollable},
                   {"degenerate", r.degenerate},
                   {"unknown", r.unknown},
                   {"failures", r.failures.size()}};
    j["fractions"] = {
        {"controllable_or_stronger",
         fraction(r.strongly_controllable + r.controllable, r.spec.trials)},
        {"uncontrollable", fraction(r.uncontrollable, r.spec.trials)},
        {"maximal_ideal_nonzero", fraction(r.maximal_ideal_nonzero, r.spec.trials)},
        {"multi_minor", fraction(r.multi_minor, r.spec.trials)}};
    nlohmann::json per_trial = nlohmann::json::array();
    for (VerdictStatus s : r.per_trial) per_trial.push_back(verdict_status_name(s));
    j["per_trial"] = std::move(per_trial);
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& [trial, reason] : r.failures)
        failures.push_back({{"trial", trial}, {"reason", reason}});
    j["failures"] = std::move(failures);
    return j.dump(2) + "\n";
}

} // namespace hautus
