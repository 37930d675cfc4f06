// Command-line front end: analyze / witness / generic subcommands.

#include "hautus/analyzer.hpp"
#include "hautus/errors.hpp"
#include "hautus/genericity.hpp"
#include "hautus/poly_text.hpp"
#include "hautus/polymatrix.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

std::vector<hautus::SignalSpace> parse_spaces(const std::vector<std::string>& names) {
    std::vector<hautus::SignalSpace> spaces;
    spaces.reserve(names.size());
    for (const auto& name : names) {
        const auto space = hautus::parse_signal_space(name);
        if (!space) throw std::invalid_argument("unknown signal space: " + name);
        spaces.push_back(*space);
    }
    return spaces;
}

int run_analyze(const std::string& input, const std::vector<std::string>& space_names,
                const std::string& format, const hautus::SearchBounds& bounds,
                bool no_witnesses) {
    const hautus::PolyMatrix system = hautus::parse_matrix_file(input);
    const hautus::Report report =
        hautus::analyze(system, parse_spaces(space_names), bounds, !no_witnesses);
    if (format == "json") {
        std::cout << hautus::report_to_json(report);
    } else {
        std::cout << hautus::report_to_text(report);
    }
    return 0;
}

void print_witness_text(const hautus::TorsionWitness& w) {
    std::cout << "torsion witness for " << hautus::poly_to_string(w.prime_factor) << ":\n";
    std::cout << "  x =";
    for (const auto& c : w.witness.components) std::cout << " (" << hautus::poly_to_string(c) << ")";
    std::cout << "\n  row combination:";
    for (const auto& c : w.certificate) std::cout << " (" << hautus::poly_to_string(c) << ")";
    std::cout << "\n";
}

json witness_to_json(const hautus::TorsionWitness& w) {
    json entry;
    entry["factor"] = hautus::poly_to_string(w.prime_factor);
    json xs = json::array();
    for (const auto& c : w.witness.components) xs.push_back(hautus::poly_to_string(c));
    entry["witness"] = xs;
    json cs = json::array();
    for (const auto& c : w.certificate) cs.push_back(hautus::poly_to_string(c));
    entry["certificate"] = cs;
    return entry;
}

int run_witness(const std::string& input, const std::string& factor_text,
                const std::string& format) {
    const hautus::PolyMatrix system = hautus::parse_matrix_file(input);

    std::vector<hautus::TorsionWitness> witnesses;
    std::vector<std::string> notes;
    if (!factor_text.empty()) {
        const hautus::Poly factor = hautus::parse_poly(factor_text, system.nvars());
        witnesses.push_back(hautus::torsion_witness(system, factor));
    } else {
        const hautus::SystemClass kind = hautus::classify(system).kind;
        if (kind == hautus::SystemClass::OverDetermined) {
            notes.push_back("over-determined system: witness extraction targets the "
                            "under-determined/square case");
        } else {
            const hautus::IdealBasis ideal = hautus::cancellation_ideal(system);
            if (ideal.is_zero_ideal()) {
                notes.push_back("degenerate system (all maximal minors vanish): no torsion "
                                "witness is defined");
            } else {
                for (const auto& f : hautus::uncontrollable_factors(system)) {
                    if (!f.irreducible) {
                        notes.push_back("factor " + hautus::poly_to_string(f.factor) +
                                        " was not certified irreducible; extraction may abort");
                    }
                    witnesses.push_back(hautus::torsion_witness(system, f.factor));
                }
                if (witnesses.empty()) {
                    notes.push_back("no uncontrollable factors: the system is controllable, "
                                    "nothing to witness");
                }
            }
        }
    }

    if (format == "json") {
        json doc;
        doc["schema"] = "hautus-witness/1";
        json list = json::array();
        for (const auto& w : witnesses) list.push_back(witness_to_json(w));
        doc["witnesses"] = list;
        doc["notes"] = notes;
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& w : witnesses) print_witness_text(w);
        for (const auto& n : notes) std::cout << "note: " << n << "\n";
    }
    return 0;
}

int run_generic(const hautus::SampleSpec& spec, const std::string& format) {
    const hautus::ExperimentResult result = hautus::run_experiment(spec);
    if (format == "json") {
        std::cout << hautus::experiment_to_json(result);
    } else {
        std::cout << hautus::experiment_summary(result);
    }
    return 0;
}

// Fill spec fields from a JSON config file; flags set on the command line win.
void apply_config(const std::string& path, CLI::App* generic, hautus::SampleSpec& spec) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    json doc = json::parse(in);
    auto take = [&](const char* key, const char* flag, auto& field) {
        using Field = std::remove_reference_t<decltype(field)>;
        if (doc.contains(key) && generic->count(flag) == 0) field = doc.at(key).get<Field>();
    };
    take("rows", "--rows", spec.rows);
    take("cols", "--cols", spec.cols);
    take("nvars", "--nvars", spec.nvars);
    take("degree", "--degree", spec.degree);
    take("coeff_range", "--coeff-range", spec.coeff_range);
    take("trials", "--trials", spec.trials);
    if (doc.contains("density") && generic->count("--density") == 0)
        spec.density = doc.at("density").get<double>();
    if (doc.contains("seed") && generic->count("--seed") == 0)
        spec.seed = doc.at("seed").get<std::uint64_t>();
}

int run_cli(int argc, char** argv) {
    CLI::App app{"symbolic controllability analyzer for linear constant-coefficient "
                 "PDE systems given by polynomial matrices"};
    app.require_subcommand(1);

    const std::vector<std::string> space_choices = {"smooth", "temperate", "periodic-rational",
                                                    "periodic-integer"};

    std::string input;
    std::string format = "text";
    std::vector<std::string> space_names;
    hautus::SearchBounds bounds;
    bool no_witnesses = false;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "classify a system and decide controllability per signal space");
    analyze->add_option("input", input, "matrix file ('vars: n' header, rows of polynomials)")
        ->required();
    analyze
        ->add_option("--space", space_names,
                     "signal space to decide (repeatable); smooth is always included")
        ->check(CLI::IsMember(space_choices));
    analyze->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("--real-grid-radius", bounds.real_grid_radius,
                        "integer grid radius for real-point search");
    analyze->add_option("--rational-height", bounds.rational_height,
                        "maximum numerator/denominator for rational-point search");
    analyze->add_option("--integer-box", bounds.integer_box_radius,
                        "fallback exhaustive box radius for integer-point search");
    analyze->add_flag("--no-witnesses", no_witnesses, "skip torsion-witness extraction");

    std::string factor_text;
    CLI::App* witness = app.add_subcommand(
        "witness", "extract torsion witnesses certifying uncontrollability");
    witness->add_option("input", input, "matrix file")->required();
    witness->add_option("--witness-factor", factor_text,
                        "irreducible factor to localize at (default: every detected factor)");
    witness->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    hautus::SampleSpec spec;
    std::string config_path;
    CLI::App* generic = app.add_subcommand(
        "generic", "Monte-Carlo experiment on random systems");
    generic->add_option("--rows", spec.rows, "matrix rows");
    generic->add_option("--cols", spec.cols, "matrix columns");
    generic->add_option("--nvars", spec.nvars, "number of variables");
    generic->add_option("--degree", spec.degree, "maximum total degree of entries");
    generic->add_option("--coeff-range", spec.coeff_range,
                        "coefficients drawn from [-c,-1] and [1,c]");
    generic->add_option("--density", spec.density, "per-monomial inclusion probability");
    generic->add_option("--trials", spec.trials, "number of random systems");
    generic->add_option("--seed", spec.seed, "base seed (per-trial substreams)");
    generic->add_option("--config", config_path, "JSON file with the same fields as the flags");
    generic->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 1;
    }

    if (analyze->parsed()) return run_analyze(input, space_names, format, bounds, no_witnesses);
    if (witness->parsed()) return run_witness(input, factor_text, format);
    if (generic->parsed()) {
        if (!config_path.empty()) apply_config(config_path, generic, spec);
        return run_generic(spec, format);
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const hautus::invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
